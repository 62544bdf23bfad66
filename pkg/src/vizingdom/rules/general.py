from vizingdom.bounds import suen_tarr_bound, power_bound, vizing_bound
from vizingdom.data import PairContext
from vizingdom.rules.base import BoundRule

# Rows proving the full Vizing inequality for G
VIZING_ROUTES = ('cograph', 'k4_p5', 'claw_p6', 'small_gamma')


class SuenTarrRule(BoundRule):
    def bound_rows(self, ctx: PairContext) -> None:
        ctx.add_row('suen_tarr', suen_tarr_bound(ctx.g.gamma, ctx.h.gamma), applicable=True)


class PowerRule(BoundRule):
    def bound_rows(self, ctx: PairContext) -> None:
        ctx.add_row('power', power_bound(ctx.g.pi, ctx.g.gamma, ctx.h.gamma), applicable=True, note=f'pi={ctx.g.pi}')


class VizingRule(BoundRule):
    """
    γ(G □ H) >= γ(G)γ(H). Report-only unless one of the forbidden-subgraph routes applies to G.
    """
    def before_report(self, ctx: PairContext) -> None:
        routes = [r.name for r in ctx.rows if r.name in VIZING_ROUTES and r.applicable]
        ctx.add_row('vizing', vizing_bound(ctx.g.gamma, ctx.h.gamma), applicable=True, proven=bool(routes),
                    note=','.join(routes))

from fractions import Fraction

from vizingdom.bounds import class_bounds, vizing_bound
from vizingdom.data import PairContext
from vizingdom.rules.base import BoundRule

# Vizing's inequality is known for γ(G) <= 3
SMALL_GAMMA = 3


class ClassPowerRule(BoundRule):
    """
    Power bounds for triangle and K_{1,r}-free G and for K_r and P_5-free G
    """
    def bound_rows(self, ctx: PairContext) -> None:
        for b in class_bounds(ctx.g.profile, ctx.g.gamma, ctx.h.gamma, ctx.instance.options.r_max,
                                  connected=ctx.g.connected):
            ctx.add_row(b.name, b.value, applicable=b.applicable, note=f'r={b.r}' if b.r else '')


class VizingRoutesRule(BoundRule):
    """
    Classes of G for which the full Vizing inequality holds
    """
    def bound_rows(self, ctx: PairContext) -> None:
        profile = ctx.g.profile
        value = vizing_bound(ctx.g.gamma, ctx.h.gamma)
        routes = {
            'cograph': ctx.g.connected and profile.cograph,
            'k4_p5': ctx.g.connected and profile.k_free[4] and profile.path_free[5],
            'claw_p6': ctx.g.connected and profile.claw_free and profile.path_free[6],
            'small_gamma': ctx.g.gamma <= SMALL_GAMMA,
        }
        for name, applicable in routes.items():
            ctx.add_row(name, value if applicable else Fraction(0), applicable=applicable)

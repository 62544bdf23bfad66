from fractions import Fraction

from vizingdom.bounds import critical_subgraph_approximation, critical_subgraph_satisfied
from vizingdom.data import PairContext
from vizingdom.rules.base import BoundRule


class ClawFreeTwoThirdsRule(BoundRule):
    """
    2/3 γ(G)γ(H) for claw-free G. Only reported when π(G) <= 2, where the power bound implies it.
    """
    def bound_rows(self, ctx: PairContext) -> None:
        applicable = ctx.g.profile.claw_free and ctx.g.pi <= 2
        value = Fraction(2, 3) * ctx.g.gamma * ctx.h.gamma if applicable else Fraction(0)
        ctx.add_row('claw_free_two_thirds', value, applicable=applicable, proven=False)


class CriticalSubgraphRule(BoundRule):
    """
    (γ(G) - sqrt(γ(G))) γ(H), for G asserted by the user to be a spanning subgraph of a suitable
    domination critical graph. The value is irrational: the row shows a rounded value and the verdict
    is decided by squaring.
    """
    def bound_rows(self, ctx: PairContext) -> None:
        if not ctx.instance.options.critical_subgraph:
            return
        ctx.add_row('critical_subgraph', critical_subgraph_approximation(ctx.g.gamma, ctx.h.gamma), applicable=True,
                    proven=False, note='user-asserted class membership',
                    satisfied=critical_subgraph_satisfied(ctx.gamma_product, ctx.g.gamma, ctx.h.gamma))

import logging
from fractions import Fraction

from vizingdom import settings
from vizingdom.bounds import diameter_bound, fair_bound
from vizingdom.data import GraphFacts, PairContext, SurveyOptions
from vizingdom.errors import SearchBudgetExceeded
from vizingdom.fair import fair_domination_number_bruteforce
from vizingdom.rules.base import BoundRule


class DiameterRule(BoundRule):
    """
    Level-set fair reception of size floor(d(G)/3) + 1
    """
    def bound_rows(self, ctx: PairContext) -> None:
        applicable = ctx.g.diameter is not None
        value = diameter_bound(ctx.g.diameter, ctx.h.gamma) if applicable else Fraction(0)
        ctx.add_row('diameter', value, applicable=applicable, note=f'd={ctx.g.diameter}' if applicable else '')


class FairReceptionRule(BoundRule):
    """
    γ(G □ H) >= max{γ(G)γ_F(H), γ_F(G)γ(H)} with exact γ_F of small factors
    """
    def analyzed_graph(self, facts: GraphFacts, options: SurveyOptions) -> None:
        if facts.graph.n > min(options.fair_max_vertices, settings.FAIR_HARD_LIMIT):
            return
        try:
            facts.gamma_f = fair_domination_number_bruteforce(facts.graph, options.budget)
        except SearchBudgetExceeded:
            logging.warning(f'Fair domination number of {facts.gid} exceeded the search budget')
            return
        if facts.gamma is not None and facts.gamma_f > facts.gamma:
            logging.warning(f'Fair domination number {facts.gamma_f} exceeds γ={facts.gamma} for {facts.gid}: '
                            f'check the external domination semantics')

    def bound_rows(self, ctx: PairContext) -> None:
        applicable = ctx.g.gamma_f is not None and ctx.h.gamma_f is not None
        value = fair_bound(ctx.g.gamma, ctx.g.gamma_f, ctx.h.gamma, ctx.h.gamma_f) if applicable else Fraction(0)
        note = f'gamma_f_g={ctx.g.gamma_f},gamma_f_h={ctx.h.gamma_f}' if applicable else ''
        ctx.add_row('fair', value, applicable=applicable, note=note)

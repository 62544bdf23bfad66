import logging
from fractions import Fraction
from typing import Optional

from vizingdom.classify import classify
from vizingdom.data import SurveyOptions, GraphFacts, PairContext, BoundReport
from vizingdom.domination import domination_number, power_with_witness
from vizingdom.errors import SearchBudgetExceeded, IntegrityError, DomainError
from vizingdom.graph import Graph, cartesian_product, is_connected, diameter
from vizingdom.graph6 import encode_graph6
from vizingdom.rules.base import RuleManager
from vizingdom.rules.diameter import DiameterRule, FairReceptionRule
from vizingdom.rules.forbidden import ClassPowerRule, VizingRoutesRule
from vizingdom.rules.general import SuenTarrRule, PowerRule, VizingRule
from vizingdom.rules.informational import ClawFreeTwoThirdsRule, CriticalSubgraphRule


class PairChecker:
    def __init__(self, options: SurveyOptions):
        self.options = options

        # Initialize rule system
        self.rules = RuleManager()
        self._init_default_rules()

    def _init_default_rules(self):
        self.rules.add(
            SuenTarrRule(), PowerRule(), ClassPowerRule(), VizingRoutesRule(), DiameterRule(), FairReceptionRule(),
            ClawFreeTwoThirdsRule(), CriticalSubgraphRule(), VizingRule(),
        )

    def analyze(self, gid: str, g: Graph, with_power: bool = True) -> GraphFacts:
        """
        Per-graph facts. π is only needed for graphs on the G side of a pair.
        """
        if g.n == 0:
            raise DomainError(f'Graph {gid} has no vertices')
        facts = GraphFacts(gid=gid, graph=g, connected=is_connected(g))
        try:
            facts.certificate = domination_number(g, self.options.budget)
            if with_power:
                facts.pi, facts.pi_witness = power_with_witness(g, self.options.budget)
        except SearchBudgetExceeded as ex:
            logging.warning(f'Graph {gid} could not be solved exactly: {ex}')
            facts.error = str(ex)
            return facts
        if facts.connected:
            facts.diameter = diameter(g)
        facts.profile = classify(g, self.options.r_max)

        self.rules.dispatch_all('analyzed_graph', facts=facts, options=self.options)
        logging.debug(f'Analyzed {facts.gid}: γ={facts.gamma} π={facts.pi} d={facts.diameter} γ_F={facts.gamma_f}')
        return facts

    def _create_context(self, g: GraphFacts, h: GraphFacts) -> PairContext:
        return PairContext(instance=self, g=g, h=h)

    def _verify_integrity(self, ctx: PairContext, report: BoundReport):
        if violations := report.violations:
            raise IntegrityError(
                f'Proven bound(s) {", ".join(r.name for r in violations)} violated for {report.g_id} x {report.h_id}',
                witness={
                    'report': report.to_json(),
                    'g': ctx.g.to_json(),
                    'h': ctx.h.to_json(),
                    'product_gamma_set': list(ctx.product_certificate.one_gamma_set),
                })
        if report.vizing_ratio < 1:
            logging.error(f'Vizing inequality fails for {report.g_id} x {report.h_id}: ratio {report.vizing_ratio}')

    def check(self, g: GraphFacts, h: GraphFacts) -> BoundReport:
        report = BoundReport(g_id=g.gid, h_id=h.gid, gamma_g=g.gamma, gamma_h=h.gamma, pi_g=g.pi, diam_g=g.diameter,
                             gamma_f_g=g.gamma_f, gamma_f_h=h.gamma_f)
        if g.error or h.error:
            report.inexact = g.error or h.error
            return report

        ctx = self._create_context(g, h)
        ctx.product = cartesian_product(g.graph, h.graph, cap=self.options.product_cap)
        try:
            ctx.product_certificate = domination_number(ctx.product, self.options.budget)
        except SearchBudgetExceeded as ex:
            logging.warning(f'Product {g.gid} x {h.gid} could not be solved exactly: {ex}')
            report.inexact = str(ex)
            return report

        self.rules.dispatch_all('bound_rows', ctx=ctx)
        self.rules.dispatch_all('before_report', ctx=ctx)

        report.gamma_product = ctx.gamma_product
        report.bounds = ctx.rows
        report.vizing_ratio = Fraction(ctx.gamma_product, g.gamma * h.gamma)
        self._verify_integrity(ctx, report)
        return report


def check_pair(g: Graph, h: Graph, options: Optional[SurveyOptions] = None,
               g_id: Optional[str] = None, h_id: Optional[str] = None) -> BoundReport:
    checker = PairChecker(options or SurveyOptions())
    g_facts = checker.analyze(g_id or encode_graph6(g), g)
    h_facts = checker.analyze(h_id or encode_graph6(h), h, with_power=False)
    return checker.check(g_facts, h_facts)

import logging

from vizingdom.data import GraphFacts, PairContext, SurveyOptions


class BoundRule:
    def analyzed_graph(self, facts: GraphFacts, options: SurveyOptions) -> None:
        """
        Called once per corpus graph after γ, π, diameter and the class profile are known.
        Allows attaching further per-graph facts.
        """
        pass

    def bound_rows(self, ctx: PairContext) -> None:
        """
        Called for every pair once γ(G □ H) is known. Rules append their rows with ctx.add_row.
        """
        pass

    def before_report(self, ctx: PairContext) -> None:
        """
        Called after all rules produced their rows, before the report is assembled.
        Allows rows that depend on the rows of other rules.
        """
        pass


class RuleManager:
    def __init__(self):
        self.rules = []

    def add(self, *rules: BoundRule):
        self.rules.extend(rules)

    def dispatch_all(self, name, **kwargs):
        logging.debug(f'Calling {name} on {len(self.rules)} rules')
        for r in self.rules:
            if cb := getattr(r, name):
                cb(**kwargs)

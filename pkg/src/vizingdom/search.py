import dataclasses
from typing import Optional

from vizingdom import settings
from vizingdom.errors import SearchBudgetExceeded


@dataclasses.dataclass(frozen=True)
class SearchBudget:
    """
    Node limit of a single exhaustive search
    """
    node_limit: int = dataclasses.field(default_factory=lambda: settings.NODE_BUDGET)

    """
    Maximum number of γ-sets an enumeration may produce
    """
    enumeration_cap: int = dataclasses.field(default_factory=lambda: settings.ENUMERATION_CAP)


class NodeCounter:
    def __init__(self, budget: Optional[SearchBudget], what: str):
        self.budget = budget or SearchBudget()
        self.what = what
        self.nodes = 0

    def tick(self, where: str = ''):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise SearchBudgetExceeded(
                f'{self.what}: node budget of {self.budget.node_limit} exhausted' + (f' at {where}' if where else ''))

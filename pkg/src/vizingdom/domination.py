import dataclasses
import logging
from enum import Enum
from typing import Iterable, Optional

from vizingdom.classify import iter_cliques
from vizingdom.errors import DomainError, EnumerationCapExceeded
from vizingdom.graph import Graph, iter_bits, members, popcount, to_mask, is_connected
from vizingdom.search import SearchBudget, NodeCounter


@dataclasses.dataclass(frozen=True)
class DominationCertificate:
    gamma: int
    one_gamma_set: tuple[int, ...]

    """
    Every γ-set in lexicographic order, present when enumeration was requested
    """
    all_gamma_sets: Optional[tuple[tuple[int, ...], ...]] = None

    def to_json(self) -> dict:
        out = {'gamma': self.gamma, 'gamma_set': list(self.one_gamma_set)}
        if self.all_gamma_sets is not None:
            out['all_gamma_sets'] = [list(s) for s in self.all_gamma_sets]
        return out


def _require_nonempty(g: Graph):
    if g.n == 0:
        raise DomainError('Graph has no vertices')


def _as_mask(g: Graph, vertices: Iterable[int]) -> int:
    vertices = list(vertices)
    for v in vertices:
        g.check_vertex(v)
    return to_mask(vertices)


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    return g.is_dominating(_as_mask(g, vertices))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    return g.is_independent(_as_mask(g, vertices))


def _coverage(g: Graph, w: int, undominated: int) -> int:
    return popcount(g.closed_rows[w] & undominated)


def greedy_dominating_set(g: Graph, independent: bool = False) -> int:
    """
    Max-coverage greedy. With independent=True only undominated vertices are picked,
    which yields an independent dominating set.
    """
    chosen, undominated = 0, g.full_mask
    while undominated:
        candidates = undominated if independent else g.full_mask
        w = max(iter_bits(candidates), key=lambda v: (_coverage(g, v, undominated), -v))
        chosen |= 1 << w
        undominated &= ~g.closed_rows[w]
    return chosen


def _lower_bound(g: Graph, undominated: int, allowed: int) -> int:
    best_cover = 0
    for u in iter_bits(undominated):
        for w in iter_bits(g.closed_rows[u] & allowed):
            best_cover = max(best_cover, _coverage(g, w, undominated))
    if best_cover == 0:
        return g.n + 1
    return -(-popcount(undominated) // best_cover)


def _branch_vertex(g: Graph, undominated: int, allowed: int) -> int:
    return min(iter_bits(undominated), key=lambda u: (popcount(g.closed_rows[u] & allowed), u))


def _minimum_dominating_set(g: Graph, budget: Optional[SearchBudget], independent: bool) -> int:
    what = 'independent domination' if independent else 'domination'
    counter = NodeCounter(budget, what=what)
    best = greedy_dominating_set(g, independent=independent)
    best_size = popcount(best)

    def search(chosen: int, undominated: int, size: int):
        nonlocal best, best_size
        counter.tick(f'{size} chosen, incumbent {best_size}')
        if not undominated:
            if size < best_size:
                best, best_size = chosen, size
            return
        # An independent set may only grow by vertices outside N[chosen]
        allowed = undominated if independent else g.full_mask
        if size + _lower_bound(g, undominated, allowed) >= best_size:
            return
        u = _branch_vertex(g, undominated, allowed)
        for w in sorted(iter_bits(g.closed_rows[u] & allowed), key=lambda v: (-_coverage(g, v, undominated), v)):
            search(chosen | 1 << w, undominated & ~g.closed_rows[w], size + 1)

    search(0, g.full_mask, 0)
    logging.debug(f'Exact {what} of {g.n}-vertex graph: {best_size} after {counter.nodes} nodes')
    return best


def enumerate_gamma_sets(g: Graph, budget: Optional[SearchBudget] = None,
                         gamma: Optional[int] = None) -> list[tuple[int, ...]]:
    """
    All dominating sets of size γ(G) in lexicographic order.

    Each branch picks the smallest member of the set inside N[u] for the branch vertex u and forbids the
    earlier candidates, so every γ-set is produced exactly once.
    """
    _require_nonempty(g)
    budget = budget or SearchBudget()
    if gamma is None:
        gamma = popcount(_minimum_dominating_set(g, budget, independent=False))
    counter = NodeCounter(budget, what='γ-set enumeration')
    found = []

    def search(chosen: int, undominated: int, size: int, forbidden: int):
        counter.tick(f'{len(found)} γ-sets found')
        if not undominated:
            found.append(chosen)
            if len(found) > budget.enumeration_cap:
                raise EnumerationCapExceeded(f'More than {budget.enumeration_cap} γ-sets')
            return
        allowed = g.full_mask & ~forbidden
        if size + _lower_bound(g, undominated, allowed) > gamma:
            return
        u = _branch_vertex(g, undominated, allowed)
        for w in iter_bits(g.closed_rows[u] & allowed):
            search(chosen | 1 << w, undominated & ~g.closed_rows[w], size + 1, forbidden)
            forbidden |= 1 << w

    search(0, g.full_mask, 0, 0)
    return sorted(members(mask) for mask in found)


def domination_number(g: Graph, budget: Optional[SearchBudget] = None,
                      enumerate_all: bool = False) -> DominationCertificate:
    _require_nonempty(g)
    best = _minimum_dominating_set(g, budget, independent=False)
    if not g.is_dominating(best):
        raise AssertionError('Solver returned a non-dominating set')
    gamma = popcount(best)
    all_sets = None
    if enumerate_all:
        all_sets = tuple(enumerate_gamma_sets(g, budget, gamma=gamma))
    return DominationCertificate(gamma=gamma, one_gamma_set=members(best), all_gamma_sets=all_sets)


def minimum_independent_dominating_set(g: Graph, budget: Optional[SearchBudget] = None) -> tuple[int, ...]:
    _require_nonempty(g)
    return members(_minimum_dominating_set(g, budget, independent=True))


def independent_domination_number(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    return len(minimum_independent_dominating_set(g, budget))


def independent_gamma_sets(g: Graph, gamma_sets: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return [s for s in gamma_sets if g.is_independent(to_mask(s))]


def allegiance(g: Graph, d: Iterable[int]) -> int:
    """
    a_G(D) = max over v of |D ∩ N[v]|
    """
    mask = _as_mask(g, d)
    if not g.is_dominating(mask):
        raise DomainError(f'{sorted(members(mask))} does not dominate the graph')
    return max(popcount(row & mask) for row in g.closed_rows)


def power_with_witness(g: Graph, budget: Optional[SearchBudget] = None) -> tuple[int, tuple[int, ...]]:
    """
    π(G) with the lexicographically first γ-set attaining it
    """
    gamma_sets = enumerate_gamma_sets(g, budget)
    return min(((allegiance(g, s), s) for s in gamma_sets), key=lambda t: t[0])


def power(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    return power_with_witness(g, budget)[0]


class DominatingKind(Enum):
    CLIQUE = 'clique'
    P3 = 'p3'


def _dominating_p3(g: Graph, counter: NodeCounter) -> Optional[tuple[int, ...]]:
    for c in range(g.n):
        for a in iter_bits(g.rows[c]):
            for b in iter_bits(g.rows[c] & ~g.closed_rows[a] & (-1 << (a + 1))):
                counter.tick('P_3 search')
                if g.is_dominating((1 << a) | (1 << b) | (1 << c)):
                    return a, c, b
    return None


def dominating_clique_or_p3(g: Graph, budget: Optional[SearchBudget] = None) \
        -> Optional[tuple[DominatingKind, tuple[int, ...]]]:
    """
    Dominating set inducing a clique or a P_3, searched by increasing cardinality.
    A returned clique is a smallest dominating clique; a P_3 is returned in path order.
    """
    if not is_connected(g):
        raise DomainError('Graph is not connected')
    counter = NodeCounter(budget, what='dominating clique or P_3')
    for size in range(1, g.n + 1):
        any_clique = False
        for clique in iter_cliques(g, size):
            any_clique = True
            counter.tick(f'cliques of size {size}')
            if g.is_dominating(to_mask(clique)):
                return DominatingKind.CLIQUE, clique
        if size == 3 and (path := _dominating_p3(g, counter)):
            return DominatingKind.P3, path
        if not any_clique and size >= 3:
            break
    return None


@dataclasses.dataclass(frozen=True)
class StructureDecomposition:
    gamma_set: tuple[int, ...]

    """
    P_i by position i in gamma_set, present (possibly empty) for every i
    """
    private: dict[int, frozenset[int]]

    """
    Nonempty P_S keyed by the set S of positions, |S| >= 2
    """
    shared: dict[frozenset[int], frozenset[int]]

    @property
    def cells(self) -> dict[int, frozenset[int]]:
        return {i: frozenset({v}) | self.private[i] for i, v in enumerate(self.gamma_set)}

    def chamber(self, indices: Iterable[int]) -> frozenset[int]:
        indices = frozenset(indices)
        out = frozenset().union(*(self.cells[i] for i in indices))
        return out.union(*(p for s, p in self.shared.items() if s <= indices))

    def to_json(self) -> dict:
        return {
            'gamma_set': list(self.gamma_set),
            'private': {str(i): sorted(p) for i, p in sorted(self.private.items())},
            'shared': [
                {'indices': sorted(s), 'vertices': [self.gamma_set[i] for i in sorted(s)], 'members': sorted(p)}
                for s, p in sorted(self.shared.items(), key=lambda t: sorted(t[0]))
            ],
        }


def decompose(g: Graph, gamma_set: Iterable[int]) -> StructureDecomposition:
    gamma_set = tuple(gamma_set)
    mask = _as_mask(g, gamma_set)
    if popcount(mask) != len(gamma_set):
        raise DomainError(f'Repeated vertex in {gamma_set}')
    if not g.is_dominating(mask):
        raise DomainError(f'{gamma_set} does not dominate the graph')

    position = {v: i for i, v in enumerate(gamma_set)}
    private = {i: set() for i in range(len(gamma_set))}
    shared = {}
    for v in iter_bits(g.full_mask & ~mask):
        s = frozenset(position[u] for u in iter_bits(g.rows[v] & mask))
        if len(s) == 1:
            private[next(iter(s))].add(v)
        else:
            shared.setdefault(s, set()).add(v)
    return StructureDecomposition(
        gamma_set=gamma_set,
        private={i: frozenset(p) for i, p in private.items()},
        shared={s: frozenset(p) for s, p in shared.items()},
    )

import dataclasses
from enum import Enum
from typing import Iterator, Optional

from vizingdom import settings
from vizingdom.errors import DomainError
from vizingdom.graph import Graph, iter_bits, popcount

PATH_ORDERS = (4, 5, 6)


class PatternKind(Enum):
    CLIQUE = 'K_r'
    STAR = 'K_1r'
    PATH = 'P_k'


@dataclasses.dataclass(frozen=True)
class Pattern:
    kind: PatternKind
    size: int

    def __post_init__(self):
        if self.size < 2:
            raise DomainError(f'Pattern parameter must be at least 2, got {self.size}')

    @property
    def name(self) -> str:
        if self.kind == PatternKind.CLIQUE:
            return f'K_{self.size}'
        elif self.kind == PatternKind.STAR:
            return f'K_1,{self.size}'
        return f'P_{self.size}'

    @property
    def order(self) -> int:
        return self.size + 1 if self.kind == PatternKind.STAR else self.size

    def as_graph(self) -> Graph:
        """
        The pattern labelled in witness order: clique members, star center first, path in order.
        """
        if self.kind == PatternKind.CLIQUE:
            edges = [(i, j) for i in range(self.size) for j in range(i + 1, self.size)]
        elif self.kind == PatternKind.STAR:
            edges = [(0, i) for i in range(1, self.size + 1)]
        else:
            edges = [(i, i + 1) for i in range(self.size - 1)]
        return Graph.from_edges(self.order, edges)


def _above(v: int) -> int:
    return -1 << (v + 1)


def iter_cliques(g: Graph, size: int, candidates: Optional[int] = None, chosen: tuple = ()) -> Iterator[tuple[int, ...]]:
    """
    All cliques of the given size in increasing vertex order
    """
    if len(chosen) == size:
        yield chosen
        return
    candidates = g.full_mask if candidates is None else candidates
    if popcount(candidates) < size - len(chosen):
        return
    for v in iter_bits(candidates):
        yield from iter_cliques(g, size, candidates & g.rows[v] & _above(v), chosen + (v,))


def _iter_independent(g: Graph, size: int, candidates: int, chosen: tuple = ()) -> Iterator[tuple[int, ...]]:
    if len(chosen) == size:
        yield chosen
        return
    if popcount(candidates) < size - len(chosen):
        return
    for v in iter_bits(candidates):
        yield from _iter_independent(g, size, candidates & ~g.closed_rows[v] & _above(v), chosen + (v,))


def _find_induced_path(g: Graph, k: int) -> Optional[tuple[int, ...]]:
    def extend(path: list[int], blocked: int) -> Optional[tuple[int, ...]]:
        if len(path) == k:
            return tuple(path)
        last = path[-1]
        # A new vertex may only touch the current end of the path
        for w in iter_bits(g.rows[last] & ~blocked):
            path.append(w)
            if found := extend(path, blocked | g.closed_rows[last]):
                return found
            path.pop()
        return None

    for start in range(g.n):
        if found := extend([start], 1 << start):
            return found
    return None


def has_induced(g: Graph, pattern: Pattern) -> Optional[tuple[int, ...]]:
    """
    Return an ordered vertex tuple inducing exactly the pattern, or None.
    """
    if pattern.kind == PatternKind.CLIQUE:
        return next(iter_cliques(g, pattern.size), None)
    elif pattern.kind == PatternKind.STAR:
        for c in range(g.n):
            if leaves := next(_iter_independent(g, pattern.size, g.rows[c]), None):
                return (c,) + leaves
        return None
    return _find_induced_path(g, pattern.size)


def is_induced_witness(g: Graph, pattern: Pattern, witness: tuple[int, ...]) -> bool:
    return len(set(witness)) == pattern.order and g.subgraph(witness) == pattern.as_graph()


@dataclasses.dataclass()
class ClassProfile:
    r_max: int
    k_free: dict[int, bool] = dataclasses.field(default_factory=dict)
    star_free: dict[int, bool] = dataclasses.field(default_factory=dict)
    path_free: dict[int, bool] = dataclasses.field(default_factory=dict)

    """
    Witness tuples for every false verdict, keyed by pattern name (e.g. "K_3", "K_1,4", "P_5")
    """
    witnesses: dict[str, tuple[int, ...]] = dataclasses.field(default_factory=dict)

    @property
    def triangle_free(self) -> bool:
        return self.k_free[3]

    @property
    def claw_free(self) -> bool:
        return self.star_free[3]

    @property
    def cograph(self) -> bool:
        return self.path_free[4]

    def check(self, predicate: str) -> bool:
        """
        Evaluate a predicate name: triangle_free, claw_free, cograph, k_free:R, star_free:R, path_free:K
        """
        name, _, arg = predicate.strip().partition(':')
        if not arg and name in ('triangle_free', 'claw_free', 'cograph'):
            return getattr(self, name)
        table = {'k_free': self.k_free, 'star_free': self.star_free, 'path_free': self.path_free}.get(name)
        if table is None or not arg.isdigit() or int(arg) not in table:
            raise DomainError(f'Unknown class predicate "{predicate}"')
        return table[int(arg)]

    def to_json(self) -> dict:
        out = {
            'triangle_free': self.triangle_free,
            'claw_free': self.claw_free,
        }
        for key, table in (('k_free', self.k_free), ('star_free', self.star_free), ('path_free', self.path_free)):
            out |= {f'{key}[{r}]': v for r, v in sorted(table.items())}
        out['witnesses'] = {name: list(w) for name, w in sorted(self.witnesses.items())}
        return out


def _fill(g: Graph, profile: ClassProfile, table: dict, kind: PatternKind, sizes):
    # Freeness is monotone in the pattern size, so the search stops at the first free size
    free = False
    for size in sizes:
        if not free:
            pattern = Pattern(kind, size)
            if witness := has_induced(g, pattern):
                profile.witnesses[pattern.name] = witness
            else:
                free = True
        table[size] = free


def classify(g: Graph, r_max: Optional[int] = None) -> ClassProfile:
    r_max = settings.R_MAX if r_max is None else r_max
    if r_max < 3:
        raise DomainError(f'r_max must be at least 3, got {r_max}')
    profile = ClassProfile(r_max=r_max)
    _fill(g, profile, profile.k_free, PatternKind.CLIQUE, range(2, r_max + 1))
    _fill(g, profile, profile.star_free, PatternKind.STAR, range(2, r_max + 1))
    _fill(g, profile, profile.path_free, PatternKind.PATH, PATH_ORDERS)
    return profile

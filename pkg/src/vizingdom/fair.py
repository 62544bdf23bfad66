import dataclasses
import itertools
import logging
from pathlib import Path
from typing import Iterable, Iterator, Optional

from vizingdom import settings
from vizingdom.errors import DomainError, SizeGuardError, IntegrityError, InvalidGraphError
from vizingdom.graph import Graph, bfs_layers, eccentricities, is_connected, iter_bits, members, popcount, to_mask
from vizingdom.search import SearchBudget, NodeCounter

USER_SUPPLIED = 'user-supplied'


@dataclasses.dataclass()
class FairReception:
    sets: tuple[frozenset[int], ...]
    z: frozenset[int]

    """
    How the reception was obtained: a level-set residue case or "user-supplied"
    """
    provenance: str = USER_SUPPLIED

    """
    None until verify_fair_reception ran on it
    """
    verified: Optional[bool] = dataclasses.field(default=None, init=False)

    @property
    def k(self) -> int:
        return len(self.sets)

    @classmethod
    def build(cls, g: Graph, sets: Iterable[Iterable[int]], provenance: str = USER_SUPPLIED) -> 'FairReception':
        sets = tuple(frozenset(s) for s in sets)
        covered = set()
        for i, s in enumerate(sets):
            if not s:
                raise DomainError(f'Set S_{i + 1} is empty')
            for v in s:
                g.check_vertex(v)
            if covered & s:
                raise DomainError(f'Set S_{i + 1} overlaps an earlier set in {sorted(covered & s)}')
            covered |= s
        return cls(sets=sets, z=frozenset(range(g.n)) - covered, provenance=provenance)

    def to_json(self) -> dict:
        return {
            'k': self.k,
            'sets': [sorted(s) for s in self.sets],
            'z': sorted(self.z),
            'verified': self.verified,
            'provenance': self.provenance,
        }


@dataclasses.dataclass(frozen=True)
class FairCounterexample:
    indices: tuple[int, ...]
    witness: tuple[int, ...]
    score: int

    @property
    def ell(self) -> int:
        return len(self.indices)

    def to_json(self) -> dict:
        return {'sets': [i + 1 for i in self.indices], 'ell': self.ell, 'witness': list(self.witness), 'score': self.score}


@dataclasses.dataclass(frozen=True)
class FairVerdict:
    verified: bool
    counterexample: Optional[FairCounterexample] = None

    def to_json(self) -> dict:
        return {
            'verified': self.verified,
            'counterexample': self.counterexample.to_json() if self.counterexample else None,
        }


def externally_dominates(g: Graph, d: Iterable[int], a: Iterable[int]) -> bool:
    """
    True iff every vertex of A has a neighbour in D - A
    """
    a_mask = to_mask(a)
    outside = to_mask(d) & ~a_mask
    return all(g.rows[v] & outside for v in iter_bits(a_mask))


def fair_score(fr: FairReception, d: Iterable[int]) -> int:
    d = frozenset(d)
    return len(d & fr.z) + sum(len(s & d) - 1 for s in fr.sets if s & d)


def _low_fair_score(g: Graph, target: int, ell: int, set_masks: list[int], z_mask: int, counter: NodeCounter,
                    where: str) -> Optional[tuple[int, int]]:
    """
    Search a set D externally dominating `target` with fair score below ell.

    Only vertices outside the target can help, and dropping vertices never raises the score,
    so D is searched among subsets of N(target) - target.
    """
    owner = {}
    for j, s in enumerate(set_masks):
        for v in iter_bits(s):
            owner[v] = j

    def step_cost(d: int, w: int) -> int:
        if z_mask >> w & 1:
            return 1
        return 1 if d & set_masks[owner[w]] else 0

    def search(d: int, uncovered: int, score: int, forbidden: int) -> Optional[tuple[int, int]]:
        counter.tick(where)
        if not uncovered:
            return d, score
        allowed = ~target & ~forbidden
        a = min(iter_bits(uncovered), key=lambda v: (popcount(g.rows[v] & allowed), v))
        for w in iter_bits(g.rows[a] & allowed):
            new_score = score + step_cost(d, w)
            if new_score < ell:
                if found := search(d | 1 << w, uncovered & ~g.rows[w], new_score, forbidden):
                    return found
            forbidden |= 1 << w
        return None

    return search(0, target, 0, 0)


def _verify(g: Graph, fr: FairReception, counter: NodeCounter) -> FairVerdict:
    set_masks = [to_mask(s) for s in fr.sets]
    z_mask = to_mask(fr.z)
    for ell in range(1, fr.k + 1):
        for indices in itertools.combinations(range(fr.k), ell):
            target = 0
            for i in indices:
                target |= set_masks[i]
            # A vertex with its whole neighbourhood inside the target cannot be externally dominated
            if any(not g.rows[v] & ~target for v in iter_bits(target)):
                continue
            where = 'sets ' + ','.join(str(i + 1) for i in indices)
            if found := _low_fair_score(g, target, ell, set_masks, z_mask, counter, where):
                d, score = found
                return FairVerdict(False, FairCounterexample(indices=indices, witness=members(d), score=score))
    return FairVerdict(True)


def verify_fair_reception(g: Graph, fr: FairReception, budget: Optional[SearchBudget] = None) -> FairVerdict:
    FairReception.build(g, fr.sets)
    verdict = _verify(g, fr, NodeCounter(budget, what='fair reception verifier'))
    fr.verified = verdict.verified
    return verdict


@dataclasses.dataclass(frozen=True)
class LevelSets:
    origin: int
    levels: tuple[frozenset[int], ...]

    @property
    def depth(self) -> int:
        return len(self.levels) - 1


def build_level_sets(g: Graph, origin: int) -> LevelSets:
    if not is_connected(g):
        raise DomainError('Level sets need a connected graph')
    return LevelSets(origin=origin, levels=tuple(frozenset(iter_bits(layer)) for layer in bfs_layers(g, origin)))


def _group_levels(d: int) -> list[range]:
    """
    Level indices per set: d ≡ 2 (mod 3) uses triples from V_0; otherwise V_0 ∪ V_1 comes first,
    then consecutive triples, the last group shrinking to V_{d-1} ∪ V_d when d ≡ 0 (mod 3).
    """
    if d % 3 == 2:
        groups, i = [], 0
    else:
        groups, i = [range(0, min(1, d) + 1)], 2
    while i <= d:
        end = min(i + 2, d)
        groups.append(range(i, end + 1))
        i = end + 1
    return groups


def level_set_fair_reception(g: Graph, budget: Optional[SearchBudget] = None) -> FairReception:
    ecc = eccentricities(g)
    d = max(ecc)
    origin = ecc.index(d)
    levels = build_level_sets(g, origin).levels
    fr = FairReception.build(
        g, [frozenset().union(*(levels[i] for i in group)) for group in _group_levels(d)],
        provenance=f'level-set d≡{d % 3} (mod 3)')
    verdict = verify_fair_reception(g, fr, budget)
    if not verdict.verified:
        raise IntegrityError('Level-set construction is not a fair reception',
                             witness={'reception': fr.to_json(), 'verdict': verdict.to_json()})
    logging.debug(f'Level-set fair reception of size {fr.k} from origin {origin}, diameter {d}')
    return fr


def _iter_families(n: int, k: int) -> Iterator[list[int]]:
    """
    Families of exactly k disjoint nonempty blocks over 0..n-1 (vertices outside all blocks form Z),
    each family produced once: blocks are opened in order of their smallest vertex.
    """
    blocks = []

    def assign(v: int) -> Iterator[list[int]]:
        if k - len(blocks) > n - v:
            return
        if v == n:
            yield list(blocks)
            return
        for j in range(len(blocks)):
            blocks[j] |= 1 << v
            yield from assign(v + 1)
            blocks[j] &= ~(1 << v)
        if len(blocks) < k:
            blocks.append(1 << v)
            yield from assign(v + 1)
            blocks.pop()
        yield from assign(v + 1)

    yield from assign(0)


def fair_domination_certificate(g: Graph, budget: Optional[SearchBudget] = None) -> FairReception:
    """
    A largest fair reception by exhaustive search over set families
    """
    if g.n > settings.FAIR_HARD_LIMIT:
        raise SizeGuardError(f'Exact fair domination number is limited to {settings.FAIR_HARD_LIMIT} vertices')
    if g.n == 0:
        raise DomainError('Graph has no vertices')
    counter = NodeCounter(budget, what='fair domination number')
    for k in range(g.n, 0, -1):
        for family in _iter_families(g.n, k):
            fr = FairReception.build(g, map(members, family))
            if _verify(g, fr, counter).verified:
                fr.verified = True
                return fr
    raise AssertionError('The single set V(G) is always a fair reception')


def fair_domination_number_bruteforce(g: Graph, budget: Optional[SearchBudget] = None) -> int:
    return fair_domination_certificate(g, budget).k


def read_fair_reception(path: Path, g: Graph) -> FairReception:
    """
    One set per line, vertices separated by whitespace or commas. Blank lines and # comments are skipped.
    """
    sets = []
    with open(path, 'r') as f:
        for line_no, line in enumerate(f, start=1):
            line = line.split('#', 1)[0].replace(',', ' ').strip()
            if not line:
                continue
            try:
                sets.append([int(v) for v in line.split()])
            except ValueError:
                raise InvalidGraphError(f'Invalid vertex on line {line_no} of {path}') from None
    return FairReception.build(g, sets)

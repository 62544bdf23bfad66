import dataclasses
import math
from functools import cached_property
from typing import Iterable, Iterator, Optional

import networkx as nx

from vizingdom import settings
from vizingdom.errors import InvalidGraphError, DomainError, GraphSizeError


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count('1')


@dataclasses.dataclass(frozen=True)
class Graph:
    """
    Immutable simple graph on the vertices 0..n-1.

    Every vertex has a row: the bitmask of its open neighbourhood. Python ints have no fixed width,
    so product graphs above 64 vertices use the very same representation as the small factors.
    """
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise InvalidGraphError(f'Expected {self.n} adjacency rows, got {len(self.rows)}')
        full = self.full_mask
        for v, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise InvalidGraphError(f'Neighbour of vertex {v} out of range')
            if row >> v & 1:
                raise InvalidGraphError(f'Loop at vertex {v}')
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise InvalidGraphError(f'Edge {v}-{u} is not symmetric')

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> 'Graph':
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f'Edge {u}-{v} out of range for {n} vertices')
            if u == v:
                raise InvalidGraphError(f'Loop at vertex {u}')
            if rows[u] >> v & 1:
                raise InvalidGraphError(f'Multi-edge {u}-{v}')
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n=n, rows=tuple(rows))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        g = nx.convert_node_labels_to_integers(g, ordering='sorted')
        return cls.from_edges(g.number_of_nodes(), g.edges())

    def to_networkx(self) -> nx.Graph:
        out = nx.Graph()
        out.add_nodes_from(range(self.n))
        out.add_edges_from(self.edges())
        return out

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def closed_rows(self) -> tuple[int, ...]:
        return tuple(row | (1 << v) for v, row in enumerate(self.rows))

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(iter_bits(row)) for row in self.rows)

    @property
    def closed_adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(iter_bits(row)) for row in self.closed_rows)

    def check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise DomainError(f'Vertex {v} out of range for {self.n} vertices')

    def neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.rows[v])

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    @cached_property
    def max_degree(self) -> int:
        return max(map(popcount, self.rows), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    @cached_property
    def num_edges(self) -> int:
        return sum(map(popcount, self.rows)) // 2

    def subgraph(self, vertices: tuple[int, ...]) -> 'Graph':
        """
        Induced subgraph, relabelled so that vertices[i] becomes vertex i
        """
        return Graph.from_edges(len(vertices), [
            (i, j) for i in range(len(vertices)) for j in range(i + 1, len(vertices))
            if self.has_edge(vertices[i], vertices[j])
        ])

    def dominated_by(self, mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= self.closed_rows[v]
        return out

    def is_dominating(self, mask: int) -> bool:
        return self.dominated_by(mask) == self.full_mask

    def is_independent(self, mask: int) -> bool:
        return all(not self.rows[v] & mask for v in iter_bits(mask))


def cartesian_product(g: Graph, h: Graph, cap: Optional[int] = None) -> Graph:
    """
    G □ H with row-major pair indexing: (u, v) becomes u * |V(H)| + v
    """
    if g.n == 0 or h.n == 0:
        raise DomainError('Cartesian product needs two nonempty graphs')
    cap = settings.PRODUCT_CAP if cap is None else cap
    if g.n * h.n > cap:
        raise GraphSizeError(f'Product has {g.n * h.n} vertices, cap is {cap}')

    rows = []
    for u in range(g.n):
        g_neighbors = g.neighbors(u)
        for v in range(h.n):
            row = h.rows[v] << (u * h.n)
            for w in g_neighbors:
                row |= 1 << (w * h.n + v)
            rows.append(row)
    return Graph(n=g.n * h.n, rows=tuple(rows))


def bfs_layers(g: Graph, v: int) -> list[int]:
    """
    Bitmasks of the vertices at distance 0, 1, 2, ... from v
    """
    g.check_vertex(v)
    layers = [1 << v]
    seen = 1 << v
    while True:
        nxt = 0
        for u in iter_bits(layers[-1]):
            nxt |= g.rows[u]
        nxt &= ~seen
        if not nxt:
            return layers
        seen |= nxt
        layers.append(nxt)


def distances_from(g: Graph, v: int) -> list[float]:
    """
    BFS distances from v, math.inf for unreachable vertices
    """
    dist = [math.inf] * g.n
    for d, layer in enumerate(bfs_layers(g, v)):
        for u in iter_bits(layer):
            dist[u] = d
    return dist


def eccentricity(g: Graph, v: int) -> float:
    return max(distances_from(g, v))


def is_connected(g: Graph) -> bool:
    # The null graph is not considered connected
    if g.n == 0:
        return False
    reached = 0
    for layer in bfs_layers(g, 0):
        reached |= layer
    return reached == g.full_mask


def _require_connected(g: Graph):
    if not is_connected(g):
        raise DomainError('Graph is not connected')


def eccentricities(g: Graph) -> list[int]:
    _require_connected(g)
    return [len(bfs_layers(g, v)) - 1 for v in range(g.n)]


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def radius(g: Graph) -> int:
    return min(eccentricities(g))


def center(g: Graph) -> tuple[int, ...]:
    ecc = eccentricities(g)
    return tuple(v for v, e in enumerate(ecc) if e == min(ecc))

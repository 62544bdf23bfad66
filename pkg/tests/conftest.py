import itertools
import os
from functools import lru_cache
from pathlib import Path

import networkx as nx
import pytest

from vizingdom.graph import Graph, is_connected, to_mask
from vizingdom.graph6 import read_graph6_file, encode_graph6


@lru_cache(maxsize=None)
def atlas() -> tuple[Graph, ...]:
    """
    Every graph on at most 7 vertices, up to isomorphism
    """
    return tuple(Graph.from_networkx(g) for g in nx.graph_atlas_g())


def atlas_graphs(max_n: int = 7, min_n: int = 1, connected: bool = True) -> list[Graph]:
    return [g for g in atlas() if min_n <= g.n <= max_n and (not connected or is_connected(g))]


def corpus8() -> list[Graph]:
    """
    Connected graphs on 8 vertices from $VIZINGDOM_CORPUS8 (e.g. geng -c 8), empty when not configured
    """
    path = os.environ.get('VIZINGDOM_CORPUS8')
    if not path or not Path(path).is_file():
        return []
    return [g for _, g in read_graph6_file(Path(path)) if is_connected(g)]


def small_connected() -> list[Graph]:
    return atlas_graphs(7) + corpus8()


def ids(graphs):
    return [encode_graph6(g) for g in graphs]


def brute_dominating_sets(g: Graph, size: int) -> list[tuple[int, ...]]:
    return [s for s in itertools.combinations(range(g.n), size) if g.is_dominating(to_mask(s))]


def brute_gamma(g: Graph) -> int:
    return next(k for k in range(1, g.n + 1) if brute_dominating_sets(g, k))


def brute_independent_domination(g: Graph) -> int:
    return next(k for k in range(1, g.n + 1)
                if any(g.is_independent(to_mask(s)) for s in brute_dominating_sets(g, k)))


def brute_is_fair(g: Graph, sets: list[frozenset]) -> bool:
    """
    Fair reception check straight from the definition, over every D of V(G)
    """
    z = frozenset(range(g.n)) - frozenset().union(*sets)
    for ell in range(1, len(sets) + 1):
        for chosen in itertools.combinations(sets, ell):
            a = frozenset().union(*chosen)
            for mask in range(1 << g.n):
                d = frozenset(v for v in range(g.n) if mask >> v & 1)
                outside = d - a
                if not all(g.adj[v] & outside for v in a):
                    continue
                score = len(d & z) + sum(len(s & d) - 1 for s in sets if s & d)
                if score < ell:
                    return False
    return True


def write_corpus(path: Path, graphs) -> Path:
    path.write_text(''.join(encode_graph6(g) + '\n' for g in graphs))
    return path


@pytest.fixture
def connected4_corpus(tmp_path) -> Path:
    return write_corpus(tmp_path / 'connected4.g6', atlas_graphs(4))

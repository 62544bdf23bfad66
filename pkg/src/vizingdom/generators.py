from enum import Enum

import networkx as nx

from vizingdom.errors import GeneratorError
from vizingdom.graph import Graph


class GraphFamily(Enum):
    PATH = 'path'
    CYCLE = 'cycle'
    COMPLETE = 'complete'
    STAR = 'star'
    COMPLETE_BIPARTITE = 'complete_bipartite'


# Number of integer parameters and the smallest allowed value of each
FAMILY_PARAMS = {
    GraphFamily.PATH: (1,),
    GraphFamily.CYCLE: (3,),
    GraphFamily.COMPLETE: (1,),
    GraphFamily.STAR: (1,),
    GraphFamily.COMPLETE_BIPARTITE: (1, 1),
}


def generate(family: GraphFamily, *params: int) -> Graph:
    """
    Canonical labelled member of a family. star(r) is K_{1,r} with center 0,
    complete_bipartite(a, b) puts the a-side on vertices 0..a-1.
    """
    minimums = FAMILY_PARAMS[family]
    if len(params) != len(minimums):
        raise GeneratorError(f'{family.value} takes {len(minimums)} parameter(s), got {len(params)}')
    for p, minimum in zip(params, minimums):
        if p < minimum:
            raise GeneratorError(f'{family.value} parameter {p} must be at least {minimum}')

    if family == GraphFamily.PATH:
        g = nx.path_graph(params[0])
    elif family == GraphFamily.CYCLE:
        g = nx.cycle_graph(params[0])
    elif family == GraphFamily.COMPLETE:
        g = nx.complete_graph(params[0])
    elif family == GraphFamily.STAR:
        g = nx.star_graph(params[0])
    else:
        g = nx.complete_bipartite_graph(*params)
    return Graph.from_networkx(g)


def parse_generator_token(token: str) -> Graph:
    """
    Build a graph from a CLI token such as "path:6" or "complete_bipartite:2,3"
    """
    name, _, args = token.partition(':')
    try:
        family = GraphFamily(name.strip().lower())
    except ValueError:
        raise GeneratorError(f'Unknown graph family "{name}"') from None
    try:
        params = [int(p) for p in args.replace(',', ' ').split()]
    except ValueError:
        raise GeneratorError(f'Invalid parameters in "{token}"') from None
    return generate(family, *params)

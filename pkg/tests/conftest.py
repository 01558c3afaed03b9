from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import settings

from planarkit.graph import Cycle, Graph, build_graph, cycle_from_vertices

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")


def from_nx(G: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return build_graph(len(mapping), [(mapping[u], mapping[v]) for u, v in G.edges()])


def small_connected_graphs(max_n: int = 6) -> list[Graph]:
    """All connected graphs up to isomorphism with 1..max_n vertices (max_n <= 7)."""
    out = []
    for G in nx.graph_atlas_g()[1:]:
        if G.number_of_nodes() <= max_n and nx.is_connected(G):
            out.append(from_nx(G))
    return out


@pytest.fixture(scope="session")
def atlas6() -> list[Graph]:
    return small_connected_graphs(6)


def two_k4_sharing_edge() -> Graph:
    # K4 on {0,1,2,3} and K4 on {0,1,4,5}; shared edge (0,1)
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (1, 4), (1, 5), (4, 5)]
    return build_graph(6, pairs)


def triangles_at_vertex(k: int) -> Graph:
    pairs = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        pairs += [(0, a), (0, b), (a, b)]
    return build_graph(2 * k + 1, pairs)


def chord_ladder(length: int) -> tuple[Graph, Cycle]:
    """A cycle of even ``length`` with chords ``(2i, 2i+3)``; the chords form an
    induced conflict cycle of length ``length // 2``."""
    pairs = [(i, (i + 1) % length) for i in range(length)]
    pairs += [(2 * i, (2 * i + 3) % length) for i in range(length // 2)]
    g = build_graph(length, pairs)
    c = cycle_from_vertices(g, list(range(length)))
    return g, c

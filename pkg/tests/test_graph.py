from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from planarkit.graph import (
    GraphError,
    SpanningTree,
    build_graph,
    canonical_graph,
    classify_cycle,
    components,
    cycle_from_edges,
    cycle_from_vertices,
    fundamental_cycle,
    is_connected,
    non_tree_edges,
    spanning_tree,
    xor,
    xor_all,
)
from planarkit.oracle import gen_gnm, simple_cycles

from conftest import small_connected_graphs


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3 and g.m == 3


def test_build_rejects_self_loop():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 0)])


def test_build_rejects_duplicate_and_range():
    with pytest.raises(GraphError):
        build_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        build_graph(3, [(0, 3)])


def test_build_k33_from_cross_pairs():
    g = build_graph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert g.m == 9
    assert g == canonical_graph("K33")


def test_edge_ids_follow_input_order():
    g = build_graph(4, [(2, 3), (1, 0), (0, 2)])
    assert g.edges == ((2, 3), (0, 1), (0, 2))
    assert g.edge_id(1, 0) == 1


@pytest.mark.parametrize(
    "name,n,m",
    [("K4", 4, 6), ("K5", 5, 10), ("K33", 6, 9), ("W5", 6, 10), ("Q3", 8, 12), ("Petersen", 10, 15), ("C6", 6, 6)],
)
def test_canonical_sizes(name, n, m):
    g = canonical_graph(name)
    assert (g.n, g.m) == (n, m)


def test_canonical_wheel_and_petersen_shape():
    w = canonical_graph("W5")
    assert w.degree(0) == 5 and all(w.degree(v) == 3 for v in range(1, 6))
    p = canonical_graph("Petersen")
    assert all(p.degree(v) == 3 for v in range(10))
    assert nx.is_isomorphic(nx.Graph(list(p.edges)), nx.petersen_graph())


def test_grid():
    g = canonical_graph("grid", 3, 4)
    assert (g.n, g.m) == (12, 17)


def test_spanning_tree_k5_is_star():
    t = spanning_tree(canonical_graph("K5"), 0)
    assert t.depth == (0, 1, 1, 1, 1)
    assert all(t.parent[v] == 0 for v in range(1, 5))


def test_spanning_tree_c4():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    t = spanning_tree(g, 0)
    assert {g.edges[e] for e in t.tree_edges} == {(0, 1), (0, 3), (1, 2)}


def test_spanning_tree_disconnected():
    with pytest.raises(GraphError):
        spanning_tree(build_graph(4, [(0, 1), (2, 3)]), 0)


def test_fundamental_cycle_examples():
    k5 = canonical_graph("K5")
    t = spanning_tree(k5, 0)
    c = fundamental_cycle(k5, t, k5.edge_id(1, 2))
    assert set(c.vertices) == {0, 1, 2}
    with pytest.raises(GraphError):
        fundamental_cycle(k5, t, k5.edge_id(0, 1))


def test_fundamental_cycle_c4_path_tree():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    path = SpanningTree(0, (-1, 0, 1, 2), (-1, 0, 1, 2), (0, 1, 2, 3), frozenset({0, 1, 2}))
    c = fundamental_cycle(g, path, g.edge_id(0, 3))
    assert c.edges == frozenset(range(4)) and len(c.vertices) == 4


def test_classify_cycle_examples():
    k5 = canonical_graph("K5")
    flags = classify_cycle(k5, cycle_from_vertices(k5, [0, 1, 2]))
    assert flags.induced and flags.nonseparating
    k33 = canonical_graph("K33")
    assert not classify_cycle(k33, cycle_from_vertices(k33, [0, 3, 1, 4, 2, 5])).induced
    c6 = canonical_graph("C6")
    flags = classify_cycle(c6, cycle_from_vertices(c6, list(range(6))))
    assert flags.induced and flags.nonseparating


def test_xor_examples():
    assert xor({1, 2}, {2, 3}) == {1, 3}
    a = frozenset({4, 7, 9})
    assert xor(a, a) == frozenset()
    assert xor(a, frozenset()) == a


@given(st.frozensets(st.integers(0, 30)), st.frozensets(st.integers(0, 30)), st.frozensets(st.integers(0, 30)))
def test_xor_group_laws(a, b, c):
    assert xor(a, b) == xor(b, a)
    assert xor(xor(a, b), c) == xor(a, xor(b, c))
    assert xor(xor(a, b), b) == a


def test_components_examples():
    k5 = canonical_graph("K5")
    assert components(k5, [3, 4]) == [[3, 4]]
    c6 = canonical_graph("C6")
    assert components(c6, [1, 2, 4, 5]) == [[1, 2], [4, 5]]
    assert components(c6, []) == []


@given(st.integers(4, 12), st.integers(0, 10_000))
def test_fundamental_cycles_form_basis(n, seed):
    m = min(n * (n - 1) // 2, n + 6)
    g = gen_gnm(n, m, seed)
    if not is_connected(g):
        return
    t = spanning_tree(g, 0)
    nte = non_tree_edges(g, t)
    for e in nte:
        c = fundamental_cycle(g, t, e)
        assert e in c.edges
        assert len(c.edges - t.tree_edges) == 1
    subset = nte[::2]
    total = xor_all(fundamental_cycle(g, t, e).edges for e in subset)
    assert total - t.tree_edges == frozenset(subset)


def _brute_flags(g, cyc):
    on = set(cyc)
    k = len(cyc)
    cycle_pairs = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)}
    induced = not any(u in on and v in on and frozenset((u, v)) not in cycle_pairs for u, v in g.edges)
    rest = nx.Graph()
    rest.add_nodes_from(v for v in range(g.n) if v not in on)
    rest.add_edges_from((u, v) for u, v in g.edges if u not in on and v not in on)
    nonsep = rest.number_of_nodes() == 0 or nx.is_connected(rest)
    return induced, nonsep


def test_classify_cycle_matches_brute_force():
    checked = 0
    for g in small_connected_graphs(6):
        for cyc in simple_cycles(g):
            flags = classify_cycle(g, cycle_from_vertices(g, cyc))
            assert (flags.induced, flags.nonseparating) == _brute_flags(g, cyc)
            checked += 1
    assert checked > 1000


def test_cycle_from_edges_rejects_non_cycles():
    k4 = canonical_graph("K4")
    with pytest.raises(GraphError):
        cycle_from_edges(k4, range(6))
    c = cycle_from_edges(k4, [k4.edge_id(0, 1), k4.edge_id(1, 2), k4.edge_id(0, 2)])
    assert c.vertices[0] == 0 and set(c.vertices) == {0, 1, 2}

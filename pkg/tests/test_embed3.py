from __future__ import annotations

from collections import deque

import pytest
from hypothesis import given, strategies as st

from planarkit.conflict import is_odd_closed_walk, conflict_graph
from planarkit.embed3 import (
    COMPLEMENT,
    EXTERNAL,
    FaceBasis,
    NonPlanarEvidence,
    embed,
    embed_triconnected,
    enclosure,
    face_basis,
    face_edge_sets,
    faces_to_rotation,
    find_fundamental_face,
    immediate_predecessors,
    is_planar,
    verify_face_family,
)
from planarkit.embedding import PlanarEmbedding, trace_faces, walk_edge_set
from planarkit.graph import GraphError, build_graph, canonical_graph, cycle_from_edges, spanning_tree, xor_all
from planarkit.oracle import (
    enumerate_facelike_cycles,
    gen_glued,
    gen_gnm,
    gen_triangulation,
    is_three_connected_bruteforce,
    tutte_planarity,
    verify_embedding,
)

from conftest import small_connected_graphs, triangles_at_vertex


def _family(name):
    g = canonical_graph(name)
    t = spanning_tree(g, 0)
    anchor = find_fundamental_face(g, t)
    rel = enclosure(g, t, anchor)
    return g, t, anchor, rel


def _edge_set(g, walk):
    return frozenset(g.edge_id(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk)))


# --- fundamental face ------------------------------------------------------


def test_fundamental_face_w5():
    g = canonical_graph("W5")
    anchor = find_fundamental_face(g, spanning_tree(g, 0))
    assert g.edges[anchor] == (1, 2) and anchor == 5


def test_fundamental_face_c6():
    g = canonical_graph("C6")
    t = spanning_tree(g, 0)
    (only,) = [e for e in range(g.m) if e not in t.tree_edges]
    assert find_fundamental_face(g, t) == only


def test_fundamental_face_k33():
    g = canonical_graph("K33")
    assert g.edges[find_fundamental_face(g, spanning_tree(g, 0))] == (1, 4)


def test_fundamental_face_k5_star():
    g = canonical_graph("K5")
    assert g.edges[find_fundamental_face(g, spanning_tree(g, 0))] == (1, 2)


def test_fundamental_face_missing_gives_evidence():
    # a dense non-planar instance in which no fundamental cycle is face-like
    g = gen_gnm(9, 20, 33)
    assert find_fundamental_face(g, spanning_tree(g, 0)) is None
    assert embed_triconnected(g).reason == "no-fundamental-face"


# --- enclosure -------------------------------------------------------------


def test_enclosure_w5_empty():
    _, _, _, rel = _family("W5")
    assert rel.order == frozenset()
    assert all(rel.conflict_connected.values())


def test_enclosure_k5_empty():
    g = canonical_graph("K5")
    t = spanning_tree(g, 0)
    rel = enclosure(g, t, g.edge_id(1, 2))
    assert rel.order == frozenset()


def test_enclosure_rejects_tree_anchor():
    g = canonical_graph("W5")
    with pytest.raises(GraphError):
        enclosure(g, spanning_tree(g, 0), 0)


def _inside_oracle(g, faces, anchor, cycle_edges):
    """Non-tree edges strictly on the side of the cycle away from ``anchor``,
    judged by connectivity of the dual with the cycle's edges cut."""
    face_sets = [walk_edge_set(g, f) for f in faces]
    by_edge = {}
    for i, s in enumerate(face_sets):
        for e in s:
            by_edge.setdefault(e, []).append(i)
    start = by_edge[anchor][0]
    seen = {start}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        for e in face_sets[f]:
            if e in cycle_edges:
                continue
            for h in by_edge[e]:
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
    return {e for e in range(g.m) if e not in cycle_edges and not any(f in seen for f in by_edge[e])}


def _check_containment(g):
    t = spanning_tree(g, 0)
    anchor = find_fundamental_face(g, t)
    rel = enclosure(g, t, anchor)
    facelike = enumerate_facelike_cycles(g)
    faces = [c.vertices for c in facelike]
    for e, ps in rel.preds.items():
        inside = _inside_oracle(g, faces, anchor, rel.cycles[e].edges)
        assert ps == frozenset(x for x in inside if x not in t.tree_edges)
    return rel


def test_enclosure_prism_matches_containment():
    g = canonical_graph("prism")
    rel = _check_containment(g)
    assert g.edges[rel.anchor] == (1, 2)
    order = {(g.edges[a], g.edges[b]) for a, b in rel.order}
    assert order == {((3, 4), (4, 5)), ((3, 5), (4, 5))}


@pytest.mark.parametrize("seed", range(8))
def test_enclosure_matches_containment_triangulations(seed):
    g, _ = gen_triangulation(6 + seed % 5, seed)
    _check_containment(g)


def test_enclosure_evidence_odd_walk():
    g = gen_gnm(9, 20, 10)
    t = spanning_tree(g, 0)
    res = enclosure(g, t, find_fundamental_face(g, t))
    assert isinstance(res, NonPlanarEvidence) and res.reason == "nonbipartite-conflict"
    h = conflict_graph(g, res.cycle)
    assert is_odd_closed_walk(h.adjacency(), res.odd_walk)
    assert not tutte_planarity(g)


def test_immediate_predecessors_chain():
    preds = {1: frozenset(), 2: frozenset({1}), 3: frozenset({1, 2}), 4: frozenset({1})}
    assert immediate_predecessors(preds) == {
        1: frozenset(), 2: frozenset({1}), 3: frozenset({2}), 4: frozenset({1}),
    }


# --- face basis ------------------------------------------------------------


def test_face_basis_w5():
    g, _, anchor, rel = _family("W5")
    fb = face_basis(rel)
    assert len(fb) == g.m - g.n + 2 == 6
    tri = {_edge_set(g, w) for w in ([0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1])}
    inner = {fb.faces[k] for k in fb.faces if k not in (EXTERNAL, COMPLEMENT)}
    assert inner == tri
    assert fb.faces[EXTERNAL] == _edge_set(g, [0, 1, 2])
    assert fb.faces[COMPLEMENT] == _edge_set(g, [1, 2, 3, 4, 5])
    assert verify_face_family(g, fb) is None


def test_face_basis_c6():
    g, _, _, rel = _family("C6")
    fb = face_basis(rel)
    assert fb.faces[EXTERNAL] == fb.faces[COMPLEMENT] == frozenset(range(6))
    assert len(fb) == 2 and verify_face_family(g, fb) is None


def test_face_basis_k5_rejected():
    g = canonical_graph("K5")
    t = spanning_tree(g, 0)
    rel = enclosure(g, t, g.edge_id(1, 2))
    fb = face_basis(rel)
    assert len(fb) == g.m - g.n + 2
    ev = verify_face_family(g, fb)
    assert ev.reason == "face-check-failed"
    assert g.edges[ev.edge] == (0, 1) and len(ev.covering) == 4
    # payload recounts identically
    assert sum(1 for s in fb.faces.values() if ev.edge in s) == len(ev.covering)


def test_face_family_non_cycle_candidate():
    g = canonical_graph("K5")
    fb = FaceBasis({0: frozenset(range(10)), 1: frozenset(range(10))}, {})
    ev = verify_face_family(g, fb)
    assert ev.reason == "face-check-failed" and ev.face == frozenset(range(10))


@pytest.mark.parametrize("seed", range(10))
def test_face_basis_xor_zero(seed):
    g, _ = gen_triangulation(5 + seed, seed)
    t = spanning_tree(g, 0)
    fb = face_basis(enclosure(g, t, find_fundamental_face(g, t)))
    assert len(fb) == g.m - g.n + 2
    assert xor_all(fb.faces.values()) == frozenset()


# --- faces to rotation -----------------------------------------------------


def test_faces_to_rotation_k4():
    g = canonical_graph("K4")
    pe = faces_to_rotation(g, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    assert all(len(r) == 3 for r in pe.rotation)
    assert len(trace_faces(g, pe.rotation)) == 4


def test_faces_to_rotation_triangle():
    g = canonical_graph("C3")
    pe = faces_to_rotation(g, [[0, 1, 2], [0, 1, 2]])
    assert all(len(r) == 2 for r in pe.rotation) and len(pe.faces) == 2


def test_faces_to_rotation_w5():
    g, _, _, rel = _family("W5")
    fb = face_basis(rel)
    walks = [cycle_from_edges(g, s).vertices for s in fb.faces.values()]
    pe = faces_to_rotation(g, walks)
    assert len(pe.faces) == 6 and verify_embedding(g, pe)


def test_faces_to_rotation_malformed():
    g = canonical_graph("K4")
    with pytest.raises(GraphError):
        faces_to_rotation(g, [[0, 1, 2], [0, 1, 3], [0, 2, 3]])


# --- embed -----------------------------------------------------------------


def test_embed_triconnected_examples():
    w5 = embed_triconnected(canonical_graph("W5"))
    assert len(w5.faces) == 6 and verify_embedding(canonical_graph("W5"), w5)
    assert isinstance(embed_triconnected(canonical_graph("K5")), NonPlanarEvidence)
    octa = canonical_graph("octahedron")
    pe = embed_triconnected(octa)
    assert len(pe.faces) == 8 and verify_embedding(octa, pe)


def test_embed_examples():
    grid = canonical_graph("grid", 3, 3)
    pe = embed(grid)
    assert len(pe.faces) == 5 and verify_embedding(grid, pe)
    tri = triangles_at_vertex(2)
    assert len(embed(tri).faces) == 3
    assert isinstance(embed(canonical_graph("Petersen")), NonPlanarEvidence)


def test_embed_too_many_edges_shortcut():
    res = embed(canonical_graph("K6"))
    assert isinstance(res, NonPlanarEvidence) and res.reason == "too-many-edges"


def test_embed_disconnected_and_trivial():
    g = build_graph(7, [(0, 1), (1, 2), (0, 2), (3, 4)])
    pe = embed(g)
    assert verify_embedding(g, pe)
    empty = build_graph(3, [])
    assert verify_embedding(empty, embed(empty))


def test_embedding_json_round_trip():
    g = canonical_graph("W5")
    pe = embed(g)
    doc = pe.to_json()
    assert set(doc) == {"n", "rotation", "faces", "external"}
    assert PlanarEmbedding.from_json(doc) == pe


def test_embed_deterministic():
    g, _ = gen_triangulation(40, 3)
    assert embed(g).to_json() == embed(g).to_json()


def test_verdict_matches_tutte_on_atlas(atlas6):
    for g in atlas6:
        res = embed(g)
        assert isinstance(res, PlanarEmbedding) == tutte_planarity(g)
        if isinstance(res, PlanarEmbedding):
            assert verify_embedding(g, res)


@given(st.integers(5, 9), st.integers(0, 10_000), st.floats(0.3, 0.9))
def test_verdict_matches_tutte_random(n, seed, density):
    m = max(n - 1, int(density * n * (n - 1) / 2))
    g = gen_gnm(n, m, seed)
    res = embed(g)
    assert isinstance(res, PlanarEmbedding) == tutte_planarity(g)
    if isinstance(res, PlanarEmbedding):
        assert verify_embedding(g, res)


@given(st.integers(0, 10_000))
def test_glued_graphs_embed(seed):
    g = gen_glued(seed)
    res = embed(g)
    assert isinstance(res, PlanarEmbedding) and verify_embedding(g, res)


@pytest.mark.parametrize("seed", range(10))
def test_face_family_equals_facelike_cycles(seed):
    g, _ = gen_triangulation(5 + seed % 7, seed)
    if seed % 2:
        # drop a few edges while staying 3-connected
        pairs = list(g.edges)
        for e in range(len(pairs) - 1, -1, -3):
            trial = build_graph(g.n, pairs[:e] + pairs[e + 1 :])
            if is_three_connected_bruteforce(trial):
                pairs = pairs[:e] + pairs[e + 1 :]
        g = build_graph(g.n, pairs)
    assert is_three_connected_bruteforce(g)
    pe = embed_triconnected(g)
    assert face_edge_sets(g, pe) == {c.edges for c in enumerate_facelike_cycles(g)}


def test_evidence_payloads_revalidate(atlas6):
    for g in small_connected_graphs(7)[::7]:
        res = embed(g)
        if not isinstance(res, NonPlanarEvidence):
            continue
        h = res.graph
        if res.odd_walk:
            assert is_odd_closed_walk(conflict_graph(h, res.cycle).adjacency(), res.odd_walk)
        if res.edge is not None:
            assert len(res.covering) != 2
            assert all(res.edge in s for s in res.covering)
        doc = res.to_json()
        assert doc["reason"] == res.reason
        vm = res.vertex_map or tuple(range(h.n))
        assert all(0 <= vm[v] < g.n for v in range(h.n))


def test_is_planar():
    assert is_planar(canonical_graph("Q3"))
    assert not is_planar(canonical_graph("K33"))

"""Acceptance criteria; each test prints one PASS/FAIL line."""

from __future__ import annotations

import random
import time

import pytest

from planarkit.conflict import OddCycleWitness, conflict_graph, two_color
from planarkit.embed3 import COMPLEMENT, NonPlanarEvidence, embed, embed_triconnected, enclosure, face_basis, face_edge_sets, find_fundamental_face
from planarkit.embedding import PlanarEmbedding
from planarkit.graph import build_graph, canonical_graph, components, spanning_tree
from planarkit.kuratowski import (
    TRIANGLE_MAX_EDGES,
    TRIANGLE_MAX_VERTICES,
    WitnessCycle,
    find_kuratowski,
    induced_odd_cycle,
    k5_minor_from_reduction,
    minimal_nonplanar_prefix,
    reduce_bridges_to_paths,
    triangle_reduction,
    witness_cycle,
)
from planarkit.oracle import (
    brute_force_minor,
    enumerate_facelike_cycles,
    gen_glued,
    gen_gnm,
    gen_triangulation,
    is_three_connected_bruteforce,
    tutte_planarity,
    verify_embedding,
    verify_minor,
)

from conftest import chord_ladder, small_connected_graphs


@pytest.fixture
def report(capsys):
    def emit(criterion: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
        assert ok, detail

    return emit


def _three_way(g) -> tuple[bool, bool, bool]:
    res = embed(g)
    if isinstance(res, PlanarEmbedding):
        assert verify_embedding(g, res)
    no_minor = all(brute_force_minor(g, k) is None for k in ("K5", "K33"))
    return isinstance(res, PlanarEmbedding), tutte_planarity(g), no_minor


def test_criterion_1_exhaustive_oracle_agreement(report):
    t0 = time.perf_counter()
    graphs = small_connected_graphs(6)
    bad = [g.edges for g in graphs if len(set(_three_way(g))) != 1]
    dt = time.perf_counter() - t0
    ok = len(graphs) == 143 and not bad and dt < 300
    report(1, ok, f"{len(graphs)} graphs, {len(bad)} disagreements, {dt:.1f}s")


def test_criterion_2_random_oracle_agreement(report):
    t0 = time.perf_counter()
    rng = random.Random(2)
    bad = 0
    planar = 0
    for i in range(500):
        n = 7 + i % 3
        m = rng.randint(n - 1, n * (n - 1) // 2)
        g = gen_gnm(n, m, rng.randrange(10**9))
        verdicts = _three_way(g)
        bad += len(set(verdicts)) != 1
        planar += verdicts[0]
    dt = time.perf_counter() - t0
    report(2, bad == 0 and dt < 600, f"500 graphs ({planar} planar), {bad} disagreements, {dt:.1f}s")


def _three_connected_instances(count: int) -> list:
    rng = random.Random(3)
    out = []
    while len(out) < count:
        n = rng.randint(4, 11)
        g, _ = gen_triangulation(n, rng.randrange(10**9))
        if len(out) % 2:
            pairs = list(g.edges)
            for _ in range(rng.randint(1, max(1, n - 3))):
                e = rng.randrange(len(pairs))
                trial = pairs[:e] + pairs[e + 1 :]
                if is_three_connected_bruteforce(build_graph(n, trial)):
                    pairs = trial
            g = build_graph(n, pairs)
        if is_three_connected_bruteforce(g):
            out.append(g)
    return out


def test_criterion_3_face_sets_equal_facelike_cycles(report):
    instances = _three_connected_instances(50)
    mismatches = 0
    reduced = 0
    for g in instances:
        reduced += g.m < 3 * g.n - 6
        pe = embed_triconnected(g)
        if not isinstance(pe, PlanarEmbedding) or face_edge_sets(g, pe) != {c.edges for c in enumerate_facelike_cycles(g)}:
            mismatches += 1
    report(3, mismatches == 0, f"{len(instances)} instances ({reduced} with edges removed), {mismatches} mismatches")


def test_criterion_4_triangulations_at_scale(report):
    t0 = time.perf_counter()
    failures = 0
    family_checked = 0
    for i in range(200):
        n = 4 + (i * 496) // 199
        g, _ = gen_triangulation(n, i)
        pe = embed(g)
        if not isinstance(pe, PlanarEmbedding) or not verify_embedding(g, pe) or len(pe.faces) != 2 * n - 4:
            failures += 1
            continue
        if n <= 120:
            # the face family itself: m - n + 2 members, one of them the complement face
            t = spanning_tree(g, 0)
            fb = face_basis(enclosure(g, t, find_fundamental_face(g, t)))
            family_checked += 1
            failures += len(fb) != g.m - g.n + 2 or COMPLEMENT not in fb.faces
    dt = time.perf_counter() - t0
    report(4, failures == 0, f"200 triangulations n=4..500, {failures} failures, {family_checked} families inspected, {dt:.1f}s")


def test_criterion_5_composition(report):
    failures = 0
    for seed in range(100):
        g = gen_glued(seed, pieces=3 + seed % 6)
        pe = embed(g)
        if not isinstance(pe, PlanarEmbedding) or not verify_embedding(g, pe):
            failures += 1
            continue
        comps = [c for c in components(g, range(g.n))]
        expected = g.m - g.n + 1 + len(comps)
        failures += len(pe.faces) != expected
    report(5, failures == 0, f"100 glued graphs, {failures} failures")


def _nonplanar_corpus() -> list:
    out = [canonical_graph(name) for name in ("K5", "K33", "K6", "Petersen")]
    rng = random.Random(6)
    while len(out) < 304:
        n = rng.choice([rng.randint(6, 9), rng.randint(10, 200)])
        m = min(int(rng.uniform(1.3, 3.5) * n), n * (n - 1) // 2)
        g = gen_gnm(n, m, rng.randrange(10**9))
        if n <= 9:
            if not tutte_planarity(g):
                out.append(g)
        elif isinstance(embed(g), NonPlanarEvidence):
            out.append(g)
    return out


def test_criterion_6_kuratowski_soundness(report):
    t0 = time.perf_counter()
    corpus = _nonplanar_corpus()
    failures = 0
    kinds = {"K5": 0, "K33": 0}
    for g in corpus:
        try:
            model = find_kuratowski(g)
        except Exception:  # counted, reported below
            failures += 1
            continue
        if model.kind not in kinds or not verify_minor(g, model):
            failures += 1
        else:
            kinds[model.kind] += 1
    dt = time.perf_counter() - t0
    report(6, failures == 0, f"{len(corpus)} non-planar graphs, {failures} failures, kinds {kinds}, {dt:.1f}s")


def test_criterion_7_constants(report):
    g, c = chord_ladder(18)
    cg = conflict_graph(g, c)
    res = two_color(cg)
    wc = WitnessCycle(g, c, (), cg, res.walk, 0, 1)
    odd = induced_odd_cycle(cg)
    model = k5_minor_from_reduction(reduce_bridges_to_paths(wc, odd))
    nine_cycle = cg.size == 9 and len(odd) == 9 and isinstance(res, OddCycleWitness)
    ladder_ok = nine_cycle and model.kind == "K5" and verify_minor(g, model)

    worst_n = worst_m = instances = 0
    rng = random.Random(7)
    corpus = [canonical_graph("K5"), canonical_graph("K33"), canonical_graph("Petersen")]
    corpus += [gen_gnm(n, 3 * n, rng.randrange(10**9)) for n in [rng.randint(7, 60) for _ in range(60)]]
    for h in corpus:
        wcw = witness_cycle(minimal_nonplanar_prefix(h))
        adj = [set(a) for a in wcw.conflict.adjacency()]
        for a, b in sorted(wcw.conflict.edges):
            for x in sorted(adj[a] & adj[b]):
                if x > b:
                    tr = triangle_reduction(wcw, (a, b, x))
                    instances += 1
                    worst_n = max(worst_n, tr.graph.n)
                    worst_m = max(worst_m, tr.graph.m)
    bounds_ok = instances > 0 and worst_n <= TRIANGLE_MAX_VERTICES and worst_m <= TRIANGLE_MAX_EDGES
    report(
        7,
        ladder_ok and bounds_ok,
        f"induced 9-cycle -> verified K5: {ladder_ok}; {instances} triangle reductions, max {worst_n} vertices / {worst_m} edges",
    )


def test_criterion_8_performance(report):
    g, _ = gen_triangulation(5000, 8)
    t0 = time.perf_counter()
    pe = embed(g)
    t_embed = time.perf_counter() - t0
    embed_ok = isinstance(pe, PlanarEmbedding) and len(pe.faces) == 2 * 5000 - 4

    rng = random.Random(8)
    t_worst = 0.0
    minors_ok = True
    for _ in range(5):
        h = gen_gnm(500, rng.choice([650, 1000, 1500]), rng.randrange(10**9))
        t0 = time.perf_counter()
        model = find_kuratowski(h)
        t_worst = max(t_worst, time.perf_counter() - t0)
        minors_ok &= verify_minor(h, model)
    ok = embed_ok and t_embed < 60 and minors_ok and t_worst < 60
    report(8, ok, f"embed n=5000 in {t_embed:.1f}s; find_kuratowski n=500 worst {t_worst:.1f}s")

"""Embedding 3-connected graphs through a change of cycle basis.

Pick a BFS tree, find a fundamental cycle that is a face (induced and
non-separating), use it as the outer face to orient the bipartition of every
other fundamental cycle's conflict graph, read off which non-tree edges each
fundamental cycle encloses, and recover every face as a GF(2) sum of
fundamental cycles.  Faces become a rotation system through angle adjacency.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Sequence, Union

import numpy as np

from .conflict import OddCycleWitness, bridge_labels, conflict_edges, two_color
from .decompose import (
    blocks,
    block_graph,
    compose_blocks,
    compose_triconnected,
    triconnected_components,
    trivial_component_rotation,
)
from .embedding import PlanarEmbedding, canonical_walk, embedding_from_rotation, euler_ok, trace_faces, walk_edge_set
from .graph import (
    Cycle,
    Graph,
    GraphError,
    SpanningTree,
    build_graph,
    chords,
    component_labels,
    cycle_from_edges,
    fundamental_cycle,
    is_connected,
    non_tree_edges,
    spanning_tree,
    xor_all,
)

EXTERNAL = "external"
COMPLEMENT = "complement"
FaceLabel = Union[int, str]


@dataclass(frozen=True)
class NonPlanarEvidence:
    """Why a graph (or one of its components) was rejected.

    ``graph`` is the graph the payload refers to; ``vertex_map`` sends its
    vertices to the caller's vertex ids (identity when omitted).
    """

    reason: str  # no-fundamental-face | nonbipartite-conflict | face-check-failed
    graph: Graph
    cycle: Cycle | None = None
    odd_walk: tuple[int, ...] = ()
    edge: int | None = None
    covering: tuple[frozenset[int], ...] = ()
    face: frozenset[int] | None = None
    detail: str = ""
    vertex_map: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        vm = self.vertex_map or tuple(range(self.graph.n))
        doc: dict = {"reason": self.reason, "detail": self.detail}
        if self.cycle is not None:
            doc["cycle"] = [vm[v] for v in self.cycle.vertices]
        if self.odd_walk:
            doc["odd_walk"] = list(self.odd_walk)
        if self.edge is not None:
            u, v = self.graph.edges[self.edge]
            doc["edge"] = [vm[u], vm[v]]
            doc["covering_faces"] = len(self.covering)
        if self.face is not None:
            doc["face"] = [[vm[x] for x in self.graph.edges[e]] for e in sorted(self.face)]
        return doc


@dataclass(frozen=True)
class EnclosureRelation:
    anchor: int
    cycles: dict[int, Cycle]
    preds: dict[int, frozenset[int]]  # e -> {e' : e' precedes e}
    conflict_connected: dict[int, bool] = field(default_factory=dict)

    @property
    def order(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, e) for e, ps in self.preds.items() for a in ps)


@dataclass(frozen=True)
class FaceBasis:
    faces: dict[FaceLabel, frozenset[int]]
    immediate: dict[int, frozenset[int]]  # immediate predecessors, kept for audit

    def __len__(self) -> int:
        return len(self.faces)


# ---------------------------------------------------------------------------
# Fundamental face
# ---------------------------------------------------------------------------


def _nonseparating(g: Graph, vertices: Sequence[int]) -> bool:
    removed = np.zeros(g.n, dtype=bool)
    removed[list(vertices)] = True
    count, _ = component_labels(g, removed)
    return count <= 1


def find_fundamental_face(g: Graph, t: SpanningTree) -> int | None:
    """Smallest non-tree edge whose fundamental cycle is induced and non-separating."""
    for e in non_tree_edges(g, t):
        c = fundamental_cycle(g, t, e)
        if chords(g, c):
            continue
        if _nonseparating(g, c.vertices):
            return e
    return None


# ---------------------------------------------------------------------------
# Enclosure relation
# ---------------------------------------------------------------------------


def enclosure(g: Graph, t: SpanningTree, anchor: int) -> EnclosureRelation | NonPlanarEvidence:
    """For every other non-tree edge ``e``: which non-tree edges does the
    fundamental cycle of ``e`` separate from ``anchor``."""
    if anchor in t.tree_edges:
        raise GraphError("anchor must be a non-tree edge")
    nt = non_tree_edges(g, t)
    nt_arr = np.asarray(nt, dtype=np.int64)
    cycles = {e: fundamental_cycle(g, t, e) for e in nt}
    preds: dict[int, frozenset[int]] = {}
    connected: dict[int, bool] = {}
    for e in nt:
        if e == anchor:
            continue
        c = cycles[e]
        bl = bridge_labels(g, c)
        cedges = conflict_edges(bl.attachments)
        adj: list[list[int]] = [[] for _ in range(len(bl.kinds))]
        for i, j in cedges:
            adj[i].append(j)
            adj[j].append(i)
        res = two_color(adj, int(bl.edge_bridge[anchor]))
        if isinstance(res, OddCycleWitness):
            return NonPlanarEvidence(
                "nonbipartite-conflict", g, cycle=c, odd_walk=res.walk,
                detail=f"conflict graph of the fundamental cycle of edge {e} is not bipartite",
            )
        colors = np.asarray(res.colors, dtype=np.int64)
        connected[e] = _connected(adj)
        eb = bl.edge_bridge[nt_arr]
        mask = eb >= 0
        inside = np.zeros(len(nt_arr), dtype=bool)
        inside[mask] = colors[eb[mask]] == 1
        preds[e] = frozenset(nt_arr[inside].tolist())
    return EnclosureRelation(anchor, cycles, preds, connected)


def _connected(adj: list[list[int]]) -> bool:
    if not adj:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def immediate_predecessors(preds: dict[int, frozenset[int]]) -> dict[int, frozenset[int]]:
    """Transitive reduction: ``a`` is kept below ``e`` iff ``a < e`` and no ``b``
    satisfies ``a < b < e``."""
    ups: dict[int, set[int]] = defaultdict(set)
    for e, ps in preds.items():
        for a in ps:
            ups[a].add(e)
    out: dict[int, set[int]] = {e: set() for e in preds}
    for a, above in ups.items():
        for e in above:
            if above.isdisjoint(preds[e]):
                out[e].add(a)
    return {e: frozenset(s) for e, s in out.items()}


def face_basis(rel: EnclosureRelation) -> FaceBasis:
    """Face of ``e``: its fundamental cycle plus those of its immediate
    predecessors.  Add the anchor's cycle as the outer face and the complement
    face that closes the GF(2) sum to zero."""
    immediate = immediate_predecessors(rel.preds)
    faces: dict[FaceLabel, frozenset[int]] = {}
    for e in sorted(rel.preds):
        faces[e] = xor_all([rel.cycles[e].edges] + [rel.cycles[a].edges for a in immediate[e]])
    faces[EXTERNAL] = rel.cycles[rel.anchor].edges
    faces[COMPLEMENT] = xor_all(faces.values())
    return FaceBasis(faces, immediate)


# ---------------------------------------------------------------------------
# Face family checks
# ---------------------------------------------------------------------------


def verify_face_family(g: Graph, fb: FaceBasis, strict: bool = True) -> NonPlanarEvidence | None:
    """``None`` when every edge is on exactly two candidates and every candidate
    is a simple cycle (and, in strict mode, induced and non-separating)."""
    count = np.zeros(g.m, dtype=np.int64)
    for s in fb.faces.values():
        if s:
            count[np.fromiter(s, dtype=np.int64, count=len(s))] += 1
    bad = np.nonzero(count != 2)[0]
    if len(bad):
        e = int(bad[0])
        covering = tuple(s for s in fb.faces.values() if e in s)
        return NonPlanarEvidence(
            "face-check-failed", g, edge=e, covering=covering,
            detail=f"edge {e} lies on {len(covering)} candidate faces",
        )
    for label, s in fb.faces.items():
        try:
            c = cycle_from_edges(g, s)
        except GraphError:
            return NonPlanarEvidence("face-check-failed", g, face=s, detail=f"candidate {label!r} is not a simple cycle")
        if strict:
            if chords(g, c):
                return NonPlanarEvidence("face-check-failed", g, face=s, detail=f"candidate {label!r} has a chord")
            if not _nonseparating(g, c.vertices):
                return NonPlanarEvidence("face-check-failed", g, face=s, detail=f"candidate {label!r} is separating")
    return None


# ---------------------------------------------------------------------------
# Faces to rotation
# ---------------------------------------------------------------------------


def faces_to_rotation(g: Graph, faces: Sequence[Sequence[int]], external: int = 0) -> PlanarEmbedding:
    """Recover a rotation system from face boundary walks via angle adjacency.

    Walks may come in either direction; they are first oriented so that each
    edge is traversed once each way.  Raises :class:`GraphError` when the angles
    at some vertex do not close into a single cycle.
    """
    walks = [list(f) for f in faces]
    occ: dict[int, list[tuple[int, int, int]]] = defaultdict(list)  # edge -> (face, tail, head)
    for fi, w in enumerate(walks):
        k = len(w)
        for i in range(k):
            u, v = w[i], w[(i + 1) % k]
            occ[g.edge_id(u, v)].append((fi, u, v))
    if set(occ) != set(range(g.m)) or any(len(o) != 2 for o in occ.values()):
        raise GraphError("every edge must lie on exactly two face walks")
    flip = [None] * len(walks)
    face_edges: dict[int, list[int]] = defaultdict(list)
    for e, o in occ.items():
        for fi, _, _ in o:
            face_edges[fi].append(e)
    for start in range(len(walks)):
        if flip[start] is not None:
            continue
        flip[start] = False
        queue = deque([start])
        while queue:
            fi = queue.popleft()
            for e in face_edges[fi]:
                (f1, t1, _), (f2, t2, _) = occ[e]
                if f1 == f2:
                    if t1 == t2:
                        raise GraphError("a walk traverses an edge twice in the same direction")
                    continue
                other, mine_tail, other_tail = (f2, t1, t2) if f1 == fi else (f1, t2, t1)
                # after orientation, tails must differ
                mine_tail_oriented = mine_tail if not flip[fi] else g.other(e, mine_tail)
                want_flip = other_tail == mine_tail_oriented
                if flip[other] is None:
                    flip[other] = want_flip
                    queue.append(other)
                elif flip[other] != want_flip:
                    raise GraphError("face walks cannot be oriented consistently")
    oriented = [w[::-1] if flip[i] else w for i, w in enumerate(walks)]
    succ: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for w in oriented:
        k = len(w)
        for i in range(k):
            u, v, x = w[i - 1], w[i], w[(i + 1) % k]
            ein, eout = g.edge_id(v, u), g.edge_id(v, x)
            if ein in succ[v]:
                raise GraphError(f"angle at vertex {v} used twice")
            succ[v][ein] = eout
    rotation = []
    for v in range(g.n):
        inc = sorted(e for _, e in g.adjacency[v])
        if not inc:
            rotation.append(())
            continue
        if sorted(succ[v]) != inc:
            raise GraphError(f"angles at vertex {v} do not cover its edges")
        order = [inc[0]]
        nxt = succ[v][inc[0]]
        while nxt != inc[0]:
            order.append(nxt)
            nxt = succ[v][nxt]
        if len(order) != len(inc):
            raise GraphError(f"angles at vertex {v} split into several cycles")
        rotation.append(tuple(order))
    traced = trace_faces(g, rotation)
    want = sorted(canonical_walk(w) for w in oriented)
    if sorted(canonical_walk(w) for w in traced) != want:
        raise GraphError("retraced faces differ from the input faces")
    target = canonical_walk(oriented[external]) if oriented else ()
    ext = next((i for i, f in enumerate(traced) if canonical_walk(f) == target), 0)
    return PlanarEmbedding(tuple(rotation), tuple(traced), ext)


# ---------------------------------------------------------------------------
# 3-connected driver
# ---------------------------------------------------------------------------


def _trivial_embedding(g: Graph) -> PlanarEmbedding | None:
    if g.n <= 2 or all(g.degree(v) == 2 for v in range(g.n)):
        rotation = [tuple(e for _, e in g.adjacency[v]) for v in range(g.n)]
        return embedding_from_rotation(g, rotation)
    return None


def embed_triconnected(g: Graph, strict: bool = True) -> PlanarEmbedding | NonPlanarEvidence:
    """Embed a graph promised to be 3-connected, or return evidence of failure."""
    if not is_connected(g):
        raise GraphError("embed_triconnected needs a connected graph")
    trivial = _trivial_embedding(g)
    if trivial is not None:
        return trivial
    t = spanning_tree(g, 0)
    anchor = find_fundamental_face(g, t)
    if anchor is None:
        return NonPlanarEvidence("no-fundamental-face", g, detail="no fundamental cycle is induced and non-separating")
    rel = enclosure(g, t, anchor)
    if isinstance(rel, NonPlanarEvidence):
        return rel
    fb = face_basis(rel)
    bad = verify_face_family(g, fb, strict=strict)
    if bad is not None:
        return bad
    labels = list(fb.faces)
    walks = [cycle_from_edges(g, fb.faces[label]).vertices for label in labels]
    try:
        pe = faces_to_rotation(g, walks, external=labels.index(EXTERNAL))
    except GraphError as exc:
        return NonPlanarEvidence("face-check-failed", g, detail=f"faces do not assemble into a rotation: {exc}")
    if not euler_ok(g, pe.faces):
        return NonPlanarEvidence("face-check-failed", g, detail="assembled rotation violates Euler's formula")
    return pe


# ---------------------------------------------------------------------------
# Full pipeline
# ---------------------------------------------------------------------------


def _embed_component_graph(edges, vertices, strict: bool = True) -> tuple[dict[int, list[int]] | None, NonPlanarEvidence | None]:
    local = {v: i for i, v in enumerate(vertices)}
    cg = build_graph(len(vertices), [(local[u], local[v]) for u, v, _ in edges])
    res = embed_triconnected(cg, strict)
    if isinstance(res, NonPlanarEvidence):
        return None, res
    return {vertices[i]: list(res.rotation[i]) for i in range(len(vertices))}, None


def _embed_biconnected(bg: Graph, strict: bool = True) -> tuple[list[tuple[int, ...]] | None, NonPlanarEvidence | None]:
    trivial = _trivial_embedding(bg)
    if trivial is not None:
        return list(trivial.rotation), None
    if bg.m > 3 * bg.n - 6:
        return None, NonPlanarEvidence("too-many-edges", bg, detail=f"{bg.m} edges exceed 3n - 6 = {3 * bg.n - 6}")
    res = embed_triconnected(bg, strict)
    if isinstance(res, PlanarEmbedding):
        return list(res.rotation), None
    st = triconnected_components(bg)
    rotations = []
    for comp in st.components:
        if comp.kind in ("S", "P"):
            rotations.append(trivial_component_rotation(comp))
            continue
        verts = comp.vertices
        rot, evidence = _embed_component_graph(comp.edges, verts, strict)
        if evidence is not None:
            return None, NonPlanarEvidence(
                evidence.reason, evidence.graph, evidence.cycle, evidence.odd_walk, evidence.edge,
                evidence.covering, evidence.face, evidence.detail, tuple(verts),
            )
        rotations.append(rot)
    pe = compose_triconnected(bg, st, rotations)
    return list(pe.rotation), None


def embed(g: Graph, strict: bool = True) -> PlanarEmbedding | NonPlanarEvidence:
    """Planar embedding of any simple graph, or evidence that it is not planar."""
    bct = blocks(g)
    block_rotations = []
    for block in bct.blocks:
        bg, verts = block_graph(g, block)
        rot, evidence = _embed_biconnected(bg, strict)
        if evidence is not None:
            vm = evidence.vertex_map or tuple(range(evidence.graph.n))
            return NonPlanarEvidence(
                evidence.reason, evidence.graph, evidence.cycle, evidence.odd_walk, evidence.edge,
                evidence.covering, evidence.face, evidence.detail, tuple(verts[x] for x in vm),
            )
        block_rotations.append({verts[i]: [block[e] for e in rot[i]] for i in range(len(verts))})
    pe = compose_blocks(g, bct, block_rotations)
    if not euler_ok(g, pe.faces):
        raise RuntimeError("composed embedding failed Euler verification")
    return pe


def is_planar(g: Graph) -> bool:
    return isinstance(embed(g), PlanarEmbedding)


def face_edge_sets(g: Graph, pe: PlanarEmbedding) -> set[frozenset[int]]:
    return {walk_edge_set(g, f) for f in pe.faces}

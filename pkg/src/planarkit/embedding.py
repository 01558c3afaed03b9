"""Rotation systems and face tracing.

Tracing convention: arriving at ``v`` along edge ``e``, the walk leaves along the
edge that follows ``e`` in ``rotation[v]`` (cyclically).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, components


@dataclass(frozen=True)
class PlanarEmbedding:
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    external: int = 0

    @property
    def n(self) -> int:
        return len(self.rotation)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rotation": [list(r) for r in self.rotation],
            "faces": [list(f) for f in self.faces],
            "external": self.external,
        }

    @classmethod
    def from_json(cls, doc: dict) -> PlanarEmbedding:
        rotation = tuple(tuple(int(e) for e in r) for r in doc["rotation"])
        if "n" in doc and int(doc["n"]) != len(rotation):
            raise GraphError("embedding 'n' does not match rotation length")
        faces = tuple(tuple(int(v) for v in f) for f in doc["faces"])
        return cls(rotation, faces, int(doc.get("external", 0)))


def check_rotation(g: Graph, rotation: Sequence[Sequence[int]]) -> None:
    if len(rotation) != g.n:
        raise GraphError("rotation must list every vertex")
    for v in range(g.n):
        expected = sorted(e for _, e in g.adjacency[v])
        if sorted(rotation[v]) != expected:
            raise GraphError(f"rotation at vertex {v} does not match its incident edges")


def trace_faces(g: Graph, rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Trace all faces of a rotation system as cyclic vertex walks.

    Isolated vertices contribute the one-vertex walk ``(v,)``.  Darts are
    started in edge-id order, lower endpoint first, so output is deterministic.
    """
    check_rotation(g, rotation)
    succ: list[dict[int, int]] = []
    for v in range(g.n):
        r = rotation[v]
        succ.append({r[i]: r[(i + 1) % len(r)] for i in range(len(r))})
    used = [[False, False] for _ in range(g.m)]
    faces: list[tuple[int, ...]] = []
    for eid in range(g.m):
        for d in (0, 1):
            if used[eid][d]:
                continue
            walk = []
            e, side = eid, d
            while not used[e][side]:
                used[e][side] = True
                u, w = g.edges[e]
                tail, head = (u, w) if side == 0 else (w, u)
                walk.append(tail)
                nxt = succ[head][e]
                a, _ = g.edges[nxt]
                e, side = nxt, 0 if a == head else 1
            faces.append(tuple(walk))
    for v in range(g.n):
        if not g.adjacency[v]:
            faces.append((v,))
    return faces


def canonical_walk(walk: Sequence[int]) -> tuple[int, ...]:
    """Smallest rotation of a cyclic walk (direction preserved)."""
    k = len(walk)
    if k == 0:
        return ()
    return min(tuple(walk[i:]) + tuple(walk[:i]) for i in range(k))


def walk_edges(g: Graph, walk: Sequence[int]) -> list[int]:
    """Edge ids traversed by a closed walk (with repetition)."""
    k = len(walk)
    if k < 2:
        return []
    return [g.edge_id(walk[i], walk[(i + 1) % k]) for i in range(k)]


def walk_edge_set(g: Graph, walk: Sequence[int]) -> frozenset[int]:
    """Edges traversed an odd number of times (the GF(2) boundary of the face)."""
    acc: set[int] = set()
    for e in walk_edges(g, walk):
        acc ^= {e}
    return frozenset(acc)


def euler_ok(g: Graph, faces: Sequence[Sequence[int]]) -> bool:
    """V - E + F == 2 on every connected component."""
    comps = components(g, range(g.n))
    comp_of = {}
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    v_count = [len(c) for c in comps]
    e_count = [0] * len(comps)
    f_count = [0] * len(comps)
    for u, _ in g.edges:
        e_count[comp_of[u]] += 1
    for f in faces:
        if not f:
            return False
        f_count[comp_of[f[0]]] += 1
    return all(v_count[i] - e_count[i] + f_count[i] == 2 for i in range(len(comps)))


def embedding_from_rotation(g: Graph, rotation: Sequence[Sequence[int]], external: int | None = None) -> PlanarEmbedding:
    """Trace faces; by default the longest face (first on ties) is external."""
    faces = trace_faces(g, rotation)
    if external is None:
        external = max(range(len(faces)), key=lambda i: (len(faces[i]), -i)) if faces else 0
    return PlanarEmbedding(tuple(tuple(r) for r in rotation), tuple(faces), external)


def is_planar_rotation(g: Graph, rotation: Sequence[Sequence[int]]) -> bool:
    return euler_ok(g, trace_faces(g, rotation))

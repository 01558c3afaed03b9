"""Bridges of a cycle, the conflict relation between them, and 2-colouring."""

from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Cycle, Graph, GraphError, component_labels, validate_cycle


@dataclass(frozen=True)
class Bridge:
    kind: str  # "chord" | "component"
    vertices: frozenset[int]
    attachments: tuple[int, ...]
    edges: frozenset[int]


@dataclass(frozen=True)
class ConflictWitness:
    """Cycle positions proving a conflict.

    ``interleave``: ``(a1, a2, a1', a2')`` in cyclic order, ``a1, a1'`` from the
    first bridge.  ``shared3``: three positions common to both bridges.
    """

    mode: str
    points: tuple[int, ...]

    def vertices(self, c: Cycle) -> tuple[int, ...]:
        return tuple(c.vertices[p] for p in self.points)


@dataclass(frozen=True)
class ConflictGraph:
    bridges: tuple[Bridge, ...]
    edges: dict[tuple[int, int], ConflictWitness]

    @property
    def size(self) -> int:
        return len(self.bridges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.size)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for a in adj:
            a.sort()
        return adj

    def to_json(self, c: Cycle) -> dict:
        return {
            "cycle": list(c.vertices),
            "bridges": [
                {"kind": b.kind, "vertices": sorted(b.vertices), "attachments": list(b.attachments), "edges": sorted(b.edges)}
                for b in self.bridges
            ],
            "conflicts": [
                {"pair": [i, j], "mode": w.mode, "points": list(w.vertices(c))} for (i, j), w in sorted(self.edges.items())
            ],
        }


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]


@dataclass(frozen=True)
class OddCycleWitness:
    """Closed walk ``walk[0], ..., walk[-1], walk[0]`` of odd length."""

    walk: tuple[int, ...]


# ---------------------------------------------------------------------------
# Bridges
# ---------------------------------------------------------------------------


@dataclass
class BridgeLabels:
    """Array form of the bridges of a cycle, used on hot paths.

    ``edge_bridge[e]`` is the bridge index of edge ``e`` or -1 for cycle edges.
    ``attachments[b]`` holds sorted cycle positions.
    """

    edge_bridge: np.ndarray
    kinds: list[str]
    attachments: list[tuple[int, ...]]
    vertex_label: np.ndarray
    comp_of_bridge: list[int]


def bridge_labels(g: Graph, c: Cycle) -> BridgeLabels:
    removed = np.zeros(g.n, dtype=bool)
    cyc_vertices = np.fromiter(c.vertices, dtype=np.int64, count=len(c.vertices))
    removed[cyc_vertices] = True
    count, labels = component_labels(g, removed)
    ea = g.edge_array
    m = len(ea)
    if m == 0:
        return BridgeLabels(np.zeros(0, dtype=np.int64), [], [], labels, [])
    lu = labels[ea[:, 0]]
    lv = labels[ea[:, 1]]
    raw = np.where(lu >= 0, lu, lv)
    on_both = raw < 0
    is_cycle = np.zeros(m, dtype=bool)
    is_cycle[np.fromiter(c.edges, dtype=np.int64, count=len(c.edges))] = True
    chord_mask = on_both & ~is_cycle
    chord_ids = np.nonzero(chord_mask)[0]
    raw[chord_ids] = count + np.arange(len(chord_ids))
    raw[is_cycle] = -1
    # order bridges by smallest edge id: first occurrence in edge order
    valid = np.nonzero(raw >= 0)[0]
    uniq, first = np.unique(raw[valid], return_index=True)
    order = np.argsort(valid[first], kind="stable")
    remap = np.full(count + len(chord_ids) + 1, -1, dtype=np.int64)
    remap[uniq[order]] = np.arange(len(order))
    edge_bridge = np.where(raw >= 0, remap[np.maximum(raw, 0)], -1)

    pos = np.full(g.n, -1, dtype=np.int64)
    pos[cyc_vertices] = np.arange(len(cyc_vertices))
    nb = len(order)
    kinds: list[str] = []
    comp_of_bridge: list[int] = []
    for raw_label in uniq[order]:
        if raw_label >= count:
            kinds.append("chord")
            comp_of_bridge.append(-1)
        else:
            kinds.append("component")
            comp_of_bridge.append(int(raw_label))
    att_sets: list[set[int]] = [set() for _ in range(nb)]
    one_end = (lu < 0) ^ (lv < 0)
    for e in np.nonzero(one_end)[0]:
        on = ea[e, 0] if lu[e] < 0 else ea[e, 1]
        att_sets[edge_bridge[e]].add(int(pos[on]))
    for e in chord_ids:
        b = edge_bridge[e]
        att_sets[b].update((int(pos[ea[e, 0]]), int(pos[ea[e, 1]])))
    attachments = [tuple(sorted(s)) for s in att_sets]
    return BridgeLabels(edge_bridge, kinds, attachments, labels, comp_of_bridge)


def bridges_of_cycle(g: Graph, c: Cycle) -> list[Bridge]:
    """One bridge per chord and per edge-carrying component of ``g - V(c)``.

    Components without any edge (isolated vertices) are not reported.
    """
    validate_cycle(g, c)
    bl = bridge_labels(g, c)
    return _materialise(g, c, bl)


def _materialise(g: Graph, c: Cycle, bl: BridgeLabels) -> list[Bridge]:
    nb = len(bl.kinds)
    edge_lists: list[list[int]] = [[] for _ in range(nb)]
    for e, b in enumerate(bl.edge_bridge.tolist()):
        if b >= 0:
            edge_lists[b].append(e)
    out = []
    for b in range(nb):
        if bl.kinds[b] == "chord":
            verts: frozenset[int] = frozenset()
        else:
            verts = frozenset(np.nonzero(bl.vertex_label == bl.comp_of_bridge[b])[0].tolist())
        atts = tuple(c.vertices[p] for p in bl.attachments[b])
        out.append(Bridge(bl.kinds[b], verts, atts, frozenset(edge_lists[b])))
    return out


# ---------------------------------------------------------------------------
# Conflicts
# ---------------------------------------------------------------------------


def conflict_positions(a: Sequence[int], b: Sequence[int]) -> ConflictWitness | None:
    """Conflict test on sorted cycle positions.

    Interleaving is preferred; a ``shared3`` witness is returned only when the
    bridges share three attachments and no interleaving exists.
    """
    r = len(a)
    if r >= 2 and len(b) >= 2:
        w = _interleave(a, b)
        if w is not None:
            return ConflictWitness("interleave", w)
    common = sorted(set(a).intersection(b))
    if len(common) >= 3:
        return ConflictWitness("shared3", tuple(common[:3]))
    return None


def _interleave(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int, int] | None:
    r = len(a)
    a_set = set(a)
    seg_points: dict[int, int] = {}
    for q in b:
        if q in a_set:
            continue
        i = (bisect_left(a, q) - 1) % r
        if i not in seg_points:
            seg_points[i] = q
            if len(seg_points) == 2:
                (i, q), (j, q2) = seg_points.items()
                return (a[(i + 1) % r], q2, a[(j + 1) % r], q)
    if seg_points:
        ((i, q),) = seg_points.items()
        ends = {a[i], a[(i + 1) % r]}
        for p in b:
            if p in a_set and p not in ends:
                return (a[(i + 1) % r], p, a[i], q)
        return None
    # every attachment of b is an attachment of a
    idx = [bisect_left(a, p) for p in b]
    for x in range(len(idx)):
        for y in range(x + 1, len(idx)):
            lo, hi = idx[x], idx[y]
            if hi - lo >= 2 and r - (hi - lo) >= 2:
                return (a[lo + 1], a[hi], a[(hi + 1) % r], a[lo])
    return None


def conflicts(b1: Bridge, b2: Bridge, c: Cycle) -> ConflictWitness | None:
    pos = c.position
    try:
        p1 = sorted(pos[v] for v in b1.attachments)
        p2 = sorted(pos[v] for v in b2.attachments)
    except KeyError:
        raise GraphError("bridge attachment is not on the cycle") from None
    return conflict_positions(p1, p2)


def conflict_graph(g: Graph, c: Cycle) -> ConflictGraph:
    validate_cycle(g, c)
    bl = bridge_labels(g, c)
    bridges = _materialise(g, c, bl)
    return ConflictGraph(tuple(bridges), conflict_edges(bl.attachments))


def conflict_edges(attachments: Sequence[Sequence[int]]) -> dict[tuple[int, int], ConflictWitness]:
    edges = {}
    k = len(attachments)
    for i in range(k):
        ai = attachments[i]
        if len(ai) < 2:
            continue
        for j in range(i + 1, k):
            w = conflict_positions(ai, attachments[j])
            if w is not None:
                edges[(i, j)] = w
    return edges


# ---------------------------------------------------------------------------
# Two-colouring
# ---------------------------------------------------------------------------


def two_color(h: ConflictGraph | Sequence[Sequence[int]], anchor: int | None = 0) -> Coloring | OddCycleWitness:
    """Bipartition ``h`` or return an odd closed walk.

    The anchor gets colour 0; every other component is anchored at its smallest
    node, also coloured 0.  ``h`` may be a :class:`ConflictGraph` or plain
    adjacency lists.
    """
    adj = h.adjacency() if isinstance(h, ConflictGraph) else [list(a) for a in h]
    k = len(adj)
    if k == 0:
        return Coloring(())
    if anchor is None:
        anchor = 0
    if not 0 <= anchor < k:
        raise GraphError(f"anchor {anchor} is not a node of the conflict graph")
    color = [-1] * k
    parent = [-1] * k
    depth = [0] * k
    for start in [anchor] + list(range(k)):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return OddCycleWitness(_odd_walk(v, w, parent, depth))
    return Coloring(tuple(color))


def _odd_walk(v: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    left, right = [v], [w]
    x, y = v, w
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        left.append(x)
        right.append(y)
    right.pop()
    return tuple(left[::-1] + right)


def is_odd_closed_walk(adj: Sequence[Sequence[int]], walk: Sequence[int]) -> bool:
    if len(walk) % 2 == 0 or len(walk) < 3:
        return False
    sets = [set(a) for a in adj]
    return all(walk[(i + 1) % len(walk)] in sets[walk[i]] for i in range(len(walk)))

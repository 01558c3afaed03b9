"""Simple undirected graphs, spanning trees, fundamental cycles and GF(2) edge sets.

Vertices are ``0..n-1`` and edges carry stable integer ids assigned in input
order.  Every object here is immutable once built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

EdgeSet = frozenset


class GraphError(ValueError):
    """Raised for malformed graphs or invalid graph arguments."""


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        index = {}
        for eid, (u, v) in enumerate(self.edges):
            index[(u, v)] = eid
            index[(v, u)] = eid
        return index

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(w for w, _ in adj) for adj in self.adjacency)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """``(m, 2)`` int array of endpoints, for vectorised work."""
        if not self.edges:
            return np.zeros((0, 2), dtype=np.int64)
        return np.asarray(self.edges, dtype=np.int64)

    @cached_property
    def csr_layout(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Symmetric adjacency as ``(row_of_entry, indices, indptr)`` arrays."""
        ea = self.edge_array
        rows = np.concatenate([ea[:, 0], ea[:, 1]])
        cols = np.concatenate([ea[:, 1], ea[:, 0]])
        order = np.lexsort((cols, rows))
        rows, cols = rows[order].astype(np.int32), cols[order].astype(np.int32)
        indptr = np.zeros(self.n + 1, dtype=np.int32)
        np.cumsum(np.bincount(rows, minlength=self.n), out=indptr[1:])
        return rows, cols, indptr

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self.edge_index[(u, v)]
        except KeyError:
            raise GraphError(f"no edge between {u} and {v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    def other(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if v == a else a

    def subgraph_edges(self, eids: Iterable[int]) -> Graph:
        """Spanning subgraph (same vertex set) on the given edges, renumbered in order."""
        return build_graph(self.n, [self.edges[e] for e in eids])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a simple graph; edge ids follow the order of ``pairs``."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex id out of range in edge ({u}, {v}) for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        eid = len(edges)
        edges.append(key)
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    adjacency = tuple(tuple(sorted(a)) for a in adj)
    return Graph(n, tuple(edges), adjacency)


def _complete(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def canonical_graph(name: str, rows: int | None = None, cols: int | None = None) -> Graph:
    """Fixed test corpus with documented numbering.

    * ``K4``, ``K5``, ``K6``: complete graphs, edges in lexicographic order.
    * ``K33``: parts ``{0,1,2}`` and ``{3,4,5}``, edges ``(i, j)`` lexicographic.
    * ``W5``: hub 0, rim ``1..5``; spokes ``(0,i)`` first, then rim ``(i,i+1)``, then ``(1,5)``.
    * ``Q3``: cube on bit-strings ``0..7``, edges between ids differing in one bit.
    * ``Petersen``: outer 5-cycle ``0..4``, spokes ``(i, i+5)``, inner pentagram
      ``(5+i, 5+(i+2)%5)``.
    * ``octahedron``: K6 minus the perfect matching ``(0,1),(2,3),(4,5)``.
    * ``prism``: triangles ``0,1,2`` and ``3,4,5`` with matching ``(i, i+3)``.
    * ``grid(r,c)`` / ``grid`` with rows/cols: vertex ``i*c + j``, horizontal edges
      of each row then vertical edges.
    * ``C<k>``, ``P<k>``: cycle and path on ``k`` vertices.
    """
    key = name.strip()
    if key.lower().startswith("grid"):
        if "(" in key:
            inner = key[key.index("(") + 1 : key.rindex(")")]
            rows, cols = (int(x) for x in inner.split(","))
        if rows is None or cols is None:
            raise GraphError("grid needs rows and cols")
        pairs = []
        for i in range(rows):
            for j in range(cols - 1):
                pairs.append((i * cols + j, i * cols + j + 1))
        for i in range(rows - 1):
            for j in range(cols):
                pairs.append((i * cols + j, (i + 1) * cols + j))
        return build_graph(rows * cols, pairs)
    if key in ("K4", "K5", "K6"):
        n = int(key[1])
        return build_graph(n, _complete(n))
    if key in ("K33", "K3,3"):
        return build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    if key == "W5":
        pairs = [(0, i) for i in range(1, 6)] + [(i, i + 1) for i in range(1, 5)] + [(1, 5)]
        return build_graph(6, pairs)
    if key == "Q3":
        return build_graph(8, [(i, i ^ (1 << b)) for i in range(8) for b in range(3) if i < i ^ (1 << b)])
    if key == "Petersen":
        pairs = [(i, (i + 1) % 5) for i in range(5)]
        pairs += [(i, i + 5) for i in range(5)]
        pairs += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return build_graph(10, pairs)
    if key == "octahedron":
        matching = {(0, 1), (2, 3), (4, 5)}
        return build_graph(6, [p for p in _complete(6) if p not in matching])
    if key == "prism":
        return build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    if key[:1] in ("C", "P") and key[1:].isdigit():
        k = int(key[1:])
        pairs = [(i, i + 1) for i in range(k - 1)]
        if key[0] == "C":
            if k < 3:
                raise GraphError("cycle needs at least 3 vertices")
            pairs.append((0, k - 1))
        return build_graph(k, pairs)
    raise GraphError(f"unknown canonical graph {name!r}")


# ---------------------------------------------------------------------------
# Spanning trees and cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SpanningTree:
    root: int
    parent: tuple[int, ...]
    parent_edge: tuple[int, ...]
    depth: tuple[int, ...]
    tree_edges: frozenset[int]

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[v] >= 0:
            v = self.parent[v]
            out.append(v)
        return out


def spanning_tree(g: Graph, root: int = 0) -> SpanningTree:
    """Breadth-first spanning tree; neighbours are visited in ascending id."""
    if g.n == 0:
        raise GraphError("empty graph has no spanning tree")
    parent = [-1] * g.n
    parent_edge = [-1] * g.n
    depth = [-1] * g.n
    depth[root] = 0
    queue = deque([root])
    tree: set[int] = set()
    while queue:
        v = queue.popleft()
        for w, eid in g.adjacency[v]:
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                parent[w] = v
                parent_edge[w] = eid
                tree.add(eid)
                queue.append(w)
    if len(tree) != g.n - 1:
        raise GraphError("graph is disconnected")
    return SpanningTree(root, tuple(parent), tuple(parent_edge), tuple(depth), frozenset(tree))


@dataclass(frozen=True)
class Cycle:
    """A simple cycle: vertices in cyclic order and the matching edge ids."""

    vertices: tuple[int, ...]
    edges: frozenset[int]

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}


def cycle_from_vertices(g: Graph, vertices: Sequence[int]) -> Cycle:
    k = len(vertices)
    if k < 3 or len(set(vertices)) != k:
        raise GraphError("a cycle needs at least 3 distinct vertices")
    eids = []
    for i in range(k):
        u, v = vertices[i], vertices[(i + 1) % k]
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        eids.append(g.edge_index[(u, v)])
    return Cycle(tuple(vertices), frozenset(eids))


def cycle_from_edges(g: Graph, eids: Iterable[int]) -> Cycle:
    """Order an edge set into a cycle; raise if it is not one simple cycle."""
    eids = frozenset(eids)
    if len(eids) < 3:
        raise GraphError("edge set too small to be a cycle")
    inc: dict[int, list[int]] = {}
    for e in eids:
        for v in g.edges[e]:
            inc.setdefault(v, []).append(e)
    if any(len(es) != 2 for es in inc.values()):
        raise GraphError("edge set has a vertex of degree other than 2")
    start = min(inc)
    order = [start]
    prev_e = min(inc[start])
    v = g.other(prev_e, start)
    while v != start:
        order.append(v)
        e1, e2 = inc[v]
        nxt = e2 if e1 == prev_e else e1
        v = g.other(nxt, v)
        prev_e = nxt
    if len(order) != len(inc):
        raise GraphError("edge set is a union of several cycles")
    return Cycle(tuple(order), eids)


def is_simple_cycle(g: Graph, eids: Iterable[int]) -> bool:
    try:
        cycle_from_edges(g, eids)
    except GraphError:
        return False
    return True


def fundamental_cycle(g: Graph, t: SpanningTree, eid: int) -> Cycle:
    """The unique cycle of ``t + eid``; starts at the lower endpoint of the edge."""
    if eid in t.tree_edges:
        raise GraphError(f"edge {eid} is a tree edge")
    a, b = g.edges[eid]
    left, right = [a], [b]
    x, y = a, b
    while t.depth[x] > t.depth[y]:
        x = t.parent[x]
        left.append(x)
    while t.depth[y] > t.depth[x]:
        y = t.parent[y]
        right.append(y)
    while x != y:
        x = t.parent[x]
        y = t.parent[y]
        left.append(x)
        right.append(y)
    right.pop()
    verts = left + right[::-1]
    edges = [eid]
    for i in range(len(verts) - 1):
        edges.append(g.edge_index[(verts[i], verts[i + 1])])
    return Cycle(tuple(verts), frozenset(edges))


def non_tree_edges(g: Graph, t: SpanningTree) -> list[int]:
    return [e for e in range(g.m) if e not in t.tree_edges]


def xor(a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    """Symmetric difference of two edge sets (addition in GF(2))."""
    return frozenset(a).symmetric_difference(b)


def xor_all(sets: Iterable[Iterable[int]]) -> frozenset[int]:
    acc: set[int] = set()
    for s in sets:
        acc.symmetric_difference_update(s)
    return frozenset(acc)


# ---------------------------------------------------------------------------
# Components and cycle classification
# ---------------------------------------------------------------------------


def components(g: Graph, retained: Iterable[int]) -> list[list[int]]:
    """Connected components of the subgraph induced on ``retained``.

    Components are sorted internally and ordered by their smallest vertex.
    """
    keep = set(retained)
    seen: set[int] = set()
    out = []
    for s in sorted(keep):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            v = stack.pop()
            for w, _ in g.adjacency[v]:
                if w in keep and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def component_labels(g: Graph, removed: np.ndarray) -> tuple[int, np.ndarray]:
    """Label connected components of ``g`` minus the vertices flagged in ``removed``.

    Removed vertices get label -1.  Returns the number of components among the
    retained vertices and the label array.
    """
    rows, cols, indptr = g.csr_layout
    # edges touching a removed vertex become self-loops, which keeps the layout
    cut = removed[rows] | removed[cols]
    indices = np.where(cut, rows, cols)
    mat = csr_matrix((np.ones(len(indices)), indices, indptr), shape=(g.n, g.n))
    _, raw = connected_components(mat, directed=False)
    labels = raw.astype(np.int64)
    kept = ~removed
    used = np.zeros(len(labels) + 1, dtype=bool)
    used[labels[kept]] = True
    dense = np.cumsum(used) - 1
    labels = np.where(kept, dense[labels], -1)
    return int(used.sum()), labels


def chords(g: Graph, c: Cycle) -> list[int]:
    on = c.position
    out = []
    for v in c.vertices:
        for w, eid in g.adjacency[v]:
            if v < w and w in on and eid not in c.edges:
                out.append(eid)
    return sorted(out)


@dataclass(frozen=True)
class CycleFlags:
    induced: bool
    nonseparating: bool


def validate_cycle(g: Graph, c: Cycle) -> None:
    check = cycle_from_vertices(g, c.vertices)
    if check.edges != c.edges:
        raise GraphError("cycle edge set does not match its vertex order")


def classify_cycle(g: Graph, c: Cycle) -> CycleFlags:
    validate_cycle(g, c)
    induced = not chords(g, c)
    removed = np.zeros(g.n, dtype=bool)
    removed[list(c.vertices)] = True
    count, _ = component_labels(g, removed)
    return CycleFlags(induced=induced, nonseparating=count <= 1)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g, range(g.n))) == 1

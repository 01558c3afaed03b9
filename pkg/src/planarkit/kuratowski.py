"""Extraction of a verified K5 or K3,3 minor from a non-planar graph.

Outline: find the shortest non-planar prefix of the edge list, embed it without
its last edge ``xy``, and build a cycle through ``x`` and ``y`` from faces along
a dual path.  That cycle's conflict graph is not bipartite.  An induced odd
cycle of length at least five is turned into a K5 by cutting each bridge down
to one path; a triangle is shrunk to a tiny graph and searched exhaustively.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .conflict import Bridge, ConflictGraph, OddCycleWitness, conflict_graph, conflict_positions, two_color
from .decompose import blocks
from .embed3 import embed
from .embedding import PlanarEmbedding, walk_edge_set, walk_edges
from .graph import Cycle, Graph, GraphError, build_graph, cycle_from_edges, is_simple_cycle, xor_all
from .minor import MinorModel
from .oracle import brute_force_minor, verify_minor

KuratowskiMinor = MinorModel

TRIANGLE_MAX_VERTICES = 15
TRIANGLE_MAX_EDGES = 24


class PlanarGraphError(GraphError):
    """The input was expected to be non-planar."""


class ExtractionError(AssertionError):
    """An internal postcondition failed; this indicates a bug, not bad input."""


class RedirectToTriangle(Exception):
    """Two consecutive bridges share three attachments and have no others."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"bridges {pair} can only conflict through shared attachments")
        self.pair = pair


class ReductionFailed(Exception):
    pass


# ---------------------------------------------------------------------------
# Minimal non-planar prefix
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalPrefix:
    """``graph`` keeps all ``n`` vertices; its edge ``j`` is input edge ``edge_map[j]``.

    The culprit is always the last edge of ``graph``.
    """

    graph: Graph
    edge_map: tuple[int, ...]
    culprit: int
    x: int
    y: int

    @property
    def size(self) -> int:
        return len(self.edge_map)


def _prefix(g: Graph, order: Sequence[int], i: int) -> Graph:
    return build_graph(g.n, [g.edges[e] for e in order[:i]])


def minimal_nonplanar_prefix(g: Graph, order: Sequence[int] | None = None) -> MinimalPrefix:
    """Smallest ``i`` such that the first ``i`` edges (in ``order``) are non-planar."""
    order = list(range(g.m)) if order is None else [int(e) for e in order]
    if sorted(order) != list(range(g.m)):
        raise GraphError("order must be a permutation of the edge ids")
    if isinstance(embed(g), PlanarEmbedding):
        raise PlanarGraphError("graph is planar")
    lo, hi = 0, g.m  # prefix of length lo is planar, of length hi is not
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if isinstance(embed(_prefix(g, order, mid)), PlanarEmbedding):
            lo = mid
        else:
            hi = mid
    gp = _prefix(g, order, hi)
    x, y = gp.edges[hi - 1]
    return MinimalPrefix(gp, tuple(order[:hi]), hi - 1, x, y)


# ---------------------------------------------------------------------------
# Witness cycle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessCycle:
    """Cycle of ``graph`` whose conflict graph is not bipartite.

    ``graph`` is one block of the prefix minus its last edge, plus the edge
    ``xy`` joining the block's two ports.  When the ports are not the ends of
    the culprit, that edge stands for ``detour``, a path of the prefix running
    outside the block.
    """

    graph: Graph
    cycle: Cycle
    dual_path: tuple[int, ...]
    conflict: ConflictGraph
    odd_walk: tuple[int, ...]
    x: int
    y: int
    detour: tuple[int, ...] = ()


def _block_chain(h: Graph, x: int, y: int) -> list[tuple[int, int, int]]:
    """Blocks met on the way from ``x`` to ``y`` with their entry and exit ports."""
    bct = blocks(h)
    cut = set(bct.cut_vertices)
    nodes: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for i, c in bct.links:
        nodes.setdefault(("B", i), []).append(("C", c))
        nodes.setdefault(("C", c), []).append(("B", i))

    def home(v: int) -> tuple[str, int]:
        if v in cut:
            return ("C", v)
        for i, b in enumerate(bct.blocks):
            if any(v in h.edges[e] for e in b):
                return ("B", i)
        raise ExtractionError(f"vertex {v} lies in no block")

    start, goal = home(x), home(y)
    parent = {start: start}
    queue = deque([start])
    while queue and goal not in parent:
        node = queue.popleft()
        for nxt in nodes.get(node, []):
            if nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    if goal not in parent:
        raise ExtractionError("x and y are in different components")
    path = [goal]
    while path[-1] != start:
        path.append(parent[path[-1]])
    path.reverse()
    chain = []
    for t, (kind, i) in enumerate(path):
        if kind != "B":
            continue
        a = path[t - 1][1] if t > 0 else x
        b = path[t + 1][1] if t + 1 < len(path) else y
        chain.append((i, a, b))
    return chain


def _focus(gp: Graph, x: int, y: int) -> tuple[Graph, int, int, tuple[int, ...]]:
    """Block plus port edge that is already non-planar, with the port detour."""
    h = build_graph(gp.n, gp.edges[:-1])
    bct = blocks(h)
    for i, a, b in _block_chain(h, x, y):
        if h.has_edge(a, b):
            continue
        star = build_graph(gp.n, [h.edges[e] for e in bct.blocks[i]] + [(a, b)])
        if isinstance(embed(star), PlanarEmbedding):
            continue
        if {a, b} == {x, y}:
            return star, a, b, ()
        inside = set(bct.block_vertices(h, i)) - {a, b}
        parent = {a: -1}
        queue = deque([a])
        while queue and b not in parent:
            v = queue.popleft()
            for w, _ in gp.adjacency[v]:
                if w not in parent and w not in inside:
                    parent[w] = v
                    queue.append(w)
        path = [b]
        while parent[path[-1]] >= 0:
            path.append(parent[path[-1]])
        return star, a, b, tuple(reversed(path))
    raise ExtractionError("every block on the x-y chain stays planar with its port edge")


def _fill_holes(region: set[int], dual: Sequence[set[int]], has_x: Sequence[bool], has_y: Sequence[bool]) -> set[int]:
    """Add every component of the outside faces that touches neither port.

    A path of faces can enclose a pocket, making its boundary pinch at a
    vertex.  Once the outside is connected the boundary is a simple cycle.
    """
    out = set(region)
    seen = set(region)
    for s in range(len(dual)):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            f = queue.popleft()
            for w in dual[f]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        if not any(has_x[f] or has_y[f] for f in comp):
            out.update(comp)
    return out


def witness_cycle(mp: MinimalPrefix) -> WitnessCycle:
    """Cycle through the ports whose conflict graph is not bipartite.

    Face pairs ``(F_x, F_y)`` are tried in ascending index order; the dual path
    between them is a breadth-first path whose interior avoids every face that
    touches ``x`` or ``y``.
    """
    if mp.culprit != mp.graph.m - 1:
        raise ExtractionError("culprit must be the last prefix edge")
    gp, x, y, detour = _focus(mp.graph, mp.x, mp.y)
    h = build_graph(gp.n, gp.edges[:-1])  # edge ids agree with gp
    pe = embed(h)
    if not isinstance(pe, PlanarEmbedding):
        raise ExtractionError("prefix minus its last edge is not planar")
    faces = pe.faces
    edge_faces: dict[int, set[int]] = {}
    for fi, f in enumerate(faces):
        for e in walk_edges(h, f):
            edge_faces.setdefault(e, set()).add(fi)
    dual: list[set[int]] = [set() for _ in faces]
    for fs in edge_faces.values():
        for a in fs:
            dual[a].update(fs - {a})
    has_x = [x in f for f in faces]
    has_y = [y in f for f in faces]
    if any(a and b for a, b in zip(has_x, has_y)):
        raise ExtractionError("x and y share a face, so the prefix would be planar")
    for fx in (i for i, flag in enumerate(has_x) if flag):
        parent = {fx: -1}
        queue = deque([fx])
        while queue:
            f = queue.popleft()
            for w in sorted(dual[f]):
                if w in parent or has_x[w]:
                    continue
                parent[w] = f
                if not has_y[w]:
                    queue.append(w)
        for fy in (i for i, flag in enumerate(has_y) if flag and i in parent):
            path = [fy]
            while parent[path[-1]] >= 0:
                path.append(parent[path[-1]])
            path.reverse()
            region = _fill_holes(set(path), dual, has_x, has_y)
            eids = xor_all(walk_edge_set(h, faces[f]) for f in region)
            if not is_simple_cycle(gp, eids):
                continue
            c = cycle_from_edges(gp, eids)
            if x not in c.position or y not in c.position:
                continue
            cg = conflict_graph(gp, c)
            res = two_color(cg)
            if isinstance(res, OddCycleWitness):
                return WitnessCycle(gp, c, tuple(path), cg, res.walk, x, y, detour)
    raise ExtractionError("no dual path produced a cycle with a non-bipartite conflict graph")


def expand_detour(model: MinorModel, detour: Sequence[int]) -> MinorModel:
    """Replace the port edge of a focused block by the real detour path."""
    if len(detour) <= 2:
        return model
    a, b, inner = detour[0], detour[-1], list(detour[1:-1])
    paths = []
    spliced = False
    for p in model.paths:
        q = list(p)
        for i in range(len(q) - 1):
            if not spliced and {q[i], q[i + 1]} == {a, b}:
                q[i + 1:i + 1] = inner if q[i] == a else inner[::-1]
                spliced = True
                break
        paths.append(tuple(q))
    sets = [list(bs) for bs in model.branch_sets]
    if not spliced:
        owner = {v: i for i, bs in enumerate(sets) for v in bs}
        if a in owner and b in owner:
            sets[owner[a]].extend(inner)
    return MinorModel(model.kind, tuple(tuple(sorted(bs)) for bs in sets), tuple(paths))


# ---------------------------------------------------------------------------
# Induced odd cycle
# ---------------------------------------------------------------------------


def _adjacency_sets(h: ConflictGraph | Sequence[Sequence[int]]) -> list[set[int]]:
    adj = h.adjacency() if isinstance(h, ConflictGraph) else h
    return [set(a) for a in adj]


def is_induced_odd_cycle(adj: Sequence[set[int]], cyc: Sequence[int]) -> bool:
    k = len(cyc)
    if k < 3 or k % 2 == 0 or len(set(cyc)) != k:
        return False
    pos = {v: i for i, v in enumerate(cyc)}
    for i, v in enumerate(cyc):
        for w in adj[v]:
            if w in pos and (pos[w] - i) % k not in (1, k - 1):
                return False
    return all(cyc[(i + 1) % k] in adj[cyc[i]] for i in range(k))


def induced_odd_cycle(h: ConflictGraph | Sequence[Sequence[int]]) -> list[int]:
    """Chordless odd cycle of a non-bipartite graph."""
    adj = _adjacency_sets(h)
    k = len(adj)
    color = [-1] * k
    parent = [-1] * k
    depth = [0] * k
    for s in range(k):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in sorted(adj[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    queue.append(w)
    mono = next(((u, w) for u in range(k) for w in sorted(adj[u]) if u < w and color[u] == color[w]), None)
    if mono is None:
        raise GraphError("graph is bipartite")
    u, w = mono
    while True:
        cyc = _tree_cycle(u, w, parent, depth)
        pos = {v: i for i, v in enumerate(cyc)}
        chord = None
        for a in cyc:
            for b in sorted(adj[a]):
                if b in pos and color[a] == color[b] and {a, b} != {u, w}:
                    chord = (a, b)
                    break
            if chord:
                break
        if chord is None:
            break
        u, w = chord  # its tree cycle is a strict sub-path plus the chord
    last = len(cyc) - 1
    walk = [0]
    i = 0
    while i != last:
        reach = [pos[b] for b in adj[cyc[i]] if b in pos and pos[b] > i and not (i == 0 and pos[b] == last)]
        i = max(reach)
        walk.append(i)
    out = [cyc[j] for j in walk]
    if not is_induced_odd_cycle(adj, out):
        raise ExtractionError("short-circuit walk did not give an induced odd cycle")
    return out


def _tree_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> list[int]:
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return left + right[::-1]


# ---------------------------------------------------------------------------
# Odd cycle of length >= 5: one path per bridge
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PathReduction:
    """Cycle plus one path per bridge of an odd conflict cycle.

    Along ``cycle`` (in its stored direction) the chosen points read
    ``u_0, v_{2k}, u_1, v_0, u_2, v_1, ..., u_{2k}, v_{2k-1}`` up to rotation.
    ``paths[i]`` runs from ``u[i]`` to ``v[i]`` through bridge ``i`` only.
    """

    graph: Graph
    cycle: Cycle
    bridge_ids: tuple[int, ...]
    u: tuple[int, ...]
    v: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


def _crosses(p: tuple[int, int], q: tuple[int, int], length: int) -> bool:
    a, b = p
    span = (b - a) % length

    def inside(x: int) -> bool:
        return 0 < (x - a) % length < span

    return inside(q[0]) != inside(q[1])


def _witness_points(cg: ConflictGraph, i: int, j: int) -> set[int]:
    """Positions that bridge ``i`` contributes to its conflict witness with ``j``."""
    w = cg.edges.get((min(i, j), max(i, j)))
    if w is None:
        return set()
    if w.mode == "shared3":
        return set(w.points)
    first = w.points[0::2]
    second = w.points[1::2]
    return set(first if i < j else second)


def _pattern(pairs: list[tuple[int, int]], length: int) -> tuple[bool, list[int], list[int]] | None:
    """Match the chosen points against the interleaving pattern.

    Returns ``(reversed, u_positions, v_positions)`` or None.
    """
    nb = len(pairs)
    expected = []
    for i in range(nb):
        expected.append((i, "u"))
        expected.append(((i - 1) % nb, "v"))
    points = sorted((p, b) for b, pair in enumerate(pairs) for p in pair)
    for rev in (False, True):
        seq = points[::-1] if rev else points
        for r in range(len(seq)):
            rot = seq[r:] + seq[:r]
            if all(rot[t][1] == expected[t][0] for t in range(len(rot))):
                u = [0] * nb
                v = [0] * nb
                for (p, b), (_, role) in zip(rot, expected):
                    if role == "u":
                        u[b] = p
                    else:
                        v[b] = p
                return rev, u, v
    return None


def _assign(pools: list[list[int]], length: int) -> tuple[bool, list[int], list[int]] | None:
    nb = len(pools)
    options = [list(combinations(sorted(p), 2)) for p in pools]
    chosen: list[tuple[int, int]] = []
    used: set[int] = set()

    def consecutive(i: int, j: int) -> bool:
        return (i - j) % nb in (1, nb - 1)

    def go(i: int):
        if i == nb:
            return _pattern(chosen, length)
        for pair in options[i]:
            if pair[0] in used or pair[1] in used:
                continue
            if any(_crosses(pair, chosen[j], length) != consecutive(i, j) for j in range(i)):
                continue
            chosen.append(pair)
            used.update(pair)
            res = go(i + 1)
            if res is not None:
                return res
            chosen.pop()
            used.difference_update(pair)
        return None

    return go(0)


def _bridge_path(g: Graph, bridge: Bridge, a: int, b: int) -> tuple[int, ...]:
    """Path from attachment ``a`` to ``b`` whose interior lies inside the bridge."""
    if bridge.kind == "chord":
        return (a, b)
    inner = bridge.vertices
    parent = {a: -1}
    queue = deque([a])
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if w == b and v != a:
                path = [b, v]
                while parent[path[-1]] >= 0:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            if w in inner and w not in parent:
                parent[w] = v
                queue.append(w)
    raise ExtractionError(f"no path between {a} and {b} through the bridge")


def reduce_bridges_to_paths(wc: WitnessCycle, oddcycle: Sequence[int]) -> PathReduction:
    """Pick two attachments per bridge so that conflicts are witnessed by interleaving."""
    nb = len(oddcycle)
    if nb < 5 or nb % 2 == 0:
        raise GraphError("need an odd conflict cycle of length at least 5")
    cg, c, g = wc.conflict, wc.cycle, wc.graph
    length = len(c.vertices)
    pos = c.position
    atts = [sorted(pos[v] for v in cg.bridges[b].attachments) for b in oddcycle]
    for i in range(nb):
        j = (i + 1) % nb
        a, b = oddcycle[i], oddcycle[j]
        w = cg.edges.get((min(a, b), max(a, b)))
        if w is None:
            raise GraphError("consecutive bridges of the odd cycle do not conflict")
        if w.mode == "shared3" and len(atts[i]) == 3 and len(atts[j]) == 3:
            raise RedirectToTriangle((a, b))
    pools = []
    for i in range(nb):
        b = oddcycle[i]
        pts = _witness_points(cg, b, oddcycle[i - 1]) | _witness_points(cg, b, oddcycle[(i + 1) % nb])
        pools.append(sorted(pts))
    res = _assign(pools, length)
    if res is None:
        res = _assign(atts, length)
    if res is None:
        raise ReductionFailed("no attachment choice realises the interleaving pattern")
    rev, up, vp = res
    cycle = Cycle(tuple(reversed(c.vertices)), c.edges) if rev else c
    u = tuple(c.vertices[p] for p in up)
    v = tuple(c.vertices[p] for p in vp)
    paths = tuple(_bridge_path(g, cg.bridges[oddcycle[i]], u[i], v[i]) for i in range(nb))
    return PathReduction(g, cycle, tuple(oddcycle), u, v, paths)


def _arc(c: Cycle, a: int, b: int) -> list[int]:
    """Cycle vertices from ``a`` forward to ``b``, both included."""
    pos = c.position
    length = len(c.vertices)
    i, j = pos[a], pos[b]
    return [c.vertices[(i + t) % length] for t in range((j - i) % length + 1)]


def k5_minor_from_reduction(pr: PathReduction) -> KuratowskiMinor:
    """Assemble a K5 from the cycle arcs and bridge paths."""
    nb = len(pr.u)
    u, v, p, c = pr.u, pr.v, pr.paths, pr.cycle
    s1 = _arc(c, v[nb - 2], u[0])
    s2 = _arc(c, v[nb - 1], u[1])
    s3 = _arc(c, v[0], u[2])
    s4 = _arc(c, v[1], u[3])
    for j in range(3, nb - 3, 2):
        s4 += list(p[j]) + _arc(c, v[j], u[j + 2])
    s5 = _arc(c, v[nb - 3], u[nb - 1])
    chain = list(p[2])
    for j in range(4, nb - 2, 2):
        chain += _arc(c, v[j - 2], u[j])[1:] + list(p[j])[1:]
    paths = [
        _arc(c, u[0], v[nb - 1]),
        _arc(c, u[1], v[0]),
        _arc(c, u[2], v[1]),
        _arc(c, u[nb - 2], v[nb - 3]),
        _arc(c, u[nb - 1], v[nb - 2]),
        list(p[0]),
        list(p[nb - 2]),
        list(p[1]),
        list(p[nb - 1]),
        chain,
    ]
    model = MinorModel(
        "K5",
        tuple(tuple(sorted(set(s))) for s in (s1, s2, s3, s4, s5)),
        tuple(tuple(q) for q in paths),
    )
    if not verify_minor(pr.graph, model):
        raise ExtractionError("assembled K5 model does not verify")
    return model


# ---------------------------------------------------------------------------
# Triangle of conflicts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TriangleReduction:
    """Small graph standing in for the cycle and three bridges.

    ``expansion[r]`` lists the prefix-graph vertices that reduced vertex ``r``
    stands for.
    """

    graph: Graph
    expansion: tuple[tuple[int, ...], ...]


def _kept_points(atts: list[list[int]], pools: list[list[int]]) -> list[list[int]] | None:
    def subsets(pool: list[int]):
        for size in range(2, min(4, len(pool)) + 1):
            yield from combinations(pool, size)

    for sa in subsets(pools[0]):
        for sb in subsets(pools[1]):
            if conflict_positions(list(sa), list(sb)) is None:
                continue
            for sc in subsets(pools[2]):
                if conflict_positions(list(sa), list(sc)) and conflict_positions(list(sb), list(sc)):
                    return [list(sa), list(sb), list(sc)]
    return None


def triangle_reduction(wc: WitnessCycle, tri: Sequence[int]) -> TriangleReduction:
    """Contract bridge interiors to hubs and cycle arcs to single edges."""
    cg, c = wc.conflict, wc.cycle
    length = len(c.vertices)
    pos = c.position
    bridges = [cg.bridges[b] for b in tri]
    atts = [sorted(pos[v] for v in br.attachments) for br in bridges]
    pools: list[set[int]] = [set(), set(), set()]
    for s, t in combinations(range(3), 2):
        w = conflict_positions(atts[s], atts[t])
        if w is None:
            raise GraphError(f"bridges {tri[s]} and {tri[t]} do not conflict")
        if w.mode == "shared3":
            pools[s].update(w.points)
            pools[t].update(w.points)
        else:
            pools[s].update(w.points[0::2])
            pools[t].update(w.points[1::2])
    kept = _kept_points(atts, [sorted(p) for p in pools])
    if kept is None:
        kept = _kept_points(atts, atts)
    if kept is None:
        raise ExtractionError("could not shrink the triangle's attachment sets")
    points = sorted(set().union(*map(set, kept)))
    rank = {p: r for r, p in enumerate(points)}
    expansion: list[tuple[int, ...]] = []
    for r, p in enumerate(points):
        nxt = points[(r + 1) % len(points)]
        gap = (nxt - p) % length or length
        expansion.append(tuple(c.vertices[(p + t) % length] for t in range(gap)))
    pairs = {(r, (r + 1) % len(points)) for r in range(len(points))}
    for br, ks in zip(bridges, kept):
        if br.kind == "chord":
            pairs.add((rank[ks[0]], rank[ks[1]]))
            continue
        hub = len(expansion)
        expansion.append(tuple(sorted(br.vertices)))
        pairs.update((rank[p], hub) for p in ks)
    edges = sorted({(min(a, b), max(a, b)) for a, b in pairs if a != b})
    red = build_graph(len(expansion), edges)
    if red.n > TRIANGLE_MAX_VERTICES or red.m > TRIANGLE_MAX_EDGES:
        raise ExtractionError(f"triangle reduction too large: {red.n} vertices, {red.m} edges")
    return TriangleReduction(red, tuple(expansion))


def triangle_case(wc: WitnessCycle, tri: Sequence[int]) -> KuratowskiMinor:
    """Minor from three mutually conflicting bridges via exhaustive search."""
    tr = triangle_reduction(wc, tri)
    for kind in ("K33", "K5"):
        small = brute_force_minor(tr.graph, kind)
        if small is None:
            continue
        sets = tuple(tuple(sorted(v for r in bs for v in tr.expansion[r])) for bs in small.branch_sets)
        model = MinorModel(kind, sets)
        if not verify_minor(wc.graph, model):
            raise ExtractionError("expanded triangle minor does not verify")
        return model
    raise ExtractionError("triangle reduction contains no Kuratowski minor")


def _triangle(cg: ConflictGraph) -> tuple[int, int, int] | None:
    adj = [set(a) for a in cg.adjacency()]
    for a, b in sorted(cg.edges):
        common = adj[a] & adj[b]
        if common:
            return (a, b, min(common))
    return None


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


def find_kuratowski(g: Graph) -> KuratowskiMinor:
    """A verified K5 or K3,3 minor of a non-planar graph."""
    mp = minimal_nonplanar_prefix(g)
    wc = witness_cycle(mp)
    odd = induced_odd_cycle(wc.conflict)
    if len(odd) == 3:
        minor = triangle_case(wc, odd)
    else:
        try:
            minor = k5_minor_from_reduction(reduce_bridges_to_paths(wc, odd))
        except (RedirectToTriangle, ReductionFailed):
            tri = _triangle(wc.conflict)
            if tri is None:
                raise ExtractionError("reduction failed and the conflict graph has no triangle") from None
            minor = triangle_case(wc, tri)
    minor = expand_detour(minor, wc.detour)
    if not verify_minor(g, minor):
        raise ExtractionError("minor does not verify in the input graph")
    return minor

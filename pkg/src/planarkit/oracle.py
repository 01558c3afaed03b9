"""Brute-force references and graph generators.

Nothing here imports the embedding, conflict or Kuratowski code: cycle
enumeration, bridge computation, face tracing and minor search are written
again from scratch so that agreement with the fast pipeline means something.
"""

from __future__ import annotations

import os
import random
from collections import Counter, deque
from itertools import combinations
from typing import Sequence

from .embedding import PlanarEmbedding
from .graph import Cycle, Graph, GraphError, build_graph, classify_cycle, cycle_from_vertices
from .minor import MinorModel, required_pairs

TUTTE_GUARD = 10
MINOR_GUARD = 16
FACELIKE_GUARD = 12


class GuardError(RuntimeError):
    """Input exceeds the size bound of an exponential routine."""


def _guard(g: Graph, bound: int, override: bool, what: str) -> None:
    if g.n <= bound or override or os.environ.get("PLANAR_GUARD_OVERRIDE") == "1":
        return
    raise GuardError(f"{what} is limited to n <= {bound} (got n = {g.n}); pass override to force")


def _neighbors(g: Graph) -> list[list[int]]:
    return [sorted(w for w, _ in g.adjacency[v]) for v in range(g.n)]


# ---------------------------------------------------------------------------
# Cycle enumeration
# ---------------------------------------------------------------------------


def simple_cycles(g: Graph):
    """Yield every simple cycle once as a vertex list.

    Each cycle starts at its smallest vertex and the second vertex is smaller
    than the last, which fixes one representative per cycle.
    """
    nbrs = _neighbors(g)
    for s in range(g.n):
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True
        stack = [iter(w for w in nbrs[s] if w > s)]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            if on_path[w]:
                continue
            path.append(w)
            on_path[w] = True
            if len(path) >= 3 and s in nbrs[w] and path[1] < w:
                yield list(path)
            stack.append(iter(x for x in nbrs[w] if x > s))
        # the start vertex was popped with the last frame


def _bridge_attachments(g: Graph, cyc: Sequence[int]) -> list[set[int]]:
    nbrs = _neighbors(g)
    on = set(cyc)
    k = len(cyc)
    cyc_pairs = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)}
    out: list[set[int]] = []
    for u in cyc:
        for w in nbrs[u]:
            if w in on and u < w and frozenset((u, w)) not in cyc_pairs:
                out.append({u, w})
    seen = set(on)
    for v in range(g.n):
        if v in seen:
            continue
        seen.add(v)
        att: set[int] = set()
        queue = deque([v])
        has_edge = False
        while queue:
            x = queue.popleft()
            for w in nbrs[x]:
                has_edge = True
                if w in on:
                    att.add(w)
                elif w not in seen:
                    seen.add(w)
                    queue.append(w)
        if has_edge:
            out.append(att)
    return out


def _in_conflict(a: set[int], b: set[int], pos: dict[int, int], k: int) -> bool:
    if len(a & b) >= 3:
        return True

    def between(x: int, lo: int, hi: int) -> bool:
        # strictly inside the arc going forward from lo to hi
        return 0 < (pos[x] - pos[lo]) % k < (pos[hi] - pos[lo]) % k

    for p, q in combinations(a, 2):
        for r, s in combinations(b, 2):
            if len({p, q, r, s}) < 4:
                continue
            if between(r, p, q) != between(s, p, q):
                return True
    return False


def _bipartite(k: int, edges: list[tuple[int, int]]) -> bool:
    adj: list[list[int]] = [[] for _ in range(k)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    color = [-1] * k
    for s in range(k):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def cycle_conflict_bipartite(g: Graph, cyc: Sequence[int]) -> bool:
    atts = _bridge_attachments(g, cyc)
    pos = {v: i for i, v in enumerate(cyc)}
    k = len(cyc)
    edges = [(i, j) for i, j in combinations(range(len(atts)), 2) if _in_conflict(atts[i], atts[j], pos, k)]
    return _bipartite(len(atts), edges)


def tutte_planarity(g: Graph, override: bool = False) -> bool:
    """True iff every simple cycle has a bipartite conflict graph."""
    _guard(g, TUTTE_GUARD, override, "tutte_planarity")
    return all(cycle_conflict_bipartite(g, cyc) for cyc in simple_cycles(g))


def enumerate_facelike_cycles(g: Graph, override: bool = False) -> list[Cycle]:
    """Induced non-separating cycles, ordered by length then vertex sequence."""
    _guard(g, FACELIKE_GUARD, override, "enumerate_facelike_cycles")
    out = []
    for cyc in simple_cycles(g):
        c = cycle_from_vertices(g, cyc)
        flags = classify_cycle(g, c)
        if flags.induced and flags.nonseparating:
            out.append(c)
    out.sort(key=lambda c: (len(c.vertices), c.vertices))
    return out


# ---------------------------------------------------------------------------
# Minor models
# ---------------------------------------------------------------------------


def _connected_set(nbrs: Sequence[set[int]], verts: Sequence[int]) -> bool:
    vs = set(verts)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for w in nbrs[x]:
            if w in vs and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == vs


def verify_minor(g: Graph, model: MinorModel) -> bool:
    """Check a K5 / K3,3 model against ``g``.

    Branch sets must be disjoint, non-empty and connected.  Each required pair
    is realised by an edge between the sets or by one of the recorded paths;
    path interiors avoid all branch sets and each other.
    """
    try:
        pairs = required_pairs(model.kind)
    except ValueError:
        return False
    need = 5 if model.kind == "K5" else 6
    if len(model.branch_sets) != need:
        return False
    nbrs = [set(w for w, _ in g.adjacency[v]) for v in range(g.n)]
    owner: dict[int, int] = {}
    for i, bs in enumerate(model.branch_sets):
        for v in bs:
            if not 0 <= v < g.n or v in owner:
                return False
            owner[v] = i
        if not _connected_set(nbrs, bs):
            return False
    realised: set[tuple[int, int]] = set()
    for u, v in g.edges:
        if u in owner and v in owner and owner[u] != owner[v]:
            realised.add((min(owner[u], owner[v]), max(owner[u], owner[v])))
    interior_used: set[int] = set()
    for path in model.paths:
        if len(path) < 2:
            return False
        if any(not 0 <= v < g.n for v in path):
            return False
        if any(path[i + 1] not in nbrs[path[i]] for i in range(len(path) - 1)):
            return False
        inner = path[1:-1]
        if len(set(inner)) != len(inner) or any(v in owner for v in inner):
            return False
        if interior_used.intersection(inner):
            return False
        interior_used.update(inner)
        a, b = path[0], path[-1]
        if a not in owner or b not in owner or owner[a] == owner[b]:
            return False
        realised.add((min(owner[a], owner[b]), max(owner[a], owner[b])))
    return all(p in realised for p in pairs)


def _reduce(nbrs: list[set[int]], alive: set[int]) -> list[tuple[int, int]]:
    """Delete degree <= 1 vertices and suppress degree-2 ones in place.

    Returns the merges ``(w, into)`` in the order performed; deleted vertices
    are recorded as ``(w, -1)``.
    """
    log: list[tuple[int, int]] = []
    changed = True
    while changed:
        changed = False
        for w in sorted(alive):
            d = len(nbrs[w])
            if d <= 1:
                for x in nbrs[w]:
                    nbrs[x].discard(w)
                nbrs[w].clear()
                alive.discard(w)
                log.append((w, -1))
                changed = True
            elif d == 2:
                a, b = sorted(nbrs[w])
                nbrs[a].discard(w)
                nbrs[b].discard(w)
                nbrs[a].add(b)
                nbrs[b].add(a)
                nbrs[w].clear()
                alive.discard(w)
                log.append((w, a))
                changed = True
    return log


def _quotient_has(kind: str, adj: list[set[int]]) -> tuple[int, ...] | None:
    """Label order realising the target on the class quotient, if any."""
    if kind == "K5":
        return tuple(range(5)) if all(len(a) >= 4 for a in adj) else None
    for side in combinations(range(6), 3):
        if 0 not in side:
            continue
        other = [i for i in range(6) if i not in side]
        if all(j in adj[i] for i in side for j in other):
            return side + tuple(other)
    return None


def brute_force_minor(g: Graph, kind: str, override: bool = False) -> MinorModel | None:
    """Exhaustive search for a K5 or K3,3 minor model."""
    _guard(g, MINOR_GUARD, override, "brute_force_minor")
    if kind not in ("K5", "K33"):
        raise ValueError(f"unknown minor kind {kind!r}")
    k = 5 if kind == "K5" else 6
    min_deg = 4 if kind == "K5" else 3
    nbrs = [set(w for w, _ in g.adjacency[v]) for v in range(g.n)]
    alive = set(range(g.n))
    log = _reduce(nbrs, alive)
    if len(alive) < k:
        return None
    # breadth-first order from the vertex of highest degree, component by component
    order: list[int] = []
    placed: set[int] = set()
    for s in sorted(alive, key=lambda v: (-len(nbrs[v]), v)):
        if s in placed:
            continue
        placed.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            order.append(x)
            for w in sorted(nbrs[x]):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)
    where = {v: i for i, v in enumerate(order)}
    last = [max([where[v]] + [where[w] for w in nbrs[v]]) for v in order]
    r = len(order)
    label = [-1] * r  # -1 unassigned, k deleted
    members: list[list[int]] = [[] for _ in range(k)]
    closed_at = [-1] * k  # max "last" over members
    found: list[list[int]] = []

    def class_ok(c: int) -> bool:
        verts = [order[i] for i in members[c]]
        if not _connected_set(nbrs, verts):
            return False
        touching = set()
        for i in members[c]:
            for w in nbrs[order[i]]:
                lw = label[where[w]]
                if 0 <= lw < k and lw != c:
                    touching.add(lw)
        return len(touching) >= min_deg

    def search(i: int, used: int) -> bool:
        if used + (r - i) < k:
            return False
        if i == r:
            adj = [set() for _ in range(k)]
            for v in order:
                for w in nbrs[v]:
                    a, b = label[where[v]], label[where[w]]
                    if a < k and b < k and a != b:
                        adj[a].add(b)
            if all(_connected_set(nbrs, [order[j] for j in members[c]]) for c in range(k)):
                perm = _quotient_has(kind, adj)
                if perm is not None:
                    found.append(list(perm))
                    return True
            return False
        options = [c for c in range(used) if closed_at[c] >= i]
        if used < k:
            options.append(used)
        options.append(k)
        for c in options:
            label[i] = c
            if c < k:
                saved = closed_at[c]
                members[c].append(i)
                closed_at[c] = max(saved, last[i])
            # classes whose neighbourhoods are now fully labelled must be valid
            ok = all(class_ok(d) for d in range(min(used + 1, k)) if members[d] and closed_at[d] == i)
            if ok and search(i + 1, used + 1 if c == used and c < k else used):
                return True
            if c < k:
                members[c].pop()
                closed_at[c] = saved
            label[i] = -1
        return False

    if not search(0, 0):
        return None
    cls_of = {order[i]: label[i] for i in range(r) if label[i] < k}
    for w, into in reversed(log):
        if into >= 0 and into in cls_of:
            cls_of[w] = cls_of[into]
    sets: list[list[int]] = [[] for _ in range(k)]
    for v, c in cls_of.items():
        sets[c].append(v)
    perm = found[0]
    model = MinorModel(kind, tuple(tuple(sorted(sets[c])) for c in perm))
    if not verify_minor(g, model):
        raise AssertionError("brute-force minor failed its own verification")
    return model


# ---------------------------------------------------------------------------
# Embedding verification
# ---------------------------------------------------------------------------


def _trace(g: Graph, rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    if len(rotation) != g.n:
        raise GraphError("rotation length differs from vertex count")
    nxt: dict[tuple[int, int], int] = {}
    for v in range(g.n):
        incident = sorted(e for _, e in g.adjacency[v])
        if sorted(rotation[v]) != incident:
            raise GraphError(f"rotation at {v} is not a permutation of its incident edges")
        ring = [g.other(e, v) for e in rotation[v]]
        for i, u in enumerate(ring):
            # arriving at v from u, leave towards the next neighbour in the ring
            nxt[(u, v)] = ring[(i + 1) % len(ring)]
    seen: set[tuple[int, int]] = set()
    faces = []
    for dart in sorted(nxt):
        if dart in seen:
            continue
        walk = []
        u, v = dart
        while (u, v) not in seen:
            seen.add((u, v))
            walk.append(u)
            u, v = v, nxt[(u, v)]
        faces.append(tuple(walk))
    faces.extend((v,) for v in range(g.n) if not g.adjacency[v])
    return faces


def _least_rotation(walk: Sequence[int]) -> tuple[int, ...]:
    return min(tuple(walk[i:]) + tuple(walk[:i]) for i in range(len(walk))) if walk else ()


def verify_embedding(g: Graph, pe: PlanarEmbedding) -> bool:
    """Re-trace the rotation and check the faces and Euler's formula."""
    traced = _trace(g, pe.rotation)
    if Counter(map(_least_rotation, traced)) != Counter(map(_least_rotation, pe.faces)):
        return False
    nbrs = _neighbors(g)
    comp = [-1] * g.n
    count = 0
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = count
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for w in nbrs[x]:
                if comp[w] < 0:
                    comp[w] = count
                    queue.append(w)
        count += 1
    total = [0] * count
    for v in range(g.n):
        total[comp[v]] += 1
    for u, _ in g.edges:
        total[comp[u]] -= 1
    for f in traced:
        total[comp[f[0]]] += 1
    return all(t == 2 for t in total)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------


def gen_triangulation(n: int, seed: int = 0) -> tuple[Graph, PlanarEmbedding]:
    """Random stacked triangulation with its embedding."""
    if n < 4:
        raise GraphError("a triangulation needs at least 4 vertices")
    rng = random.Random(seed)
    ring: list[list[int]] = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    faces = [(0, 2, 1), (0, 3, 2), (0, 1, 3), (1, 2, 3)]
    for w in range(4, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        ring[b].insert(ring[b].index(a) + 1, w)
        ring[c].insert(ring[c].index(b) + 1, w)
        ring[a].insert(ring[a].index(c) + 1, w)
        ring.append([a, c, b])
        pairs.extend([(a, w), (b, w), (c, w)])
        faces[i] = (a, b, w)
        faces.extend([(b, c, w), (c, a, w)])
    g = build_graph(n, pairs)
    rotation = tuple(tuple(g.edge_id(v, u) for u in ring[v]) for v in range(n))
    traced = _trace(g, rotation)
    return g, PlanarEmbedding(rotation, tuple(traced), 0)


def gen_gnm(n: int, m: int, seed: int = 0) -> Graph:
    """Uniformly random simple graph with ``n`` vertices and ``m`` edges."""
    total = n * (n - 1) // 2
    if m < 0 or m > total:
        raise GraphError(f"cannot place {m} edges on {n} vertices")
    rng = random.Random(seed)
    all_pairs = list(combinations(range(n), 2))
    return build_graph(n, sorted(rng.sample(all_pairs, m)))


def gen_glued(seed: int = 0, pieces: int = 5) -> Graph:
    """Planar graph assembled from small pieces glued at vertices or edges.

    Pieces are K4, wheels and cycles.  The result is planar and usually has
    cut vertices and separation pairs.
    """
    rng = random.Random(seed)
    pairs: list[tuple[int, int]] = []
    edge_set: set[tuple[int, int]] = set()
    n = 0

    def piece() -> tuple[int, list[tuple[int, int]]]:
        kind = rng.choice(["K4", "wheel", "cycle"])
        if kind == "K4":
            return 4, list(combinations(range(4), 2))
        if kind == "wheel":
            r = rng.randint(3, 6)
            es = [(0, i) for i in range(1, r + 1)] + [(i, i % r + 1) for i in range(1, r + 1)]
            return r + 1, es
        r = rng.randint(3, 6)
        return r, [(i, (i + 1) % r) for i in range(r)]

    for p in range(pieces):
        size, es = piece()
        mapping = {}
        mode = rng.choice(["vertex", "edge", "edge"]) if p else "new"
        if mode == "edge" and pairs:
            x, y = rng.choice(pairs)
            a, b = rng.choice(es)
            if rng.random() < 0.5:
                x, y = y, x
            mapping = {a: x, b: y}
        elif mode == "vertex" and n:
            mapping = {rng.randrange(size): rng.randrange(n)}
        for v in range(size):
            if v not in mapping:
                mapping[v] = n
                n += 1
        for a, b in es:
            u, v = sorted((mapping[a], mapping[b]))
            if (u, v) not in edge_set:
                edge_set.add((u, v))
                pairs.append((u, v))
    return build_graph(n, pairs)


def is_three_connected_bruteforce(g: Graph) -> bool:
    """Connected after deleting any two vertices, with at least 4 vertices."""
    if g.n < 4:
        return False
    nbrs = _neighbors(g)
    for drop in combinations(range(g.n), 2):
        gone = set(drop)
        rest = [v for v in range(g.n) if v not in gone]
        seen = {rest[0]}
        queue = deque([rest[0]])
        while queue:
            x = queue.popleft()
            for w in nbrs[x]:
                if w not in gone and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(rest):
            return False
    return True

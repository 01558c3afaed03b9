"""Block-cut trees, split (S/P/R) components, and composition of embeddings.

The triconnected decomposition works on its own small multigraph
representation: an edge is ``(u, v, tag)`` where ``tag`` is ``("real", eid)`` or
``("virtual", k)``.  Each virtual id occurs in exactly two components.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .embedding import PlanarEmbedding, embedding_from_rotation, euler_ok, trace_faces
from .graph import Graph, GraphError, build_graph, components

Tag = tuple[str, int]
SplitEdge = tuple[int, int, Tag]


class EmbeddingError(ValueError):
    """A component or block embedding handed to a composer is not valid."""


# ---------------------------------------------------------------------------
# Blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockCutTree:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]
    links: tuple[tuple[int, int], ...]  # (block index, cut vertex)

    def block_vertices(self, g: Graph, i: int) -> list[int]:
        return sorted({v for e in self.blocks[i] for v in g.edges[e]})

    def to_json(self, g: Graph) -> dict:
        return {
            "blocks": [{"edges": list(b), "vertices": self.block_vertices(g, i)} for i, b in enumerate(self.blocks)],
            "cut_vertices": list(self.cut_vertices),
            "links": [list(link) for link in self.links],
        }


def blocks(g: Graph) -> BlockCutTree:
    """Biconnected components (as edge-id lists) and cut vertices."""
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[list[int]] = []
    cut: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0 or not g.adjacency[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[int] = []
        stack = [(root, -1, 0)]
        root_children = 0
        while stack:
            v, pe, i = stack[-1]
            adj = g.adjacency[v]
            if i < len(adj):
                stack[-1] = (v, pe, i + 1)
                w, eid = adj[i]
                if eid == pe:
                    continue
                if disc[w] < 0:
                    edge_stack.append(eid)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, 0))
                    if v == root:
                        root_children += 1
                elif disc[w] < disc[v]:
                    edge_stack.append(eid)
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if not stack:
                    break
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    if u != root:
                        cut.add(u)
                    comp = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == pe:
                            break
                    found.append(sorted(comp))
        if root_children > 1:
            cut.add(root)
    found.sort(key=lambda b: b[0])
    links = []
    for i, b in enumerate(found):
        verts = {v for e in b for v in g.edges[e]}
        for c in sorted(verts & cut):
            links.append((i, c))
    return BlockCutTree(tuple(tuple(b) for b in found), tuple(sorted(cut)), tuple(links))


def block_graph(g: Graph, block: Sequence[int]) -> tuple[Graph, list[int]]:
    """Relabelled simple graph of a block plus its local-to-global vertex map."""
    verts = sorted({v for e in block for v in g.edges[e]})
    local = {v: i for i, v in enumerate(verts)}
    bg = build_graph(len(verts), [(local[g.edges[e][0]], local[g.edges[e][1]]) for e in block])
    return bg, verts


# ---------------------------------------------------------------------------
# Split components
# ---------------------------------------------------------------------------


@dataclass
class TriComponent:
    kind: str  # "S" | "P" | "R"
    edges: list[SplitEdge]

    @property
    def vertices(self) -> list[int]:
        return sorted({x for u, v, _ in self.edges for x in (u, v)})

    def virtual_ids(self) -> list[int]:
        return [t[1] for _, _, t in self.edges if t[0] == "virtual"]


@dataclass
class SeparationTree:
    components: list[TriComponent]
    pairs: dict[int, tuple[int, int]] = field(default_factory=dict)  # virtual id -> separating pair

    def virtual_links(self) -> dict[int, list[tuple[int, int]]]:
        """virtual id -> [(component, local edge index), (component, local edge index)]."""
        links: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for ci, comp in enumerate(self.components):
            for li, (_, _, tag) in enumerate(comp.edges):
                if tag[0] == "virtual":
                    links[tag[1]].append((ci, li))
        return dict(links)

    def tree_edges(self) -> list[tuple[int, int, int]]:
        return sorted((a[0], b[0], k) for k, (a, b) in self.virtual_links().items())

    def separating_pairs(self) -> list[tuple[int, int]]:
        return sorted(set(self.pairs.values()))

    def to_json(self) -> dict:
        return {
            "components": [
                {
                    "type": c.kind,
                    "vertices": c.vertices,
                    "edges": [{"u": u, "v": v, "kind": t[0], "id": t[1]} for u, v, t in c.edges],
                }
                for c in self.components
            ],
            "virtual_edges": [
                {"id": k, "pair": list(self.pairs[k]), "components": [a[0], b[0]]}
                for k, (a, b) in sorted(self.virtual_links().items())
            ],
            "separating_pairs": [list(p) for p in self.separating_pairs()],
        }


def _articulation_points(edges: Sequence[SplitEdge], skip: int) -> list[int]:
    """Cut vertices of the multigraph minus vertex ``skip``."""
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, (u, v, _) in enumerate(edges):
        if u == skip or v == skip:
            continue
        adj[u].append((v, i))
        adj[v].append((u, i))
    if not adj:
        return []
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    points: set[int] = set()
    root = min(adj)
    disc[root] = low[root] = 0
    timer = 1
    stack = [(root, -1, 0)]
    root_children = 0
    while stack:
        v, pe, i = stack[-1]
        nbrs = adj[v]
        if i < len(nbrs):
            stack[-1] = (v, pe, i + 1)
            w, eid = nbrs[i]
            if eid == pe:
                continue
            if w not in disc:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, eid, 0))
                if v == root:
                    root_children += 1
            else:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if u != root and low[v] >= disc[u]:
                    points.add(u)
    if root_children > 1:
        points.add(root)
    if len(disc) < len(adj):
        # already disconnected without skip: every remaining vertex separates
        return sorted(adj)
    return sorted(points)


def _is_biconnected(g: Graph) -> bool:
    if g.n < 3:
        return g.n == 2 and g.m == 1
    bct = blocks(g)
    return len(bct.blocks) == 1 and len(components(g, range(g.n))) == 1


def triconnected_components(g: Graph) -> SeparationTree:
    """Split a biconnected graph into S (cycle), P (bond) and R (3-connected) pieces."""
    if g.n < 3 or not _is_biconnected(g):
        raise GraphError("input must be biconnected with at least 3 vertices")
    next_virtual = [0]
    pairs: dict[int, tuple[int, int]] = {}

    def new_virtual(u: int, v: int) -> Tag:
        k = next_virtual[0]
        next_virtual[0] += 1
        pairs[k] = (min(u, v), max(u, v))
        return ("virtual", k)

    finished: list[TriComponent] = []
    work: deque[tuple[list[SplitEdge], frozenset[int]]] = deque()
    work.append(([(u, v, ("real", e)) for e, (u, v) in enumerate(g.edges)], frozenset()))
    while work:
        edges, cleared = work.popleft()
        groups: dict[tuple[int, int], list[SplitEdge]] = defaultdict(list)
        for ed in edges:
            groups[(min(ed[0], ed[1]), max(ed[0], ed[1]))].append(ed)
        if len(groups) == 1:
            finished.append(TriComponent("P", edges))
            continue
        multi = [k for k in sorted(groups) if len(groups[k]) > 1]
        if multi:
            rest = [ed for ed in edges if (min(ed[0], ed[1]), max(ed[0], ed[1])) not in set(multi)]
            for key in multi:
                tag = new_virtual(*key)
                finished.append(TriComponent("P", groups[key] + [(key[0], key[1], tag)]))
                rest.append((key[0], key[1], tag))
            work.appendleft((rest, cleared))
            continue
        degree: dict[int, int] = defaultdict(int)
        for u, v, _ in edges:
            degree[u] += 1
            degree[v] += 1
        if all(d == 2 for d in degree.values()):
            finished.append(TriComponent("S", edges))
            continue
        split = None
        newly_cleared = set(cleared)
        for u in sorted(degree):
            if u in cleared:
                continue
            arts = _articulation_points(edges, u)
            if arts:
                split = (u, arts[0])
                break
            newly_cleared.add(u)
        if split is None:
            finished.append(TriComponent("R", edges))
            continue
        a, b = split
        side1, side2 = _separate(edges, a, b)
        tag = new_virtual(a, b)
        keep = frozenset(newly_cleared)
        work.appendleft((side2 + [(a, b, tag)], keep))
        work.appendleft((side1 + [(a, b, tag)], keep))
    merged = _merge_same_type(finished, pairs)
    return SeparationTree(merged, {k: pairs[k] for c in merged for k in c.virtual_ids()})


def _separate(edges: list[SplitEdge], a: int, b: int) -> tuple[list[SplitEdge], list[SplitEdge]]:
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v, _ in edges:
        if u in (a, b) or v in (a, b):
            continue
        adj[u].append(v)
        adj[v].append(u)
    verts = sorted({x for u, v, _ in edges for x in (u, v)} - {a, b})
    start = verts[0]
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    side1 = [ed for ed in edges if ed[0] in seen or ed[1] in seen]
    side2 = [ed for ed in edges if not (ed[0] in seen or ed[1] in seen)]
    return side1, side2


def _merge_same_type(comps: list[TriComponent], pairs: dict[int, tuple[int, int]]) -> list[TriComponent]:
    comps = [TriComponent(c.kind, list(c.edges)) for c in comps]
    alive = [True] * len(comps)
    changed = True
    while changed:
        changed = False
        owner: dict[int, list[int]] = defaultdict(list)
        for ci, c in enumerate(comps):
            if alive[ci]:
                for k in c.virtual_ids():
                    owner[k].append(ci)
        for k in sorted(owner):
            i, j = owner[k]
            if comps[i].kind == comps[j].kind and comps[i].kind in ("S", "P"):
                keep = [ed for ed in comps[i].edges if ed[2] != ("virtual", k)]
                keep += [ed for ed in comps[j].edges if ed[2] != ("virtual", k)]
                comps[i] = TriComponent(comps[i].kind, keep)
                alive[j] = False
                changed = True
                break
    out = [c for ci, c in enumerate(comps) if alive[ci]]
    for c in out:
        c.edges.sort(key=lambda ed: (ed[2][0] != "real", ed[2][1]))
    out.sort(key=lambda c: min((ed[2][0] != "real", ed[2][1]) for ed in c.edges))
    return out


def merge_components(st: SeparationTree) -> list[tuple[int, int, int]]:
    """Undo the split: the real edges ``(u, v, eid)`` that remain after every
    virtual pair is cancelled."""
    out = []
    links = st.virtual_links()
    for k, ends in links.items():
        if len(ends) != 2:
            raise GraphError(f"virtual edge {k} appears {len(ends)} times")
    for c in st.components:
        for u, v, (kind, ident) in c.edges:
            if kind == "real":
                out.append((min(u, v), max(u, v), ident))
    return sorted(out, key=lambda t: t[2])


# ---------------------------------------------------------------------------
# Component embeddings and composition
# ---------------------------------------------------------------------------

ComponentRotation = Mapping[int, Sequence[int]]  # vertex -> local edge indices in cyclic order


def trivial_component_rotation(comp: TriComponent) -> dict[int, list[int]]:
    """Rotation for an S or P component."""
    if comp.kind == "P":
        a = min(comp.edges[0][0], comp.edges[0][1])
        idx = list(range(len(comp.edges)))
        b = comp.edges[0][1] if comp.edges[0][0] == a else comp.edges[0][0]
        return {a: idx, b: idx[::-1]}
    if comp.kind == "S":
        inc: dict[int, list[int]] = defaultdict(list)
        for i, (u, v, _) in enumerate(comp.edges):
            inc[u].append(i)
            inc[v].append(i)
        return {v: sorted(es) for v, es in inc.items()}
    raise GraphError("R components need a real embedding")


def _multigraph_faces(edges: Sequence[SplitEdge], rotation: ComponentRotation) -> int | None:
    """Face count of a multigraph rotation system, or None if malformed."""
    inc: dict[int, list[int]] = defaultdict(list)
    for i, (u, v, _) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)
    if set(inc) != set(rotation):
        return None
    succ: dict[int, dict[int, int]] = {}
    for v, r in rotation.items():
        if sorted(r) != sorted(inc[v]):
            return None
        succ[v] = {r[i]: r[(i + 1) % len(r)] for i in range(len(r))}
    used: set[tuple[int, int]] = set()
    faces = 0
    for i in range(len(edges)):
        for side in (0, 1):
            if (i, side) in used:
                continue
            faces += 1
            e, s = i, side
            while (e, s) not in used:
                used.add((e, s))
                u, v, _ = edges[e]
                head = v if s == 0 else u
                nxt = succ[head][e]
                nu, _, _ = edges[nxt]
                e, s = nxt, 0 if nu == head else 1
    return faces


def _check_component(comp: TriComponent, rotation: ComponentRotation) -> None:
    f = _multigraph_faces(comp.edges, rotation)
    if f is None or len(comp.vertices) - len(comp.edges) + f != 2:
        raise EmbeddingError(f"component embedding of {comp.kind} component is not planar")


def compose_triconnected(g: Graph, st: SeparationTree, embeddings: Sequence[ComponentRotation]) -> PlanarEmbedding:
    """Glue component rotations along virtual edges into an embedding of ``g``.

    Walking the component tree from component 0, each child's rotation at
    the two pair vertices is spliced in place of the parent's virtual edge.
    """
    if len(embeddings) != len(st.components):
        raise EmbeddingError("need one embedding per component")
    for comp, rot in zip(st.components, embeddings):
        _check_component(comp, rot)
    links = st.virtual_links()
    comp_links: dict[int, list[int]] = defaultdict(list)
    for k, ends in links.items():
        for ci, _ in ends:
            comp_links[ci].append(k)
    rot: dict[int, list[tuple[int, int]]] = {v: [(0, i) for i in r] for v, r in embeddings[0].items()}
    done = {0}
    queue = deque([0])
    while queue:
        ci = queue.popleft()
        for k in sorted(comp_links[ci]):
            (c1, i1), (c2, i2) = links[k]
            if c1 == ci:
                child, ci_idx, child_idx = c2, i1, i2
            else:
                child, ci_idx, child_idx = c1, i2, i1
            if child in done:
                continue
            done.add(child)
            queue.append(child)
            u, v, _ = st.components[child].edges[child_idx]
            for x in (u, v):
                crot = list(embeddings[child][x])
                p = crot.index(child_idx)
                insert = [(child, j) for j in crot[p + 1 :] + crot[:p]]
                cur = rot[x]
                q = cur.index((ci, ci_idx))
                rot[x] = cur[:q] + insert + cur[q + 1 :]
            for x, r in embeddings[child].items():
                if x not in (u, v):
                    rot[x] = [(child, j) for j in r]
    if len(done) != len(st.components):
        raise EmbeddingError("separation tree is not connected")
    rotation: list[list[int]] = [[] for _ in range(g.n)]
    for x, tokens in rot.items():
        out = []
        for ci, li in tokens:
            kind, ident = st.components[ci].edges[li][2]
            if kind != "real":
                raise EmbeddingError("unmatched virtual edge left after composition")
            out.append(ident)
        rotation[x] = out
    return embedding_from_rotation(g, rotation)


def compose_blocks(g: Graph, bct: BlockCutTree, embeddings: Sequence[Mapping[int, Sequence[int]]]) -> PlanarEmbedding:
    """Concatenate per-block rotations at cut vertices (each block stays one arc)."""
    if len(embeddings) != len(bct.blocks):
        raise EmbeddingError("need one embedding per block")
    rotation: list[list[int]] = [[] for _ in range(g.n)]
    for block, rot in zip(bct.blocks, embeddings):
        bg, verts = block_graph(g, block)
        local_e = {e: i for i, e in enumerate(block)}
        try:
            local_rot = [[local_e[e] for e in rot[v]] for v in verts]
            faces = trace_faces(bg, local_rot)
        except (KeyError, GraphError) as exc:
            raise EmbeddingError(f"block embedding does not match its block: {exc}") from None
        if not euler_ok(bg, faces):
            raise EmbeddingError("block embedding is not planar")
        for v in verts:
            rotation[v].extend(rot[v])
    return embedding_from_rotation(g, rotation)

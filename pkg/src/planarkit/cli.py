"""Command-line interface.

Exit codes: 0 success / planar / verified, 1 non-planar / not verified,
2 bad input, 3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .conflict import OddCycleWitness, conflict_graph, two_color
from .decompose import block_graph, blocks, triconnected_components
from .embed3 import NonPlanarEvidence, embed
from .embedding import PlanarEmbedding
from .graph import Graph, GraphError, canonical_graph, cycle_from_vertices, is_connected
from .io import FORMATS, format_edge_list, parse_graph
from .kuratowski import PlanarGraphError, find_kuratowski
from .minor import MinorModel
from .oracle import GuardError, gen_glued, gen_gnm, gen_triangulation, tutte_planarity, verify_embedding, verify_minor

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    fmt: str | None = None
    seed: int = 0
    output: str | None = None
    strict: bool = True
    override: bool = False
    extra: dict = field(default_factory=dict)


class InputError(Exception):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(cfg: RunConfig) -> Graph:
    return parse_graph(_read(cfg.input), cfg.fmt)


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None


def _dump(doc) -> str:
    return json.dumps(doc) + "\n"


# ---------------------------------------------------------------------------
# Commands; each returns (exit code, output text)
# ---------------------------------------------------------------------------


def cmd_test(cfg: RunConfig) -> tuple[int, str]:
    g = _load_graph(cfg)
    if cfg.extra.get("oracle"):
        planar = tutte_planarity(g, override=cfg.override)
        doc = {"planar": planar, "method": "tutte", "n": g.n, "m": g.m}
    else:
        res = embed(g, strict=cfg.strict)
        planar = isinstance(res, PlanarEmbedding)
        doc = {"planar": planar, "n": g.n, "m": g.m}
        if planar:
            doc["faces"] = len(res.faces)
        else:
            doc["evidence"] = res.to_json()
    verdict = "planar" if planar else "non-planar"
    return (EXIT_OK if planar else EXIT_NO), verdict + "\n" + _dump(doc)


def cmd_embed(cfg: RunConfig) -> tuple[int, str]:
    g = _load_graph(cfg)
    res = embed(g, strict=cfg.strict)
    if isinstance(res, NonPlanarEvidence):
        return EXIT_NO, _dump({"planar": False, "evidence": res.to_json()})
    return EXIT_OK, _dump(res.to_json())


def cmd_kuratowski(cfg: RunConfig) -> tuple[int, str]:
    g = _load_graph(cfg)
    try:
        minor = find_kuratowski(g)
    except PlanarGraphError:
        print("graph is planar; no Kuratowski minor exists", file=sys.stderr)
        return EXIT_NO, ""
    return EXIT_OK, _dump(minor.to_json())


def cmd_decompose(cfg: RunConfig) -> tuple[int, str]:
    g = _load_graph(cfg)
    bct = blocks(g)
    trees = []
    for i, block in enumerate(bct.blocks):
        bg, verts = block_graph(g, block)
        if bg.n < 3:
            continue
        doc = triconnected_components(bg).to_json()
        for comp in doc["components"]:
            comp["vertices"] = [verts[v] for v in comp["vertices"]]
            for e in comp["edges"]:
                e["u"], e["v"] = verts[e["u"]], verts[e["v"]]
                if e["kind"] == "real":
                    e["id"] = block[e["id"]]
        for ve in doc["virtual_edges"]:
            ve["pair"] = [verts[v] for v in ve["pair"]]
        doc["separating_pairs"] = [[verts[a], verts[b]] for a, b in doc["separating_pairs"]]
        trees.append({"block": i, **doc})
    return EXIT_OK, _dump({"block_cut_tree": bct.to_json(g), "separation_trees": trees})


def cmd_verify_embedding(cfg: RunConfig) -> tuple[int, str]:
    g = _load_graph(cfg)
    try:
        pe = PlanarEmbedding.from_json(_load_json(cfg.extra["artifact"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad embedding JSON: {exc}") from None
    ok = verify_embedding(g, pe)
    return (EXIT_OK if ok else EXIT_NO), _dump({"valid": ok})


def cmd_verify_minor(cfg: RunConfig) -> tuple[int, str]:
    g = _load_graph(cfg)
    try:
        model = MinorModel.from_json(_load_json(cfg.extra["artifact"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad minor JSON: {exc}") from None
    ok = verify_minor(g, model)
    return (EXIT_OK if ok else EXIT_NO), _dump({"valid": ok, "kind": model.kind})


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    doc = _load_json(cfg.extra["artifact"])
    if isinstance(doc, dict) and "rotation" in doc:
        return cmd_verify_embedding(cfg)
    if isinstance(doc, dict) and "branch_sets" in doc:
        return cmd_verify_minor(cfg)
    raise InputError("artifact is neither an embedding nor a minor")


def cmd_gen(cfg: RunConfig) -> tuple[int, str]:
    kind = cfg.extra["kind"]
    args = cfg.extra["args"]
    try:
        if kind == "triangulation":
            g, _ = gen_triangulation(int(args[0]), cfg.seed)
        elif kind == "gnm":
            g = gen_gnm(int(args[0]), int(args[1]), cfg.seed)
        elif kind == "glued":
            g = gen_glued(cfg.seed, int(args[0]) if args else 5)
        elif kind == "canonical":
            rows = int(args[1]) if len(args) > 1 else None
            cols = int(args[2]) if len(args) > 2 else None
            g = canonical_graph(args[0], rows, cols)
        else:
            raise InputError(f"unknown generator {kind!r}")
    except (IndexError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise InputError(f"bad generator arguments for {kind}: {' '.join(args)}") from None
    return EXIT_OK, format_edge_list(g)


def cmd_conflict(cfg: RunConfig) -> tuple[int, str]:
    g = _load_graph(cfg)
    try:
        verts = [int(v) for v in cfg.extra["cycle"].split(",")]
    except ValueError:
        raise InputError("--cycle expects comma-separated vertex ids") from None
    c = cycle_from_vertices(g, verts)
    cg = conflict_graph(g, c)
    doc = cg.to_json(c)
    res = two_color(cg)
    doc["bipartite"] = not isinstance(res, OddCycleWitness)
    if isinstance(res, OddCycleWitness):
        doc["odd_walk"] = list(res.walk)
    else:
        doc["colors"] = list(res.colors)
    return EXIT_OK, _dump(doc)


# ---------------------------------------------------------------------------
# Drawing
# ---------------------------------------------------------------------------


def barycentric_layout(g: Graph, pe: PlanarEmbedding, tol: float = 1e-7, max_iter: int = 100_000) -> np.ndarray:
    """Outer face on a regular polygon, every other vertex at its neighbours' mean."""
    pos = np.zeros((g.n, 2))
    if g.n == 0:
        return pos
    outer: list[int] = []
    for v in pe.faces[pe.external] if pe.faces else (0,):
        if v not in outer:
            outer.append(v)
    fixed = np.zeros(g.n, dtype=bool)
    fixed[outer] = True
    k = len(outer)
    angles = np.pi / 2 + 2 * np.pi * np.arange(k) / max(k, 1)
    pos[outer, 0] = np.cos(angles)
    pos[outer, 1] = np.sin(angles)
    free = np.nonzero(~fixed)[0]
    if len(free) == 0:
        return pos
    ea = g.edge_array
    rows = np.concatenate([ea[:, 0], ea[:, 1]])
    cols = np.concatenate([ea[:, 1], ea[:, 0]])
    deg = np.bincount(rows, minlength=g.n).astype(float)
    for _ in range(max_iter):
        sums = np.zeros_like(pos)
        np.add.at(sums, rows, pos[cols])
        new = sums[free] / deg[free, None]
        shift = np.abs(new - pos[free]).max()
        pos[free] = new
        if shift < tol:
            break
    return pos


def render_svg(g: Graph, pos: np.ndarray, size: int = 600) -> str:
    margin = 20
    scale = (size - 2 * margin) / 2

    def px(p):
        return margin + (p[0] + 1) * scale, margin + (1 - p[1]) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<g stroke="#333" stroke-width="1">',
    ]
    for u, v in g.edges:
        (x1, y1), (x2, y2) = px(pos[u]), px(pos[v])
        out.append(f'<line x1="{x1:.3f}" y1="{y1:.3f}" x2="{x2:.3f}" y2="{y2:.3f}"/>')
    out.append("</g>")
    out.append('<g fill="#c33">')
    for v in range(g.n):
        x, y = px(pos[v])
        out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3"><title>{v}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cmd_draw(cfg: RunConfig) -> tuple[int, str]:
    g = _load_graph(cfg)
    if g.n and not is_connected(g):
        raise InputError("draw needs a connected graph")
    res = embed(g, strict=cfg.strict)
    if isinstance(res, NonPlanarEvidence):
        print("graph is not planar; nothing to draw", file=sys.stderr)
        return EXIT_NO, ""
    return EXIT_OK, render_svg(g, barycentric_layout(g, res))


COMMANDS = {
    "test": cmd_test,
    "embed": cmd_embed,
    "kuratowski": cmd_kuratowski,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "verify-embedding": cmd_verify_embedding,
    "verify-minor": cmd_verify_minor,
    "gen": cmd_gen,
    "draw": cmd_draw,
    "conflict": cmd_conflict,
}


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; errors are mapped to exit codes, messages go to stderr."""
    try:
        return COMMANDS[cfg.command](cfg)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD, ""
    except (InputError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT, ""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planarkit", description="Planarity testing, embedding and Kuratowski minors.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument("graph", nargs="?", default="-", help="graph file (default: stdin)")
            p.add_argument("--format", choices=FORMATS, dest="fmt", help="input format (default: detect)")
        p.add_argument("-o", "--output", help="write output here instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--lenient", action="store_true", help="skip the induced/non-separating face checks")
        p.add_argument("--override-guards", action="store_true", help="lift size limits of exhaustive routines")
        return p

    p = common(sub.add_parser("test", help="planarity verdict"))
    p.add_argument("--oracle", action="store_true", help="use the exhaustive cycle criterion instead")
    common(sub.add_parser("embed", help="combinatorial embedding as JSON"))
    common(sub.add_parser("kuratowski", help="K5 / K3,3 minor as JSON"))
    common(sub.add_parser("decompose", help="block-cut tree and separation trees"))
    common(sub.add_parser("draw", help="straight-line SVG drawing"))
    p = common(sub.add_parser("conflict", help="conflict graph of one cycle"))
    p.add_argument("--cycle", required=True, help="comma-separated cycle vertices")
    for name in ("verify", "verify-embedding", "verify-minor"):
        p = sub.add_parser(name, help="check an embedding or minor against a graph")
        p.add_argument("graph")
        p.add_argument("artifact")
        p.add_argument("--format", choices=FORMATS, dest="fmt")
        p.add_argument("-o", "--output")
        p.add_argument("--override-guards", action="store_true")
    p = common(sub.add_parser("gen", help="generate a graph in edge-list format"), graph=False)
    p.add_argument("kind", choices=["triangulation", "gnm", "glued", "canonical"])
    p.add_argument("args", nargs="*", help="triangulation N | gnm N M | glued [PIECES] | canonical NAME [ROWS COLS]")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    extra = {}
    for key in ("oracle", "cycle", "artifact", "kind", "args"):
        if hasattr(ns, key):
            extra[key] = getattr(ns, key)
    cfg = RunConfig(
        command=ns.command,
        input=getattr(ns, "graph", None),
        fmt=getattr(ns, "fmt", None),
        seed=getattr(ns, "seed", 0),
        output=ns.output,
        strict=not getattr(ns, "lenient", False),
        override=ns.override_guards or os.environ.get("PLANAR_GUARD_OVERRIDE") == "1",
        extra=extra,
    )
    code, text = run(cfg)
    if text:
        if cfg.output:
            with open(cfg.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

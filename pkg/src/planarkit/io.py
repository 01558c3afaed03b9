"""Reading and writing graphs: edge list, JSON and a small subset of DOT."""

from __future__ import annotations

import json
import re

from .graph import Graph, GraphError, build_graph

FORMATS = ("edgelist", "dot", "json")


class FormatError(GraphError):
    pass


def parse_edge_list(text: str) -> Graph:
    """``n m`` header, then ``m`` lines ``u v``; ``#`` starts a comment."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise FormatError("missing 'n m' header")
    (n, m), pairs = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise FormatError("header counts must be non-negative")
    if len(pairs) != m:
        raise FormatError(f"header announces {m} edges but {len(pairs)} were given")
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_json_graph(text: str) -> Graph:
    try:
        doc = json.loads(text)
        n = int(doc["n"])
        pairs = [(int(u), int(v)) for u, v in doc["edges"]]
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from None
    return build_graph(n, pairs)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


_DOT_HEADER = re.compile(r"^\s*(strict\s+)?(graph|digraph)\b[^{]*\{(.*)\}\s*$", re.S | re.I)
_ID = r'(?:"(?:[^"\\]|\\.)*"|[A-Za-z_0-9.\-]+)'


def parse_dot(text: str) -> Graph:
    """Undirected simple graphs only: node and ``a -- b -- c`` edge statements.

    Attribute lists are ignored.  Node names that are all non-negative integers
    keep their value; otherwise vertices are numbered in order of appearance.
    """
    text = re.sub(r"/\*.*?\*/", "", text, flags=re.S)
    text = "\n".join(re.sub(r"(^\s*#.*$)|(//.*$)", "", line) for line in text.splitlines())
    match = _DOT_HEADER.match(text)
    if not match:
        raise FormatError("not a DOT graph")
    if match.group(2).lower() == "digraph" or "->" in match.group(3):
        raise FormatError("directed DOT graphs are not supported")
    body = re.sub(r"\[[^\]]*\]", "", match.group(3))
    if "{" in body or re.search(r"\bsubgraph\b", body, re.I):
        raise FormatError("DOT subgraphs are not supported")
    names: list[str] = []
    seen: dict[str, int] = {}
    chains: list[list[str]] = []
    for stmt in re.split(r"[;\n]", body):
        stmt = stmt.strip()
        if not stmt or re.match(r"^(graph|node|edge)\b", stmt, re.I) or re.fullmatch(rf"{_ID}\s*=\s*{_ID}", stmt):
            continue
        parts = [p.strip() for p in stmt.split("--")]
        if any(not re.fullmatch(_ID, p) for p in parts):
            raise FormatError(f"cannot parse DOT statement {stmt!r}")
        parts = [p[1:-1] if p.startswith('"') else p for p in parts]
        for p in parts:
            if p not in seen:
                seen[p] = len(names)
                names.append(p)
        chains.append(parts)
    if names and all(p.isdigit() for p in names):
        index = {p: int(p) for p in names}
        n = max(index.values()) + 1
    else:
        index = seen
        n = len(names)
    pairs = []
    for chain in chains:
        pairs.extend((index[a], index[b]) for a, b in zip(chain, chain[1:]))
    return build_graph(n, pairs)


def detect_format(text: str) -> str:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    if re.match(r"(strict\s+)?(di)?graph\b", stripped, re.I):
        return "dot"
    return "edgelist"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or detect_format(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    if fmt == "json":
        return parse_json_graph(text)
    if fmt == "dot":
        return parse_dot(text)
    raise FormatError(f"unknown format {fmt!r}")

"""graph6, JSON and DOT serialization."""

from __future__ import annotations

import json
from pathlib import Path
from typing import TYPE_CHECKING

from .graph import Graph, GraphError, from_edge_list

if TYPE_CHECKING:
    from .coloring import Coloring


class FormatError(ValueError):
    pass


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """graph6 string (no ``>>graph6<<`` header, no trailing newline)."""
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.neighbors(j)
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(s: str | bytes) -> Graph:
    if isinstance(s, str):
        s = s.encode("ascii")
    s = s.strip()
    if s.startswith(b">>graph6<<"):
        s = s[10:]
    data = [c - 63 for c in s]
    if any(c < 0 or c > 63 for c in data):
        raise FormatError("invalid graph6 character")
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) > 1 and data[1] < 63:
        if len(data) < 4:
            raise FormatError("truncated graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        if len(data) < 8:
            raise FormatError("truncated graph6 header")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | c
        body = data[8:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = ((c >> (5 - k)) & 1 for c in body for k in range(6))
    edges = []
    for j in range(1, n):
        for i in range(j):
            if next(bits):
                edges.append((i, j))
    return from_edge_list(n, edges)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    try:
        return from_edge_list(int(obj["n"]), obj["edges"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad JSON graph: {exc}") from exc


def parse_graph(text: str | bytes) -> Graph:
    """Auto-detect JSON (first non-blank byte ``{``) versus graph6."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    text = text.strip()
    if text.startswith("{"):
        return graph_from_json(json.loads(text))
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise FormatError("expected exactly one graph6 line")
    return from_graph6(lines[0])


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text())


def coloring_to_json(c: Coloring) -> dict:
    return {"k": c.k, "classes": [list(cls) for cls in c.classes()]}


def coloring_from_json(obj: dict, n: int | None = None) -> Coloring:
    from .coloring import Coloring

    try:
        k = int(obj["k"])
        classes = obj["classes"]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad JSON coloring: {exc}") from exc
    if n is None:
        n = sum(len(c) for c in classes)
    return Coloring.from_classes(n, classes, k=k)


def read_coloring(path: str | Path, n: int | None = None) -> Coloring:
    return coloring_from_json(json.loads(Path(path).read_text()), n)


PALETTE = ("red", "green", "blue", "gold", "purple", "orange", "cyan", "gray")


def to_dot(g: Graph, coloring: Coloring | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if coloring is None:
            lines.append(f"  {v};")
        else:
            c = coloring.assignment[v]
            lines.append(f'  {v} [style=filled, fillcolor="{PALETTE[c % len(PALETTE)]}"];')
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "FormatError",
    "GraphError",
    "to_graph6",
    "from_graph6",
    "graph_to_json",
    "graph_from_json",
    "parse_graph",
    "read_graph",
    "coloring_to_json",
    "coloring_from_json",
    "read_coloring",
    "to_dot",
]

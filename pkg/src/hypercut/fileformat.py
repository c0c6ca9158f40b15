"""Plain-text hypergraph file format.

::

    # comment
    vertices: u v
    edge e1: v
    edge e2: u v
    edge e3:

``vertices:`` appears exactly once, before any edge line.  An edge line with
no vertices declares an empty edge.  Ids match ``[A-Za-z0-9_]+``.
"""

from __future__ import annotations

import re

from .core import Hypergraph, build, sorted_ids
from .errors import HypergraphError, ParseError

_ID = re.compile(r"[A-Za-z0-9_]+\Z")
_VERTICES = re.compile(r"\s*vertices\s*:")
_EDGE = re.compile(r"\s*edge\s+(\S+?)\s*:")


def _tokens(line: str, offset: int, lineno: int) -> list[tuple[str, int]]:
    out = []
    for m in re.finditer(r"\S+", line[offset:]):
        col = offset + m.start() + 1
        if not _ID.match(m.group()):
            raise ParseError(f"invalid id {m.group()!r}", lineno, col)
        out.append((m.group(), col))
    return out


def parse(text: str) -> Hypergraph:
    vertices: list[tuple[str, int]] | None = None
    vertex_line = 0
    edges: list[tuple[str, list[str]]] = []
    seen_edges: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _VERTICES.match(line)
        if m:
            if vertices is not None:
                raise ParseError(f"second vertices declaration (first on line {vertex_line})", lineno, m.start() + 1)
            vertices = _tokens(line, m.end(), lineno)
            vertex_line = lineno
            if not vertices:
                raise ParseError("vertices declaration lists no vertex", lineno, m.end() + 1)
            known: set[str] = set()
            for v, col in vertices:
                if v in known:
                    raise ParseError(f"duplicate vertex id {v!r}", lineno, col)
                known.add(v)
            continue
        m = _EDGE.match(line)
        if not m:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'vertices:' or 'edge <id>:'", lineno, col)
        name, name_col = m.group(1), m.start(1) + 1
        if not _ID.match(name):
            raise ParseError(f"invalid id {name!r}", lineno, name_col)
        if vertices is None:
            raise ParseError("edge declared before the vertices line", lineno, m.start() + 1)
        if name in seen_edges:
            raise ParseError(f"duplicate edge id {name!r}", lineno, name_col)
        seen_edges.add(name)
        members = _tokens(line, m.end(), lineno)
        declared = {v for v, _ in vertices}
        listed: set[str] = set()
        for v, col in members:
            if v not in declared:
                raise ParseError(f"edge {name!r} references undeclared vertex {v!r}", lineno, col)
            if v in listed:
                raise ParseError(f"vertex {v!r} repeated in edge {name!r}", lineno, col)
            listed.add(v)
        edges.append((name, [v for v, _ in members]))
    if vertices is None:
        raise ParseError("missing 'vertices:' declaration", max(1, len(text.splitlines())), 1)
    try:
        return build([v for v, _ in vertices], edges)
    except HypergraphError as exc:  # unreachable after the checks above, kept for safety
        raise ParseError(str(exc), vertex_line, 1) from exc


def read(path: str) -> Hypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def emit(H: Hypergraph) -> str:
    """Serialize H with vertices, edges and edge members sorted by id."""
    lines = ["vertices: " + " ".join(sorted_ids(H.vertices))]
    for e in sorted_ids(H.edge_ids):
        members = " ".join(sorted_ids(H.edges[e]))
        lines.append(f"edge {e}: {members}".rstrip())
    return "\n".join(lines) + "\n"

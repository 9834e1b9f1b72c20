"""Reading and writing graph files.

Edge-list: first line ``n m``, then ``m`` lines ``u v`` (0-based), ``#``
starts a comment.  Vertex tokens that are not integers are treated as
labels and mapped to dense ids in order of first appearance.

DIMACS: ``c`` comment lines, one ``p edge n m`` line, ``e u v`` lines with
1-based ids.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, TextIO

from .graph import Graph, GraphError, from_edges

FORMATS = ("auto", "edge-list", "dimacs")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class GraphFile:
    graph: Graph
    format: str
    labels: list[str] | None = None
    warnings: list[str] = field(default_factory=list)

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def vertex(self, token: str) -> int:
        """Dense id for a vertex token as it would appear in the input file."""
        if self.labels:
            try:
                return self.labels.index(token)
            except ValueError:
                raise ParseError(f"unknown label {token!r}") from None
        try:
            v = int(token)
        except ValueError:
            raise ParseError(f"unknown label {token!r}") from None
        if self.format == "dimacs":
            v -= 1
        if not 0 <= v < self.graph.n:
            raise ParseError(f"vertex {token} out of range")
        return v


def _lines(text: str, comment: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split(comment, 1)[0].strip() if comment == "#" else raw.strip()
        if line:
            yield no, line


def detect_format(text: str) -> str:
    for _, line in _lines(text, "#"):
        return "dimacs" if line.split()[0] in ("p", "c", "e") else "edge-list"
    return "edge-list"


def _int(tok: str, no: int, what: str) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", no) from None
    if v < 0:
        raise ParseError(f"{what} must be non-negative, got {v}", no)
    return v


def _finish(n: int, edges: list[tuple[int, int, int]], fmt: str, labels=None, warnings=None) -> GraphFile:
    warnings = warnings if warnings is not None else []
    seen = set()
    for u, v, no in edges:
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.append(f"line {no}: duplicate edge {u} {v} ignored")
        seen.add(key)
    try:
        G = from_edges(n, [(u, v) for u, v, _ in edges])
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    return GraphFile(G, fmt, labels, warnings)


def parse_edge_list(text: str) -> GraphFile:
    lines = list(_lines(text, "#"))
    if not lines:
        raise ParseError("empty input: expected header 'n m'")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(f"header must be 'n m', got {header!r}", no)
    n, m = _int(parts[0], no, "n"), _int(parts[1], no, "m")
    raw = []
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", no)
        raw.append((parts[0], parts[1], no))
    warnings = []
    if len(raw) != m:
        warnings.append(f"header announces {m} edges, found {len(raw)}")
    numeric = all(_is_int(a) and _is_int(b) for a, b, _ in raw)
    labels = None
    edges = []
    if numeric:
        for a, b, no in raw:
            u, v = int(a), int(b)
            for w in (u, v):
                if not 0 <= w < n:
                    raise ParseError(f"vertex {w} out of range 0..{n - 1}", no)
            edges.append((u, v, no))
    else:
        labels = []
        index: dict[str, int] = {}
        for a, b, no in raw:
            ids = []
            for tok in (a, b):
                if tok not in index:
                    if len(labels) == n:
                        raise ParseError(f"label {tok!r} exceeds the {n} vertices in the header", no)
                    index[tok] = len(labels)
                    labels.append(tok)
                ids.append(index[tok])
            edges.append((ids[0], ids[1], no))
        # isolated vertices have no label in the file; name them by id
        labels += [f"_{i}" for i in range(len(labels), n)]
    return _finish(n, edges, "edge-list", labels, warnings)


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def parse_dimacs(text: str) -> GraphFile:
    n = m = None
    edges = []
    for no, line in _lines(text, "c"):
        parts = line.split()
        if parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ParseError("second problem line", no)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"expected 'p edge n m', got {line!r}", no)
            n, m = _int(parts[2], no, "n"), _int(parts[3], no, "m")
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before the 'p edge' line", no)
            if len(parts) != 3:
                raise ParseError(f"expected 'e u v', got {line!r}", no)
            u, v = _int(parts[1], no, "u"), _int(parts[2], no, "v")
            for w in (u, v):
                if not 1 <= w <= n:
                    raise ParseError(f"vertex {w} out of range 1..{n}", no)
            edges.append((u - 1, v - 1, no))
        else:
            raise ParseError(f"unrecognised line {line!r}", no)
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    warnings = [] if len(edges) == m else [f"problem line announces {m} edges, found {len(edges)}"]
    return _finish(n, edges, "dimacs", None, warnings)


def parse_graph(source: str | Path | TextIO, format: str = "auto") -> GraphFile:
    """Parse a graph from a path, an open stream or ``-`` for stdin."""
    if isinstance(source, (str, Path)):
        if str(source) == "-":
            import sys

            text = sys.stdin.read()
        else:
            text = Path(source).read_text()
    else:
        text = source.read()
    return parse_text(text, format)


def parse_text(text: str, format: str = "auto") -> GraphFile:
    if format not in FORMATS:
        raise ParseError(f"unknown format {format!r}")
    if format == "auto":
        format = detect_format(text)
    return parse_dimacs(text) if format == "dimacs" else parse_edge_list(text)


def serialize(G: Graph, format: str = "edge-list", labels: list[str] | None = None) -> str:
    out = io.StringIO()
    edges = G.edges()
    if format == "dimacs":
        out.write(f"p edge {G.n} {G.m}\n")
        for u, v in edges:
            out.write(f"e {u + 1} {v + 1}\n")
    elif format == "edge-list":
        out.write(f"{G.n} {G.m}\n")
        name = (lambda v: labels[v]) if labels else str
        for u, v in edges:
            out.write(f"{name(u)} {name(v)}\n")
    else:
        raise ValueError(f"unknown format {format!r}")
    return out.getvalue()


def parse_ordering(tokens: Iterable[str], gf: GraphFile) -> list[int]:
    """Resolve ordering tokens (ids or labels, in the file's convention) to dense ids."""
    return [gf.vertex(t) for t in tokens]

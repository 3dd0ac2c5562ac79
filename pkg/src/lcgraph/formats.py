"""Graph documents: JSON and edge-list text formats, plus DOT export.

The JSON form is ``{"version": 1, "v": [labels], "e": [[u, v], ...]}``. The
edge-list form is ``<head>; u-v,u-v,...`` where the head is either a bare
count ``n`` (vertices 1..n) or an explicit comma-separated label list; a
single explicit label keeps a trailing comma (``"7,;"``) so it cannot be
mistaken for a count. Without a ``;`` the text is read as edges alone, with
the vertex set inferred from the endpoints. All forms reject self-loops,
duplicate edges, and labels outside [0, 63].
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .foliage import FoliageDecomposition
from .graph import MAX_LABEL, Graph

CURRENT_VERSION = 1

_EDGE_RE = re.compile(r"^\s*(\d+)\s*-\s*(\d+)\s*$")
_INT_RE = re.compile(r"^\s*(\d+)\s*$")


class ParseError(ValueError):
    """Malformed graph input; carries the character position when known."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class GraphDocument:
    """Validated, serializable snapshot of a graph."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    version: int = CURRENT_VERSION

    @classmethod
    def from_graph(cls, g: Graph) -> GraphDocument:
        return cls(vertices=g.vertices, edges=g.edges())

    def to_graph(self) -> Graph:
        return Graph.from_edges(self.vertices, self.edges)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "v": list(self.vertices),
            "e": [list(e) for e in self.edges],
        }

    @classmethod
    def from_dict(cls, data: object) -> GraphDocument:
        if not isinstance(data, dict):
            raise ParseError("graph document must be a JSON object")
        unknown = set(data) - {"version", "v", "e"}
        if unknown:
            raise ParseError(f"unknown document keys: {sorted(unknown)}")
        version = data.get("version", CURRENT_VERSION)
        if not isinstance(version, int):
            raise ParseError("version must be an integer")
        verts = _require_label_list(data.get("v"), "v")
        raw_edges = data.get("e", [])
        if not isinstance(raw_edges, list):
            raise ParseError('"e" must be a list of [u, v] pairs')
        vset = set(verts)
        if len(vset) != len(verts):
            raise ParseError("duplicate vertex label")
        edges = []
        seen = set()
        for item in raw_edges:
            if not (isinstance(item, list) and len(item) == 2):
                raise ParseError(f"edge {item!r} is not a [u, v] pair")
            u, v = item
            _check_edge(u, v, vset, seen)
            edges.append((u, v) if u < v else (v, u))
        return cls(vertices=tuple(verts), edges=tuple(edges), version=version)


def _require_label_list(value: object, key: str) -> list[int]:
    if not isinstance(value, list):
        raise ParseError(f'"{key}" must be a list of integer labels')
    for v in value:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"vertex label {v!r} is not an integer")
        if not 0 <= v <= MAX_LABEL:
            raise ParseError(f"vertex label {v} outside [0, {MAX_LABEL}]")
    return list(value)


def _check_edge(u: object, v: object, vset: set | None, seen: set, position: int | None = None) -> None:
    for x in (u, v):
        if not isinstance(x, int) or isinstance(x, bool):
            raise ParseError(f"edge endpoint {x!r} is not an integer", position)
    if u == v:
        raise ParseError(f"self-loop at vertex {u}", position)
    for x in (u, v):
        if not 0 <= x <= MAX_LABEL:
            raise ParseError(f"vertex label {x} outside [0, {MAX_LABEL}]", position)
        if vset is not None and x not in vset:
            raise ParseError(f"edge ({u}, {v}) touches unlisted vertex {x}", position)
    key = (u, v) if u < v else (v, u)
    if key in seen:
        raise ParseError(f"duplicate edge ({u}, {v})", position)
    seen.add(key)


def _chunks_with_offsets(text: str, base: int) -> list[tuple[str, int]]:
    out = []
    pos = 0
    for chunk in text.split(","):
        out.append((chunk, base + pos))
        pos += len(chunk) + 1
    return out


def _parse_edgelist(text: str) -> GraphDocument:
    semi = text.find(";")
    if semi < 0:
        # headless form: edges only, vertices inferred from the endpoints
        if not text.strip():
            raise ParseError("empty edge-list input", 0)
        edges: list[tuple[int, int]] = []
        seen: set = set()
        verts: set[int] = set()
        for chunk, offset in _chunks_with_offsets(text, 0):
            m = _EDGE_RE.match(chunk)
            if not m:
                raise ParseError(f"bad edge {chunk.strip()!r}, expected 'u-v'", offset)
            u, v = int(m.group(1)), int(m.group(2))
            _check_edge(u, v, None, seen, offset)
            verts.update((u, v))
            edges.append((u, v) if u < v else (v, u))
        return GraphDocument(vertices=tuple(sorted(verts)), edges=tuple(sorted(edges)))
    head, tail = text[:semi], text[semi + 1 :]

    chunks = _chunks_with_offsets(head, 0)
    # bare-count head: exactly one integer token and no trailing comma
    if len(chunks) == 1 and _INT_RE.match(chunks[0][0]) and head.strip():
        n = int(chunks[0][0])
        if not 1 <= n <= MAX_LABEL:
            raise ParseError(f"vertex count {n} out of range 1..{MAX_LABEL}", chunks[0][1])
        verts = list(range(1, n + 1))
    else:
        verts = []
        for chunk, offset in chunks:
            if not chunk.strip():
                continue  # tolerates the trailing-comma list marker and empty heads
            m = _INT_RE.match(chunk)
            if not m:
                raise ParseError(f"bad vertex label {chunk.strip()!r}", offset)
            v = int(m.group(1))
            if not 0 <= v <= MAX_LABEL:
                raise ParseError(f"vertex label {v} outside [0, {MAX_LABEL}]", offset)
            if v in verts:
                raise ParseError(f"duplicate vertex label {v}", offset)
            verts.append(v)

    vset = set(verts)
    edges: list[tuple[int, int]] = []
    seen: set = set()
    if tail.strip():
        for chunk, offset in _chunks_with_offsets(tail, semi + 1):
            if not chunk.strip():
                raise ParseError("empty edge entry", offset)
            m = _EDGE_RE.match(chunk)
            if not m:
                raise ParseError(f"bad edge {chunk.strip()!r}, expected 'u-v'", offset)
            u, v = int(m.group(1)), int(m.group(2))
            _check_edge(u, v, vset, seen, offset)
            edges.append((u, v) if u < v else (v, u))
    return GraphDocument(vertices=tuple(sorted(verts)), edges=tuple(sorted(edges)))


def parse_graph(text: str, format: str = "json") -> Graph:
    """Parse a graph from ``json`` or ``edgelist`` text."""
    if format == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"invalid JSON: {e.msg}", e.pos) from None
        return GraphDocument.from_dict(data).to_graph()
    if format == "edgelist":
        return _parse_edgelist(text).to_graph()
    raise ValueError(f"unknown graph format {format!r}")


def sniff_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "edgelist"


def serialize_graph(g: Graph, format: str = "json") -> str:
    """Render a graph in a form ``parse_graph`` reads back identically."""
    if format == "json":
        return json.dumps(GraphDocument.from_graph(g).to_dict())
    if format == "edgelist":
        verts = g.vertices
        if verts and verts == tuple(range(1, len(verts) + 1)):
            head = str(len(verts))
        elif len(verts) == 1:
            head = f"{verts[0]},"  # trailing comma marks an explicit single label
        else:
            head = ",".join(str(v) for v in verts)
        edges = ",".join(f"{u}-{v}" for u, v in g.edges())
        return f"{head}; {edges}" if edges else f"{head};"
    raise ValueError(f"unknown graph format {format!r}")


_CLASS_COLORS = {"leaf": "palegreen", "axil": "orange", "twin": "lightblue"}


def export_dot(g: Graph, foliage: FoliageDecomposition | None = None) -> str:
    """DOT rendering with stable ordering; foliage classes styled and annotated."""
    lines = ["graph G {", "  node [shape=circle];"]
    for v in g.vertices:
        attrs = ""
        if foliage is not None:
            classes = foliage.classes_of(v)
            if classes:
                color = _CLASS_COLORS[classes[0]]
                label = ",".join(classes)
                attrs = f' [style=filled, fillcolor={color}, xlabel="{label}"]'
        lines.append(f"  {v}{attrs};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

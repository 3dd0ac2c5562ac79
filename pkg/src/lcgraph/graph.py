"""Labeled simple graphs with the transformations used on graph states.

Vertices are integer labels in [0, 63]; adjacency is one bitmask row per
present vertex, symmetric with a zero diagonal. Labels are stable: deleting a
vertex leaves a gap, it never renumbers the survivors. All operations are
pure, returning fresh values, so graphs can be shared freely across threads.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

MAX_LABEL = 63


class PauliBasis(Enum):
    """Basis of a single-qubit Pauli measurement, as it acts on the graph."""

    Z = "Z"
    Y = "Y"
    X = "X"


def _coerce_basis(basis: PauliBasis | str) -> PauliBasis:
    if isinstance(basis, PauliBasis):
        return basis
    try:
        return PauliBasis(str(basis).upper())
    except ValueError:
        raise ValueError(f"unknown measurement basis {basis!r}") from None


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_label(v: int) -> None:
    if not 0 <= v <= MAX_LABEL:
        raise ValueError(f"vertex label {v} outside [0, {MAX_LABEL}]")


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable labeled simple graph.

    ``vertex_mask`` has bit ``v`` set iff label ``v`` is present; ``rows``
    holds the neighbour bitmask of each present vertex, in ascending label
    order. Equality is label-sensitive: two graphs are equal only if they
    agree on both vertex labels and edges.
    """

    vertex_mask: int
    rows: tuple[int, ...]

    # -- construction --------------------------------------------------

    @classmethod
    def empty(cls, labels: Iterable[int] = ()) -> Graph:
        """Edgeless graph on the given labels."""
        mask = 0
        for v in labels:
            _check_label(v)
            if mask >> v & 1:
                raise ValueError(f"duplicate vertex label {v}")
            mask |= 1 << v
        return cls(mask, (0,) * mask.bit_count())

    @classmethod
    def from_edges(cls, labels: Iterable[int], edges: Iterable[tuple[int, int]] = ()) -> Graph:
        """Graph on ``labels`` with exactly the listed undirected edges."""
        base = cls.empty(labels)
        mask = base.vertex_mask
        rows = list(base.rows)
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not (0 <= x <= MAX_LABEL) or not mask >> x & 1:
                    raise ValueError(f"edge ({u}, {v}) touches absent vertex {x}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            rows[_index(mask, u)] |= 1 << v
            rows[_index(mask, v)] |= 1 << u
        return cls(mask, tuple(rows))

    @classmethod
    def ring(cls, n: int) -> Graph:
        return construct_named("ring", n)

    @classmethod
    def line(cls, n: int) -> Graph:
        return construct_named("line", n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return construct_named("complete", n)

    # -- views ----------------------------------------------------------

    def __len__(self) -> int:
        return self.vertex_mask.bit_count()

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(_bits(self.vertex_mask))

    def has_vertex(self, v: int) -> bool:
        return 0 <= v <= MAX_LABEL and bool(self.vertex_mask >> v & 1)

    def neighbor_mask(self, v: int) -> int:
        if not self.has_vertex(v):
            raise ValueError(f"vertex {v} not in graph")
        return self.rows[_index(self.vertex_mask, v)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.neighbor_mask(v)))

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.neighbor_mask(u) >> v & 1) if self.has_vertex(v) else False

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for i, v in enumerate(self.vertices):
            higher = self.rows[i] >> (v + 1) << (v + 1)
            out.extend((v, u) for u in _bits(higher))
        return tuple(sorted(out))

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    # -- transformations -------------------------------------------------

    def local_complement(self, v: int) -> Graph:
        """Toggle every edge between two neighbours of ``v``; nothing else moves."""
        m = self.neighbor_mask(v)
        if m.bit_count() < 2:
            return self
        mask = self.vertex_mask
        rows = list(self.rows)
        for u in _bits(m):
            rows[_index(mask, u)] ^= m & ~(1 << u)
        return Graph(mask, tuple(rows))

    def toggle_cz(self, u: int, v: int) -> Graph:
        """Flip exactly the edge (u, v); the graph image of a CZ gate."""
        if u == v:
            raise ValueError(f"cannot toggle an edge from vertex {u} to itself")
        iu = _index(self.vertex_mask, u) if self.has_vertex(u) else None
        if iu is None or not self.has_vertex(v):
            missing = u if iu is None else v
            raise ValueError(f"vertex {missing} not in graph")
        rows = list(self.rows)
        rows[iu] ^= 1 << v
        rows[_index(self.vertex_mask, v)] ^= 1 << u
        return Graph(self.vertex_mask, tuple(rows))

    def delete_vertex(self, v: int) -> Graph:
        """Drop ``v`` with its row and column; survivor labels unchanged."""
        i = _index(self.vertex_mask, v) if self.has_vertex(v) else None
        if i is None:
            raise ValueError(f"vertex {v} not in graph")
        keep = ~(1 << v)
        rows = tuple(r & keep for j, r in enumerate(self.rows) if j != i)
        return Graph(self.vertex_mask & keep, rows)

    def measure(self, v: int, basis: PauliBasis | str, neighbor: int | None = None) -> Graph:
        """Apply the graph action of measuring vertex ``v`` in a Pauli basis.

        Z deletes ``v`` outright; Y locally complements at ``v`` first; X
        conjugates by a local complementation at a special neighbour ``w``
        (``neighbor`` if given, else the lowest-labeled one) around the one at
        ``v``. X on an isolated vertex degenerates to plain deletion.
        """
        b = _coerce_basis(basis)
        m = self.neighbor_mask(v)
        if b is not PauliBasis.X and neighbor is not None:
            raise ValueError("a special neighbour applies only to X measurements")
        if b is PauliBasis.Z:
            return self.delete_vertex(v)
        if b is PauliBasis.Y:
            return self.local_complement(v).delete_vertex(v)
        if m == 0:
            return self.delete_vertex(v)
        w = (m & -m).bit_length() - 1 if neighbor is None else neighbor
        if not (0 <= w <= MAX_LABEL and m >> w & 1):
            raise ValueError(f"special neighbour {w} is not a neighbour of {v}")
        return (
            self.local_complement(w)
            .local_complement(v)
            .local_complement(w)
            .delete_vertex(v)
        )

    # -- structure --------------------------------------------------------

    def connected_components(self) -> tuple[tuple[int, ...], ...]:
        """Partition into maximal connected vertex sets, sorted by lowest label."""
        mask = self.vertex_mask
        out = []
        remaining = mask
        while remaining:
            comp = remaining & -remaining
            while True:
                grown = comp
                for u in _bits(comp):
                    grown |= self.rows[_index(mask, u)]
                if grown == comp:
                    break
                comp = grown
            out.append(tuple(_bits(comp)))
            remaining &= ~comp
        return tuple(out)

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self.vertices)}, edges={[list(e) for e in self.edges()]})"


def _index(vertex_mask: int, v: int) -> int:
    """Row index of label ``v``: number of present labels below it."""
    return (vertex_mask & ((1 << v) - 1)).bit_count()


def construct_named(kind: str, n: int) -> Graph:
    """Build a named graph on labels 1..n: ``ring``, ``line`` or ``complete``.

    A ring wraps the line with the edge (n, 1); degenerate wraps that would be
    a self-loop or a duplicate edge are suppressed, so ring(1) is a lone
    vertex and ring(2) a single edge.
    """
    if kind not in ("ring", "line", "complete"):
        raise ValueError(f"unknown graph kind {kind!r}")
    if not 1 <= n <= MAX_LABEL:
        raise ValueError(f"vertex count {n} out of range 1..{MAX_LABEL}")
    labels = range(1, n + 1)
    if kind == "complete":
        edges = [(u, v) for u in labels for v in labels if u < v]
    else:
        edges = [(i, i + 1) for i in range(1, n)]
        if kind == "ring" and n >= 3:
            edges.append((1, n))
    return Graph.from_edges(labels, edges)

"""LC-orbit enumeration, LC-equivalence, and vertex-minor search.

A vertex-minor query "can H be reached from G by local complementations and
vertex deletions?" is decided by enumerating, over the vertices of G that H
lacks (ascending), every assignment of Pauli bases (Z, Y, X per vertex),
applying the corresponding measurement chain, and testing whether the result
lies in the LC orbit of H. Positive answers carry a replayable witness;
negative answers certify exhaustion of the enumeration.

Two answer-preserving prunings can run first: leaf/axil reductions of
non-target vertices (a leaf is removed by a Z measurement, an axil by an X
measurement with its leaf as the special neighbour; applied only when no
target vertex is isolated in H, the regime where the reduction is exact) and
a component filter (vertices connected in H must already be connected in G,
since neither local complementation nor deletion ever joins components).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .foliage import leaf_of_axil
from .graph import MAX_LABEL, Graph, PauliBasis, _bits

DEFAULT_ORBIT_CAP = 5_000_000
DEFAULT_BUDGET = 5_000_000

_WORD = (1 << 64) - 1
_BASES = (PauliBasis.Z, PauliBasis.Y, PauliBasis.X)


class SearchLimitExceeded(RuntimeError):
    """A search ran out of its configured allowance before deciding."""


class OrbitCapExceeded(SearchLimitExceeded):
    """An LC orbit grew past the node cap; the instance is too large for orbit methods."""


class BudgetExceeded(SearchLimitExceeded):
    """The combined work budget (sequences times orbit nodes) was exhausted."""


# -- measurement sequences ------------------------------------------------


@dataclass(frozen=True, slots=True)
class MeasurementStep:
    """One Pauli measurement: vertex, basis, and the special neighbour for X."""

    vertex: int
    basis: PauliBasis
    neighbor: int | None = None

    def as_dict(self) -> dict:
        out: dict = {"vertex": self.vertex, "basis": self.basis.value}
        if self.neighbor is not None:
            out["neighbor"] = self.neighbor
        return out

    def __str__(self) -> str:
        w = f"(w={self.neighbor})" if self.neighbor is not None else ""
        return f"{self.basis.value}{w}@{self.vertex}"


@dataclass(frozen=True, slots=True)
class MeasurementSequence:
    """Ordered Pauli measurements on distinct vertices."""

    steps: tuple[MeasurementStep, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        verts = [s.vertex for s in self.steps]
        if len(set(verts)) != len(verts):
            raise ValueError("measurement sequence repeats a vertex")

    def apply(self, g: Graph) -> Graph:
        """Measure through ``g`` step by step; fails if a vertex is absent."""
        for s in self.steps:
            g = g.measure(s.vertex, s.basis, s.neighbor)
        return g

    def __iter__(self):
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    def as_dicts(self) -> list[dict]:
        return [s.as_dict() for s in self.steps]


# -- targets ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class BellPairTarget:
    """Two disjoint vertex pairs to be turned into separate Bell pairs.

    Stored canonically: each pair sorted, and the pair holding the overall
    lowest label first. The pattern of the four labels along the natural
    order is ``crossing`` (interleaved), ``nested``, or ``disjoint``.
    """

    pair_a: tuple[int, int]
    pair_b: tuple[int, int]

    def __post_init__(self) -> None:
        a = tuple(sorted(self.pair_a))
        b = tuple(sorted(self.pair_b))
        if a[0] > b[0]:
            a, b = b, a
        labels = {*a, *b}
        if len(labels) != 4:
            raise ValueError("a Bell-pair target needs four distinct vertices")
        for v in labels:
            if not 0 <= v <= MAX_LABEL:
                raise ValueError(f"vertex label {v} outside [0, {MAX_LABEL}]")
        object.__setattr__(self, "pair_a", a)
        object.__setattr__(self, "pair_b", b)

    @property
    def labels(self) -> tuple[int, int, int, int]:
        return tuple(sorted(self.pair_a + self.pair_b))  # type: ignore[return-value]

    @property
    def pattern(self) -> str:
        (_, a2), (b1, b2) = self.pair_a, self.pair_b
        if a2 < b1:
            return "disjoint"
        if a2 < b2:
            return "crossing"
        return "nested"

    @property
    def is_crossing(self) -> bool:
        return self.pattern == "crossing"

    def as_graph(self) -> Graph:
        """The two-edge graph on exactly the four target vertices."""
        return Graph.from_edges(self.labels, [self.pair_a, self.pair_b])

    def as_dict(self) -> dict:
        return {"pair_a": list(self.pair_a), "pair_b": list(self.pair_b)}

    def __str__(self) -> str:
        return f"({self.pair_a[0]},{self.pair_a[1]})+({self.pair_b[0]},{self.pair_b[1]})"


# -- reports ------------------------------------------------------------------


@dataclass(slots=True)
class SearchStats:
    """Work accounting for one vertex-minor query."""

    sequences_tried: int = 0
    orbit_size: int = 0
    leaf_reductions: int = 0
    axil_reductions: int = 0
    component_pruned: bool = False
    work: int = 0
    budget: int = 0

    def as_dict(self) -> dict:
        return {
            "sequences_tried": self.sequences_tried,
            "orbit_size": self.orbit_size,
            "leaf_reductions": self.leaf_reductions,
            "axil_reductions": self.axil_reductions,
            "component_pruned": self.component_pruned,
            "work": self.work,
            "budget": self.budget,
        }


@dataclass(frozen=True, slots=True)
class Witness:
    """Replayable certificate for a positive vertex-minor decision."""

    measurements: MeasurementSequence
    lc_path: tuple[int, ...] = ()

    def replay(self, g: Graph) -> Graph:
        """Apply the measurements, then the local complementations, to ``g``."""
        out = self.measurements.apply(g)
        for v in self.lc_path:
            out = out.local_complement(v)
        return out

    def as_dict(self) -> dict:
        return {"measurements": self.measurements.as_dicts(), "lc_path": list(self.lc_path)}


@dataclass(slots=True)
class VertexMinorReport:
    """Decision plus certificate: a witness when true, exhaustion stats when false."""

    decision: bool
    witness: Witness | None
    stats: SearchStats = field(default_factory=SearchStats)

    def as_dict(self) -> dict:
        return {
            "decision": self.decision,
            "witness": self.witness.as_dict() if self.witness else None,
            "stats": self.stats.as_dict(),
        }


# -- orbit machinery ---------------------------------------------------------


@dataclass(slots=True)
class _WorkMeter:
    budget: int
    spent: int = 0

    def charge(self, units: int = 1) -> None:
        self.spent += units
        if self.spent > self.budget:
            raise BudgetExceeded(f"work budget of {self.budget} units exhausted")


def _pack(rows: tuple[int, ...]) -> int:
    """Fold the adjacency rows into one integer key (64 bits per row)."""
    key = 0
    for i, r in enumerate(rows):
        key |= r << (i << 6)
    return key


def _unpack(key: int, n: int) -> tuple[int, ...]:
    return tuple(key >> (i << 6) & _WORD for i in range(n))


def _lc_rows(rows: tuple[int, ...], index: dict[int, int], v: int) -> tuple[int, ...] | None:
    """Rows after locally complementing at ``v``; None when the move is the identity."""
    m = rows[index[v]]
    if m.bit_count() < 2:
        return None
    new = list(rows)
    mm = m
    while mm:
        low = mm & -mm
        mm ^= low
        new[index[low.bit_length() - 1]] ^= m ^ low
    return tuple(new)


def _orbit_scan(
    g: Graph,
    *,
    limit: int,
    exc_cls: type[SearchLimitExceeded] = OrbitCapExceeded,
    stop_key: int | None = None,
    meter: _WorkMeter | None = None,
) -> tuple[dict[int, tuple[int | None, int | None]], bool]:
    """Breadth-first closure of ``g`` under local complementations.

    Returns ``(parents, found)`` where ``parents`` maps each packed adjacency
    key to ``(parent_key, vertex)`` of its discovery move, in deterministic
    BFS order, and ``found`` reports whether ``stop_key`` was reached (the
    scan stops early when it is). Raises ``exc_cls`` when the orbit would
    exceed ``limit`` nodes.
    """
    labels = g.vertices
    index = {v: i for i, v in enumerate(labels)}
    root_key = _pack(g.rows)
    parents: dict[int, tuple[int | None, int | None]] = {root_key: (None, None)}
    if meter is not None:
        meter.charge()
    if stop_key is not None and root_key == stop_key:
        return parents, True
    queue: deque[tuple[tuple[int, ...], int]] = deque([(g.rows, root_key)])
    while queue:
        rows, key = queue.popleft()
        for v in labels:
            nr = _lc_rows(rows, index, v)
            if nr is None:
                continue
            nk = _pack(nr)
            if nk in parents:
                continue
            if len(parents) >= limit:
                raise exc_cls(f"LC orbit exceeds {limit} graphs")
            parents[nk] = (key, v)
            if meter is not None:
                meter.charge()
            if stop_key is not None and nk == stop_key:
                return parents, True
            queue.append((nr, nk))
    return parents, False


def _walk_up(parents: dict[int, tuple[int | None, int | None]], key: int) -> tuple[int, ...]:
    """LC vertices that carry the graph at ``key`` back to the scan root.

    Local complementations are involutions, so undoing the discovery chain in
    reverse transforms the graph at ``key`` into the root graph; the returned
    tuple is already in application order.
    """
    path = []
    while True:
        parent, via = parents[key]
        if via is None:
            return tuple(path)
        path.append(via)
        key = parent  # type: ignore[assignment]


def lc_orbit(g: Graph, cap: int = DEFAULT_ORBIT_CAP) -> frozenset[Graph]:
    """Every labeled graph reachable from ``g`` by local complementations.

    Raises OrbitCapExceeded when the orbit would exceed ``cap`` graphs.
    """
    if cap < 1:
        raise ValueError("orbit cap must be at least 1")
    parents, _ = _orbit_scan(g, limit=cap)
    n = len(g)
    return frozenset(Graph(g.vertex_mask, _unpack(k, n)) for k in parents)


def is_lc_equivalent(g: Graph, h: Graph, cap: int = DEFAULT_ORBIT_CAP) -> bool:
    """Whether ``h`` lies in the LC orbit of ``g``. Requires equal vertex sets."""
    if g.vertex_mask != h.vertex_mask:
        raise ValueError("graphs are on different vertex sets")
    _, found = _orbit_scan(g, limit=cap, stop_key=_pack(h.rows))
    return found


# -- leaf/axil reductions -----------------------------------------------------


def apply_leaf_axil_reduction(g: Graph, h_labels, v: int) -> Graph:
    """Remove ``v``, a leaf or axil outside the target labels, preserving the answer.

    For any target graph on ``h_labels`` without isolated vertices, the
    reduced instance has the same vertex-minor answer as ``g``: a leaf is
    simply deleted; an axil is locally complemented, then its leaf, then
    deleted. Targets with an isolated vertex void the guarantee: an X
    measurement on a leaf isolates its axil, an option the reduced graph no
    longer has.
    """
    h_mask = 0
    for u in h_labels:
        h_mask |= 1 << u
    if h_mask >> v & 1:
        raise ValueError(f"vertex {v} is a target vertex and cannot be reduced away")
    m = g.neighbor_mask(v)
    if m.bit_count() == 1:
        return g.delete_vertex(v)
    w = leaf_of_axil(g, v)
    if w is None:
        raise ValueError(f"vertex {v} is neither a leaf nor an axil")
    return g.local_complement(v).local_complement(w).delete_vertex(v)


def _reduce_to_fixpoint(
    g: Graph, h_mask: int, meter: _WorkMeter, stats: SearchStats
) -> tuple[Graph, list[MeasurementStep]]:
    """Apply leaf/axil reductions outside ``h_mask`` until none applies.

    Each reduction is recorded as the Pauli measurement with the identical
    graph action (Z for a leaf; X with the leaf as special neighbour for an
    axil), which keeps witnesses replayable from the original graph.
    """
    steps: list[MeasurementStep] = []
    while True:
        for v in g.vertices:
            if h_mask >> v & 1:
                continue
            if g.neighbor_mask(v).bit_count() == 1:
                steps.append(MeasurementStep(v, PauliBasis.Z))
                g = g.delete_vertex(v)
                stats.leaf_reductions += 1
                meter.charge()
                break
            w = leaf_of_axil(g, v)
            if w is not None:
                steps.append(MeasurementStep(v, PauliBasis.X, neighbor=w))
                g = g.measure(v, PauliBasis.X, neighbor=w)
                stats.axil_reductions += 1
                meter.charge()
                break
        else:
            return g, steps


# -- vertex-minor decision ------------------------------------------------------


def is_vertex_minor(
    g: Graph,
    h: Graph,
    *,
    prune: bool = True,
    budget: int = DEFAULT_BUDGET,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
    measure_order: tuple[int, ...] | None = None,
) -> VertexMinorReport:
    """Decide whether ``h`` is a vertex-minor of ``g``.

    Enumerates all basis assignments over the vertices of ``g`` missing from
    ``h`` (ascending order unless ``measure_order`` overrides it; bases in
    order Z, Y, X) and tests each measured graph for membership in the LC
    orbit of ``h``. The first assignment in enumeration order that succeeds
    becomes the witness, so results are deterministic.

    Work accounting: one unit per orbit node plus, per sequence tried, one
    unit per orbit node (minimum one). Exceeding ``budget`` raises
    BudgetExceeded rather than returning a decision.
    """
    if h.vertex_mask & ~g.vertex_mask:
        raise ValueError("target graph uses vertices absent from the host graph")
    stats = SearchStats(budget=budget)
    meter = _WorkMeter(budget)
    cur = g
    prefix: list[MeasurementStep] = []

    if prune:
        # leaf/axil reductions are only answer-preserving when no target
        # vertex is isolated in h (see apply_leaf_axil_reduction)
        if all(h.rows):
            cur, prefix = _reduce_to_fixpoint(g, h.vertex_mask, meter, stats)
        comp_root: dict[int, int] = {}
        for comp in cur.connected_components():
            for v in comp:
                comp_root[v] = comp[0]
        for comp in h.connected_components():
            if len({comp_root[v] for v in comp}) > 1:
                stats.component_pruned = True
                stats.work = meter.spent
                return VertexMinorReport(False, None, stats)

    missing = [v for v in cur.vertices if not h.vertex_mask >> v & 1]
    if measure_order is None:
        order = missing
    else:
        original_missing = [v for v in g.vertices if not h.vertex_mask >> v & 1]
        if sorted(measure_order) != original_missing:
            raise ValueError("measure_order must list exactly the vertices to remove")
        order = [v for v in measure_order if v in missing]  # reductions already ate the rest

    parents, _ = _orbit_scan(h, limit=orbit_cap, meter=meter)
    stats.orbit_size = len(parents)
    unit = max(1, stats.orbit_size)

    for bases in product(_BASES, repeat=len(order)):
        meter.charge(unit)
        stats.sequences_tried += 1
        s = cur
        steps = []
        for v, b in zip(order, bases):
            if b is PauliBasis.X:
                m = s.neighbor_mask(v)
                w = (m & -m).bit_length() - 1 if m else None
                steps.append(MeasurementStep(v, b, neighbor=w))
                s = s.measure(v, b, neighbor=w)
            else:
                steps.append(MeasurementStep(v, b))
                s = s.measure(v, b)
        key = _pack(s.rows)
        if key in parents:
            witness = Witness(MeasurementSequence(tuple(prefix + steps)), _walk_up(parents, key))
            stats.work = meter.spent
            return VertexMinorReport(True, witness, stats)

    stats.work = meter.spent
    return VertexMinorReport(False, None, stats)


def can_extract_bell_pairs(g: Graph, target: BellPairTarget, **kwargs) -> VertexMinorReport:
    """Whether two separate Bell pairs on the target's four vertices are reachable."""
    for v in target.labels:
        if not g.has_vertex(v):
            raise ValueError(f"target vertex {v} not in graph")
    return is_vertex_minor(g, target.as_graph(), **kwargs)

"""Foliage of a graph: its leaves, axils, and twin pairs.

A leaf has degree one; an axil is the unique neighbour of a leaf; two
vertices are twins when their neighbourhoods agree once each other is
excluded. The union of all three classes is preserved by local
complementation, which is what makes it useful for pruning searches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, _bits


@dataclass(frozen=True, slots=True)
class FoliageDecomposition:
    """Exhaustive classification of a graph's foliage vertices."""

    leaves: frozenset[int]
    axils: frozenset[int]
    twins: frozenset[tuple[int, int]]

    @property
    def members(self) -> frozenset[int]:
        """All foliage vertices: leaves, axils, and both members of each twin pair."""
        twin_members = frozenset(v for pair in self.twins for v in pair)
        return self.leaves | self.axils | twin_members

    def classes_of(self, v: int) -> tuple[str, ...]:
        out = []
        if v in self.leaves:
            out.append("leaf")
        if v in self.axils:
            out.append("axil")
        if any(v in pair for pair in self.twins):
            out.append("twin")
        return tuple(out)


def foliage_decomposition(g: Graph) -> FoliageDecomposition:
    """Classify every leaf, axil, and twin pair of ``g``.

    Twin pairs are reported whether or not the two vertices are adjacent;
    a pair of isolated vertices qualifies (their reduced neighbourhoods are
    both empty).
    """
    verts = g.vertices
    masks = {v: g.neighbor_mask(v) for v in verts}
    leaves = frozenset(v for v in verts if masks[v].bit_count() == 1)
    axils = frozenset((masks[v] & -masks[v]).bit_length() - 1 for v in leaves)
    twins = frozenset(
        (u, v)
        for i, u in enumerate(verts)
        for v in verts[i + 1 :]
        if masks[u] & ~(1 << v) == masks[v] & ~(1 << u)
    )
    return FoliageDecomposition(leaves=leaves, axils=axils, twins=twins)


def leaf_of_axil(g: Graph, v: int) -> int | None:
    """Lowest-labeled leaf whose unique neighbour is ``v``, or None."""
    for u in _bits(g.neighbor_mask(v)):
        if g.neighbor_mask(u) == 1 << v:
            return u
    return None

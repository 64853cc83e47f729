"""Separations and k-connectivity by exhaustive vertex-cut search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Optional, Tuple

from ..graph import Graph


@dataclass(frozen=True)
class Separation:
    A: FrozenSet[int]
    B: FrozenSet[int]

    @property
    def order(self) -> int:
        return len(self.A & self.B)

    def is_valid(self, g: Graph) -> bool:
        a_only, b_only = self.A - self.B, self.B - self.A
        if self.A | self.B != set(g.vertices) or not a_only or not b_only:
            return False
        return all(g.neighbors(x).isdisjoint(b_only) for x in a_only)


def min_separation(g: Graph, below: Optional[int] = None) -> Optional[Separation]:
    """A separation of minimum order (optionally only of order < ``below``)."""
    verts = g.vertices
    n = len(verts)
    top = n - 2 if below is None else min(below - 1, n - 2)
    for s in range(0, top + 1):
        for cut in combinations(verts, s):
            rest = g.delete(cut)
            comps = rest.components()
            if len(comps) >= 2:
                first = comps[0]
                return Separation(frozenset(cut) | first, frozenset(verts) - first)
    return None


def is_k_connected(g: Graph, k: int) -> Tuple[bool, Optional[Separation]]:
    """k-connected iff v ≥ k+1 and no separation has order < k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    sep = min_separation(g, below=k)
    if sep is not None:
        return False, sep
    return g.num_vertices() >= k + 1, None

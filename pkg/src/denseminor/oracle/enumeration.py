"""Small-graph enumeration and canonical forms.

Canonical labelling is individualization-refinement: refine an ordered
colour partition to equitability, branch on the first non-singleton cell,
and keep the lexicographically least relabelled adjacency found at the
leaves.  Cells made of mutual twins are expanded on one vertex only, since
swapping twins is an automorphism fixing the current partition.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from ..graph import Graph

ENV_CAP = "DENSEMINOR_ENUM_CAP"
DEFAULT_CAP = 8

Code = Tuple[int, ...]


class EnumerationCapError(ValueError):
    pass


def enumeration_cap() -> int:
    raw = os.environ.get(ENV_CAP)
    return int(raw) if raw else DEFAULT_CAP


def to_masks(g: Graph) -> Tuple[List[int], List[int]]:
    """(vertex list, adjacency bitmasks over vertex positions)."""
    verts = list(g.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    masks = [0] * len(verts)
    for u, v in g.edges:
        masks[idx[u]] |= 1 << idx[v]
        masks[idx[v]] |= 1 << idx[u]
    return verts, masks


def from_masks(masks: Sequence[int]) -> Graph:
    n = len(masks)
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n) if masks[i] >> j & 1))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _refine(nbrs: List[List[int]], colors: List[int]) -> List[int]:
    ncells = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in nbrs[v]))) for v in range(len(colors))]
        order = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [order[s] for s in sig]
        if len(order) == ncells:
            return new
        colors, ncells = new, len(order)


def _relabel_code(nbrs: List[List[int]], pos: List[int]) -> Code:
    n = len(pos)
    inv = [0] * n
    for v, p in enumerate(pos):
        inv[p] = v
    return tuple(sum(1 << pos[w] for w in nbrs[inv[i]]) for i in range(n))


def canonical_code(masks: Sequence[int]) -> Code:
    """Isomorphism-invariant adjacency code of a graph given as bitmasks."""
    n = len(masks)
    if n == 0:
        return ()
    nbrs = [list(_bits(m)) for m in masks]
    best: List[Optional[Code]] = [None]

    def twins(cell: List[int]) -> bool:
        a = cell[0]
        for b in cell[1:]:
            if masks[a] & ~(1 << b) != masks[b] & ~(1 << a):
                return False
        return True

    def search(colors: List[int]) -> None:
        colors = _refine(nbrs, colors)
        if len(set(colors)) == n:
            code = _relabel_code(nbrs, colors)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if colors[v] == target]
        if twins(cell):
            cell = cell[:1]
        for v in cell:
            search([2 * c + (1 if c == target and x != v else 0) for x, c in enumerate(colors)])

    search([len(nb) for nb in nbrs])
    return best[0]


def canonical_form(g: Graph) -> Graph:
    """A fixed representative of the isomorphism class of ``g`` on ``0..n-1``."""
    return from_masks(canonical_code(to_masks(g)[1]))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.num_vertices() != h.num_vertices() or g.num_edges() != h.num_edges():
        return False
    if sorted(g.degrees().values()) != sorted(h.degrees().values()):
        return False
    return canonical_code(to_masks(g)[1]) == canonical_code(to_masks(h)[1])


@lru_cache(maxsize=None)
def graph_classes(n: int) -> Tuple[Code, ...]:
    """Canonical codes of all isomorphism classes on ``n`` vertices."""
    if n == 0:
        return ((),)
    if n == 1:
        return ((0,),)
    seen = set()
    for rep in graph_classes(n - 1):
        degs = [m.bit_count() for m in rep]
        new = 1 << (n - 1)
        for nb in range(1 << (n - 1)):
            d = nb.bit_count()
            # only add the new vertex as a minimum-degree vertex
            if any(degs[w] + (nb >> w & 1) < d for w in range(n - 1)):
                continue
            masks = [m | new if nb >> w & 1 else m for w, m in enumerate(rep)]
            masks.append(nb)
            seen.add(canonical_code(masks))
    return tuple(sorted(seen, key=lambda c: (sum(m.bit_count() for m in c), c)))


def _check_cap(n: int, cap: Optional[int]) -> None:
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise EnumerationCapError(f"n = {n} exceeds enumeration cap {cap} (set {ENV_CAP} to override)")


def enumerate_graphs(n: int, edge_filter: Optional[Callable[[int], bool]] = None,
                     iso: bool = False, cap: Optional[int] = None) -> Iterator[Graph]:
    """All graphs on ``0..n-1``, labeled or one per isomorphism class.

    ``edge_filter`` selects admissible edge counts; for labeled enumeration
    it is applied before any subset of that size is generated.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_cap(n, cap)
    if iso:
        for code in graph_classes(n):
            if edge_filter is None or edge_filter(sum(m.bit_count() for m in code) // 2):
                yield from_masks(code)
        return
    pairs = list(combinations(range(n), 2))
    for k in range(len(pairs) + 1):
        if edge_filter is not None and not edge_filter(k):
            continue
        for es in combinations(pairs, k):
            yield Graph(range(n), es)


def count_labeled(n: int, edge_filter: Optional[Callable[[int], bool]] = None) -> int:
    p = comb(n, 2)
    return sum(comb(p, k) for k in range(p + 1) if edge_filter is None or edge_filter(k))

"""Extremal graph families and their closed-form edge counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import ceil, comb
from typing import Dict, List, Optional, Tuple

from .graph import Graph, GraphError, avg_degree, complete_graph

STAR = "star"
CHAIN = "chain"


@dataclass(frozen=True)
class SGraphSpec:
    """k universal clique vertices joined to r disjoint s-cliques."""

    k: int
    r: int
    s: int

    def __post_init__(self):
        if self.k < 1 or self.r < 1 or self.s < 1:
            raise ValueError("S-graph parameters must all be >= 1")

    @property
    def num_vertices(self) -> int:
        return self.k + self.r * self.s

    @property
    def num_edges(self) -> int:
        return comb(self.k, 2) + self.r * comb(self.s, 2) + self.k * self.r * self.s

    @property
    def avg_degree(self) -> Fraction:
        return Fraction(2 * self.num_edges, self.num_vertices)


@dataclass(frozen=True)
class CockadeSpec:
    base: Graph
    k: int
    copies: int
    attachment: str = STAR

    def __post_init__(self):
        if self.copies < 1:
            raise ValueError("copies must be >= 1")
        if self.attachment not in (STAR, CHAIN):
            raise ValueError(f"unknown attachment policy {self.attachment!r}")
        if self.k < 0 or self.k >= self.base.num_vertices() and self.copies > 1:
            raise ValueError("k must be smaller than v(H) to glue copies")


def path_power(n: int, k: int) -> Graph:
    """k-th power of the path on n vertices, a k-tree."""
    if k < 1 or n <= k:
        raise GraphError(f"path_power needs n > k >= 1, got n={n}, k={k}")
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, min(n, i + k + 1))))


def ktree_edge_count(n: int, k: int) -> int:
    return comb(k, 2) + k * (n - k)


def s_graph(spec: SGraphSpec) -> Graph:
    """Core clique on ``0..k-1``; clique i on ``k+i*s .. k+(i+1)*s-1``."""
    k, r, s = spec.k, spec.r, spec.s
    n = k + r * s
    edges = list(combinations(range(k), 2))
    edges += [(c, x) for c in range(k) for x in range(k, n)]
    for i in range(r):
        lo = k + i * s
        edges += list(combinations(range(lo, lo + s), 2))
    return Graph(range(n), edges)


def f_bound(k: int, s: int, t: int) -> int:
    """Most edges a t-vertex subgraph of S_{k,r,s} can have (r large)."""
    if t < k:
        raise ValueError("f_bound needs t >= k")
    if s < 1:
        raise ValueError("f_bound needs s >= 1")
    q, rem = divmod(t - k, s)
    return comb(k, 2) + k * (t - k) + q * comb(s, 2) + comb(rem, 2)


def k5_minus() -> Graph:
    """K5 without the edge {0, 1}."""
    return Graph(range(5), [e for e in combinations(range(5), 2) if e != (0, 1)])


def _cliques(g: Graph, k: int) -> List[Tuple[int, ...]]:
    return [c for c in combinations(g.vertices, k)
            if all(g.has_edge(a, b) for a, b in combinations(c, 2))]


def designated_clique(g: Graph, k: int) -> Tuple[int, ...]:
    """The k-clique used for gluing: largest degree sum, then first by id."""
    cl = _cliques(g, k)
    if not cl:
        raise GraphError(f"base graph has no clique of size {k}")
    return min(cl, key=lambda c: (-sum(g.degree(x) for x in c), c))


def cockade_edge_count(v_h: int, e_h: int, k: int, v: int) -> Fraction:
    """Edge law of an (H,k)-cockade on v vertices."""
    return Fraction(v - k, v_h - k) * e_h - Fraction(v - v_h, v_h - k) * comb(k, 2)


def cockade(spec: CockadeSpec) -> Graph:
    """Glue ``copies`` copies of ``base`` along k-cliques.

    ``star`` glues every copy to the designated clique of the first copy;
    ``chain`` glues copy i to a clique of copy i-1 other than the one that
    copy was glued along.
    """
    h = spec.base.compact()
    k = spec.k
    hv = h.num_vertices()
    anchor = designated_clique(h, k)
    others = [v for v in h.vertices if v not in anchor]
    edges = set(h.edges)
    n = hv
    copy_maps: List[Dict[int, int]] = [{v: v for v in h.vertices}]
    glued_on: List[Tuple[int, ...]] = [anchor]
    for _ in range(1, spec.copies):
        if spec.attachment == STAR:
            target = anchor
        else:
            prev = copy_maps[-1]
            used = {prev[x] for x in glued_on[-1]}
            cand = [tuple(prev[x] for x in c) for c in _cliques(h, k)]
            cand = [c for c in cand if set(c) != used]
            if not cand:
                raise GraphError("chain attachment needs two distinct k-cliques in the base")
            target = min(tuple(sorted(c)) for c in cand)
        mp = dict(zip(anchor, target))
        for v in others:
            mp[v] = n
            n += 1
        edges |= {tuple(sorted((mp[a], mp[b]))) for a, b in h.edges}
        copy_maps.append(mp)
        glued_on.append(anchor)
    return Graph(range(n), edges)


def line_graph_complete(n: int) -> Graph:
    """L(K_n): pairs of ``0..n-1`` (lexicographic index), adjacent iff they meet."""
    if n < 2:
        raise GraphError("line_graph_complete needs n >= 2")
    pairs = pair_labels(n)
    edges = [(i, j) for i, j in combinations(range(len(pairs)), 2)
             if set(pairs[i]) & set(pairs[j])]
    return Graph(range(len(pairs)), edges)


def pair_labels(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(n), 2))


def family_s(t: int, i: int) -> int:
    """s(t) = t/(2i) rounded half-up, at least 1."""
    return max(1, int(Fraction(t, 2 * i) + Fraction(1, 2)))


def family_k(t: int, s: int) -> int:
    return ceil(Fraction(t - s, 2)) + 1


def theorem13_witness(t: int, i: int, r_max: Optional[int] = None) -> Tuple[SGraphSpec, Graph]:
    """S_{k,r,s} with s = s(t), k = ⌈(t-s)/2⌉+1 and the least r giving d̄ ≥ t."""
    if t < 2 or i < 1:
        raise ValueError("need t >= 2 and i >= 1")
    s = family_s(t, i)
    if s > t:
        raise ValueError("s(t) exceeds t")
    k = family_k(t, s)
    # d̄ → s - 1 + 2k ≥ t + 1 as r grows, so the loop ends
    r = 1
    limit = r_max or 10 * (t + 2) ** 2
    while SGraphSpec(k, r, s).avg_degree < t:
        r += 1
        if r > limit:
            raise RuntimeError("no r found below the search limit")
    spec = SGraphSpec(k, r, s)
    return spec, s_graph(spec)

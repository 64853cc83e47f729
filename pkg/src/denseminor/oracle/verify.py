"""Desk-scale verifiers for the small-t and extremal claims."""

from __future__ import annotations

import time

import numpy as np
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, List, Optional

from ..constructions import SGraphSpec, k5_minus, s_graph
from ..graph import Graph, complete_graph
from .connectivity import is_k_connected
from .enumeration import _check_cap, canonical_code, enumerate_graphs, is_isomorphic
from .search import has_minor, has_subgraph, max_minor_edges, max_subgraph_edges

# guaranteed edges of a densest t-vertex minor when d̄ ≥ t - 1
SMALL_T_VALUES = {2: 1, 3: 3, 4: 5, 5: 8, 6: 11}


@dataclass
class Report:
    checked: int = 0
    violations: List = field(default_factory=list)
    runtime_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"checked": self.checked, "violations": self.violations,
                "runtime_ms": round(self.runtime_ms, 3)}


def _run(items: Iterable[Graph], check: Callable[[Graph], Optional[object]], workers: int) -> Report:
    """Apply ``check`` to every graph; a non-None return is a violation.

    With several workers the input is cut into fixed chunks and results are
    merged in input order, so reports do not depend on the worker count.
    """
    start = time.perf_counter()
    rep = Report()
    if workers <= 1:
        for g in items:
            rep.checked += 1
            bad = check(g)
            if bad is not None:
                rep.violations.append(bad)
    else:
        edge_lists = [(g.num_vertices(), g.edges) for g in items]
        chunk = max(1, len(edge_lists) // (workers * 8))
        with ProcessPoolExecutor(workers) as pool:
            for bad in pool.map(_apply, [check] * len(edge_lists), edge_lists, chunksize=chunk):
                rep.checked += 1
                if bad is not None:
                    rep.violations.append(bad)
    rep.runtime_ms = (time.perf_counter() - start) * 1000
    return rep


def _apply(check, item):
    n, edges = item
    return check(Graph(range(n), edges))


# -- vectorized labeled sweeps -----------------------------------------------------
#
# A labeled graph on n vertices is an integer whose bit i is the i-th pair of
# combinations(range(n), 2).  Most graphs in a sweep already contain a dense
# t-subgraph, or one after a single edge contraction; both tests run over
# whole blocks of masks with numpy.  Only the rest goes to the exact search,
# once per isomorphism class.

_CHUNK = 1 << 22


def _pair_bits(n: int):
    pairs = list(combinations(range(n), 2))
    return pairs, {p: i for i, p in enumerate(pairs)}


def _subset_masks(verts, size, idx) -> np.ndarray:
    return np.array([sum(1 << idx[p] for p in combinations(c, 2)) for c in combinations(verts, size)],
                    dtype=np.uint64)


def _dense_after_contraction(m: np.ndarray, n: int, t: int, need: int, idx) -> np.ndarray:
    """Boolean mask: some single contraction leaves t vertices spanning ``need`` edges."""
    hit = np.zeros(m.shape, dtype=bool)
    one = np.uint64(1)
    for a, b in combinations(range(n), 2):
        todo = ~hit & ((m >> np.uint64(idx[a, b])) & one).astype(bool)
        if not todo.any():
            continue
        sub = m[todo]
        rest = [x for x in range(n) if x not in (a, b)]
        # x joins the merged vertex if it was adjacent to a or to b
        joined = {x: ((sub >> np.uint64(idx[min(a, x), max(a, x)]))
                      | (sub >> np.uint64(idx[min(b, x), max(b, x)]))) & one for x in rest}
        found = np.zeros(sub.shape, dtype=bool)
        for c in combinations(rest, t - 1):
            inner = np.uint64(sum(1 << idx[p] for p in combinations(c, 2)))
            cnt = np.bitwise_count(sub & inner).astype(np.int64)
            for x in c:
                cnt += joined[x].astype(np.int64)
            found |= cnt >= need
        hit[np.flatnonzero(todo)[found]] = True
    return hit


def labeled_residue(n: int, t: int, need: int, edge_filter: Callable[[int], bool]):
    """Count labeled graphs on n vertices passing ``edge_filter`` and return the
    masks not settled by the subgraph or single-contraction tests."""
    pairs, idx = _pair_bits(n)
    npairs = len(pairs)
    ok_counts = np.array([bool(edge_filter(k)) for k in range(npairs + 1)])
    subs = _subset_masks(range(n), t, idx) if t <= n else np.zeros(0, dtype=np.uint64)
    checked = 0
    left = []
    for start in range(0, 1 << npairs, _CHUNK):
        m = np.arange(start, min(start + _CHUNK, 1 << npairs), dtype=np.uint64)
        m = m[ok_counts[np.bitwise_count(m)]]
        checked += int(m.size)
        if t > n:
            left.append(m)
            continue
        for S in subs:
            m = m[np.bitwise_count(m & S) < need]
            if not m.size:
                break
        if m.size and t <= n - 1:
            m = m[~_dense_after_contraction(m, n, t, need, idx)]
        left.append(m)
    rest = np.concatenate(left) if left else np.zeros(0, dtype=np.uint64)
    return checked, rest


def _graph_of_mask(x: int, n: int, pairs) -> Graph:
    return Graph(range(n), (p for i, p in enumerate(pairs) if x >> i & 1))


def _labeled_sweep(ns, t: int, need: int, edge_filter_for, check) -> Report:
    """Labeled sweep over every n in ``ns``; ``check`` runs once per class of the residue."""
    start = time.perf_counter()
    rep = Report()
    for n in ns:
        checked, rest = labeled_residue(n, t, need, edge_filter_for(n))
        rep.checked += checked
        pairs, _ = _pair_bits(n)
        verdict = {}
        for x in rest.tolist():
            g = _graph_of_mask(x, n, pairs)
            key = canonical_code([sum(1 << w for w in g.neighbors(v)) for v in range(n)])
            if key not in verdict:
                verdict[key] = check(g) is not None
            if verdict[key]:
                rep.violations.append(check(g))
    rep.runtime_ms = (time.perf_counter() - start) * 1000
    return rep


class _SmallCheck:
    def __init__(self, t: int):
        self.t = t
        self.need = SMALL_T_VALUES[t]

    def __call__(self, g: Graph):
        if max_subgraph_edges(g, self.t, target=self.need).optimum >= self.need:
            return None
        got = max_minor_edges(g, self.t, target=self.need).optimum
        if got >= self.need:
            return None
        return {"edges": g.edges, "n": g.num_vertices(), "best": got}


def verify_small_theorem(t: int, n_max: int, labeled: bool = False, workers: int = 1,
                         cap: Optional[int] = None) -> Report:
    """Every graph with t ≤ v ≤ n_max and d̄ ≥ t-1 has a t-vertex minor with the guaranteed edges.

    ``labeled=False`` checks one graph per isomorphism class, which covers
    the same claim since it is invariant under relabelling.
    """
    if t not in SMALL_T_VALUES:
        raise ValueError("t must be in 2..6")
    _check_cap(n_max, cap)
    if labeled:
        return _labeled_sweep(range(t, n_max + 1), t, SMALL_T_VALUES[t],
                              lambda n: (lambda e: 2 * e >= (t - 1) * n), _SmallCheck(t))

    def graphs():
        for n in range(t, n_max + 1):
            # d̄ ≥ t-1  ⇔  2e ≥ (t-1)n
            yield from enumerate_graphs(n, lambda e, n=n: 2 * e >= (t - 1) * n, iso=not labeled, cap=cap)

    return _run(graphs(), _SmallCheck(t), workers)


def _exceptional(g: Graph) -> bool:
    n = g.num_vertices()
    if n == 1:
        return True
    if n == 5:
        return is_isomorphic(g, complete_graph(5)) or is_isomorphic(g, k5_minus())
    return False


def _extremal11_check(g: Graph):
    if _exceptional(g):
        return None
    if g.num_vertices() < 6:
        return {"edges": g.edges, "n": g.num_vertices(), "best": None}
    if max_subgraph_edges(g, 6, target=11).optimum >= 11:
        return None
    got = max_minor_edges(g, 6, target=11).optimum
    return None if got >= 11 else {"edges": g.edges, "n": g.num_vertices(), "best": got}


def verify_extremal11(n_max: int, labeled: bool = False, workers: int = 1,
                      cap: Optional[int] = None) -> Report:
    """Graphs with e ≥ 5v/2 - 7/2 (other than K1, K5⁻, K5) have a 6-vertex 11-edge minor."""
    _check_cap(n_max, cap)
    if labeled:
        return _labeled_sweep(range(1, n_max + 1), 6, 11,
                              lambda n: (lambda e: 2 * e >= 5 * n - 7), _extremal11_check)

    def graphs():
        for n in range(1, n_max + 1):
            yield from enumerate_graphs(n, lambda e, n=n: 2 * e >= 5 * n - 7, iso=not labeled, cap=cap)

    return _run(graphs(), _extremal11_check, workers)


def _6v12e_check(g: Graph):
    if is_k_connected(g, 3)[0]:
        return None
    if max_subgraph_edges(g, 5, target=10).optimum == 10:
        return None
    return {"edges": g.edges}


def verify_6v12e_report(labeled: bool = True) -> Report:
    return _run(enumerate_graphs(6, lambda e: e >= 12, iso=not labeled), _6v12e_check, 1)


def verify_6v12e_claim() -> bool:
    """Each 6-vertex graph with ≥ 12 edges is 3-connected or contains K5."""
    return verify_6v12e_report().ok


def minor_subgraph_mismatches(g: Graph, h_max: int) -> Report:
    """Patterns on ≤ h_max vertices where being a minor and a subgraph of ``g`` disagree."""
    start = time.perf_counter()
    rep = Report()
    for h in range(1, h_max + 1):
        for pat in enumerate_graphs(h, iso=True):
            rep.checked += 1
            minor = has_minor(g, pat)[0]
            sub = has_subgraph(g, pat)[0]
            if minor != sub:
                rep.violations.append({"pattern": pat.edges, "n": h, "minor": minor, "subgraph": sub})
    rep.runtime_ms = (time.perf_counter() - start) * 1000
    return rep


def verify_lemma32(spec: SGraphSpec, h_max: int) -> Report:
    """Minor containment equals subgraph containment in S_{k,r,s}."""
    if h_max > spec.num_vertices:
        raise ValueError("h_max exceeds v(S)")
    return minor_subgraph_mismatches(s_graph(spec), h_max)

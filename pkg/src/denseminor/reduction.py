"""Average-degree-preserving reductions: Mader contraction pass and vertex trimming."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from .graph import Graph, GraphError, avg_degree
from .models import CONTRACT, DELETE, ContractionTrace


class PreconditionError(ValueError):
    """An operation was called outside its documented precondition."""


@dataclass(frozen=True)
class ReductionResult:
    reduced: Graph
    trace: ContractionTrace
    threshold: Fraction

    @property
    def changed(self) -> bool:
        return len(self.trace) > 0


def edges_touching(g: Graph, xs: Iterable[int]) -> int:
    """Number of edges with at least one end in ``xs``."""
    xs = set(xs)
    inside = 0
    total = 0
    for x in xs:
        ns = g.neighbors(x)
        total += len(ns)
        inside += sum(1 for y in ns if y in xs)
    return total - inside // 2


def removal_preserves(g: Graph, xs: Iterable[int]) -> bool:
    """True iff the edges meeting X number at most d̄(G)·|X|/2.

    When it holds, deleting X does not lower the average degree.
    """
    xs = set(xs)
    unknown = xs - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    if len(xs) >= g.num_vertices():
        raise PreconditionError("X must be a proper subset of V(G)")
    return 2 * edges_touching(g, xs) <= avg_degree(g) * len(xs)


def _closed_nbhd_min(adj: Dict[int, set], u: int) -> Tuple[int, Optional[int]]:
    """(δ(G[N[u]]), the first neighbour of u attaining it)."""
    nbrs = adj[u]
    if not nbrs:
        return 0, None
    best, arg = len(nbrs), None
    for w in sorted(nbrs):
        aw = adj[w]
        # deg of w inside N[u] is 1 (for u) plus common neighbours
        if len(aw) < len(nbrs):
            c = 1 + sum(1 for x in aw if x in nbrs)
        else:
            c = 1 + sum(1 for x in nbrs if x in aw)
        if c < best or arg is None and c == best:
            best, arg = c, w
    return best, arg


def mader_reduce(g: Graph, threshold: Optional[Fraction] = None) -> ReductionResult:
    """Contract/delete until every closed neighbourhood has min degree > τ.

    ``τ`` is half of ``threshold`` (default: d̄ of the input), frozen for
    the whole pass.  Isolated vertices are deleted first; otherwise the
    lowest-id violating ``u`` is contracted onto the minimum-degree vertex
    of ``G[N[u]]`` among ``N(u)`` (ties to the smallest id).  Every step
    keeps the average degree from dropping.
    """
    d = avg_degree(g) if threshold is None else Fraction(threshold)
    adj: Dict[int, set] = {v: set(ns) for v, ns in g.adjacency().items()}
    ops = []
    clean: set = set()
    while True:
        isolated = [v for v in adj if not adj[v]]
        if isolated:
            v = min(isolated)
            del adj[v]
            clean.discard(v)
            ops.append((DELETE, v))
            continue
        hit = None
        for u in sorted(adj):
            if u in clean:
                continue
            delta, w = _closed_nbhd_min(adj, u)
            if 2 * delta <= d:
                hit = (u, w)
                break
            clean.add(u)
        if hit is None:
            break
        u, w = hit
        keep, gone = min(u, w), max(u, w)
        touched = adj[u] | adj[w] | {u, w}
        for x in adj[gone]:
            adj[x].discard(gone)
            if x != keep:
                adj[x].add(keep)
                adj[keep].add(x)
        del adj[gone]
        clean -= touched
        ops.append((CONTRACT, u, w, keep))
    return ReductionResult(Graph._from_adj(adj), ContractionTrace(tuple(ops)), d)


def minimalize_vertices(g: Graph, t) -> Tuple[Graph, ContractionTrace]:
    """Delete single vertices (lowest id first) while d̄ stays ≥ t."""
    t = Fraction(t)
    if avg_degree(g) < t:
        raise PreconditionError(f"average degree {avg_degree(g)} is below t = {t}")
    adj: Dict[int, set] = {v: set(ns) for v, ns in g.adjacency().items()}
    m = g.num_edges()
    ops = []
    while len(adj) > 1:
        n = len(adj)
        for u in sorted(adj):
            if 2 * (m - len(adj[u])) >= t * (n - 1):
                break
        else:
            break
        m -= len(adj[u])
        for x in adj.pop(u):
            adj[x].discard(u)
        ops.append((DELETE, u))
    return Graph._from_adj(adj), ContractionTrace(tuple(ops))

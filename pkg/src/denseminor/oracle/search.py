"""Exhaustive minor and subgraph search on small hosts.

Models are enumerated as partitions into connected blocks.  Growing a
branch set by an adjacent unused vertex never destroys a model, so it is
enough to partition whole components: every component either hosts no
branch set or is split completely into connected blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from ..graph import Graph
from ..models import MinorModel
from .enumeration import to_masks


@dataclass(frozen=True)
class SearchResult:
    optimum: int
    witness: Union[MinorModel, frozenset, None]
    explored: int
    exhaustive: bool


class _Host:
    """Bitmask view of a graph."""

    def __init__(self, g: Graph):
        self.graph = g
        self.verts, self.masks = to_masks(g)
        self.n = len(self.verts)

    def ids(self, mask: int) -> frozenset:
        return frozenset(self.verts[i] for i in range(self.n) if mask >> i & 1)

    def nbhd(self, mask: int) -> int:
        out = 0
        m = mask
        while m:
            low = m & -m
            out |= self.masks[low.bit_length() - 1]
            m ^= low
        return out & ~mask

    def closure(self, start: int, within: int) -> int:
        comp = start
        frontier = start
        while frontier:
            frontier = self.nbhd(comp) & within & ~comp
            comp |= frontier
        return comp

    def components(self, within: int) -> List[int]:
        out = []
        rest = within
        while rest:
            c = self.closure(rest & -rest, within)
            out.append(c)
            rest &= ~c
        return out

    def is_connected(self, mask: int) -> bool:
        return mask == 0 or self.closure(mask & -mask, mask) == mask

    def connected_sets(self, v: int, within: int, max_size: int) -> Iterator[int]:
        """Connected subsets of ``within`` containing bit ``v``, each exactly once."""
        masks = self.masks

        def rec(s: int, size: int, frontier: int, banned: int):
            yield s
            if size == max_size:
                return
            cand = frontier & ~banned
            while cand:
                low = cand & -cand
                cand ^= low
                u = low.bit_length() - 1
                yield from rec(s | low, size + 1,
                               (frontier | masks[u]) & within & ~(s | low), banned)
                banned |= low

        yield from rec(v, 1, self.masks[v.bit_length() - 1] & within & ~v, 0)

    def partitions(self, within: int, j: int) -> Iterator[List[int]]:
        """Partitions of ``within`` into exactly ``j`` connected blocks."""
        total = within.bit_count()
        if j < 1 or total < j:
            return
        if len(self.components(within)) > j:
            return

        def rec(rest: int, j: int, blocks: List[int]):
            if j == 1:
                if self.is_connected(rest):
                    yield blocks + [rest]
                return
            left = rest.bit_count()
            for b in self.connected_sets(rest & -rest, rest, left - (j - 1)):
                r = rest & ~b
                if len(self.components(r)) > j - 1:
                    continue
                yield from rec(r, j - 1, blocks + [b])

        yield from rec(within, j, [])


def _count_pairs(host: _Host, blocks: Sequence[int]) -> int:
    nb = [host.nbhd(b) for b in blocks]
    return sum(1 for a, b in combinations(range(len(blocks)), 2) if nb[a] & blocks[b])


def _best_in(host: _Host, within: int, j: int, target: int, counter: List[int]) -> Tuple[int, Optional[List[int]]]:
    """Best pair count over connected j-partitions of ``within`` (stop at ``target``)."""
    cap = min(target, comb(j, 2))
    best, arg = -1, None
    if j < 1 or within.bit_count() < j or len(host.components(within)) > j:
        return best, arg

    # depth-first with incremental pair counts and a simple optimistic bound
    def rec(rest: int, left: int, blocks: List[int], nbs: List[int], got: int):
        nonlocal best, arg
        if best >= cap:
            return
        done = len(blocks)
        if got + left * done + comb(left, 2) <= best:
            return
        if left == 1:
            if not host.is_connected(rest):
                return
            counter[0] += 1
            total = got + sum(1 for x in nbs if x & rest)
            if total > best:
                best, arg = total, blocks + [rest]
            return
        size = rest.bit_count()
        for b in host.connected_sets(rest & -rest, rest, size - (left - 1)):
            r = rest & ~b
            if len(host.components(r)) > left - 1:
                continue
            gain = sum(1 for x in nbs if x & b)
            rec(r, left - 1, blocks + [b], nbs + [host.nbhd(b)], got + gain)
            if best >= cap:
                return

    rec(within, j, [], [], 0)
    return best, arg


def _model(host: _Host, blocks: Sequence[int]) -> MinorModel:
    return MinorModel(host.graph, {i: host.ids(b) for i, b in enumerate(blocks)})


def max_minor_edges(g: Graph, t: int, target: Optional[int] = None) -> SearchResult:
    """Most edges of a t-vertex minor of ``g``.

    With ``target`` the search stops once a model with that many edges is
    found; ``exhaustive`` is then False unless the optimum is certified
    anyway (e.g. it equals C(t, 2)).
    """
    n = g.num_vertices()
    if t < 1 or n < t:
        raise ValueError(f"need 1 <= t <= v(G), got t={t}, v={n}")
    host = _Host(g)
    full = comb(t, 2)
    goal = full if target is None else min(target, full)
    comps = host.components((1 << n) - 1)
    counter = [0]

    if len(comps) == 1:
        best, blocks = _best_in(host, comps[0], t, goal, counter)
        exhaustive = best == full or best < goal
        return SearchResult(best, _model(host, blocks), counter[0], exhaustive)

    # knapsack over components: each hosts j >= 0 blocks
    tables = []
    for c in comps:
        row: Dict[int, Tuple[int, List[int]]] = {0: (0, [])}
        for j in range(1, min(c.bit_count(), t) + 1):
            val, blocks = _best_in(host, c, j, comb(j, 2), counter)
            if blocks is not None:
                row[j] = (val, blocks)
        tables.append(row)
    dp: Dict[int, Tuple[int, List[int]]] = {0: (0, [])}
    for row in tables:
        nxt: Dict[int, Tuple[int, List[int]]] = {}
        for used, (val, blocks) in dp.items():
            for j, (v2, b2) in row.items():
                if used + j > t:
                    continue
                cand = (val + v2, blocks + b2)
                if used + j not in nxt or cand[0] > nxt[used + j][0]:
                    nxt[used + j] = cand
        dp = nxt
    best, blocks = dp[t]
    return SearchResult(best, _model(host, blocks), counter[0], True)


def max_subgraph_edges(g: Graph, t: int, target: Optional[int] = None) -> SearchResult:
    """Most edges induced by a t-subset of ``g``."""
    n = g.num_vertices()
    if t < 0 or n < t:
        raise ValueError(f"need 0 <= t <= v(G), got t={t}, v={n}")
    host = _Host(g)
    masks = host.masks
    full = comb(t, 2)
    goal = full if target is None else min(target, full)
    best, arg, explored = -1, None, 0
    for combo in combinations(range(n), t):
        explored += 1
        s = 0
        for i in combo:
            s |= 1 << i
        e = sum((masks[i] & s).bit_count() for i in combo) // 2
        if e > best:
            best, arg = e, s
            if best >= goal:
                break
    exhaustive = best == full or best < goal
    return SearchResult(best, host.ids(arg), explored, exhaustive)


# -- embeddings ----------------------------------------------------------------

def _embed(pattern: Sequence[int], target: Sequence[int]) -> Optional[List[int]]:
    """Injective map of pattern vertices into target preserving edges (non-induced)."""
    h, n = len(pattern), len(target)
    if h > n:
        return None
    pdeg = [m.bit_count() for m in pattern]
    tdeg = [m.bit_count() for m in target]
    order: List[int] = []
    placed = 0
    while len(order) < h:
        # next: most constrained (adjacent to placed), then highest degree
        best = max((v for v in range(h) if not placed >> v & 1),
                   key=lambda v: ((pattern[v] & placed).bit_count(), pdeg[v], -v))
        order.append(best)
        placed |= 1 << best
    img = [-1] * h
    used = [False] * n

    def rec(i: int) -> bool:
        if i == h:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or tdeg[w] < pdeg[v]:
                continue
            ok = True
            for u in order[:i]:
                if pattern[v] >> u & 1 and not target[w] >> img[u] & 1:
                    ok = False
                    break
            if not ok:
                continue
            img[v] = w
            used[w] = True
            if rec(i + 1):
                return True
            used[w] = False
        img[v] = -1
        return False

    return img if rec(0) else None


def has_subgraph(g: Graph, h: Graph) -> Tuple[bool, Optional[Dict[int, int]]]:
    """Is ``h`` isomorphic to a (not necessarily induced) subgraph of ``g``?"""
    gv, gm = to_masks(g)
    hv, hm = to_masks(h)
    img = _embed(hm, gm)
    if img is None:
        return False, None
    return True, {hv[i]: gv[w] for i, w in enumerate(img)}


def _distributions(sizes: List[int], total: int) -> Iterator[List[int]]:
    if not sizes:
        if total == 0:
            yield []
        return
    rest_cap = sum(sizes[1:])
    for j in range(max(0, total - rest_cap), min(sizes[0], total) + 1):
        for tail in _distributions(sizes[1:], total - j):
            yield [j] + tail


def _covering_partitions(host: _Host, j: int) -> Iterator[List[int]]:
    comps = host.components((1 << host.n) - 1)
    sizes = [c.bit_count() for c in comps]
    for dist in _distributions(sizes, j):

        def rec(i: int, acc: List[int]):
            if i == len(comps):
                yield acc
                return
            if dist[i] == 0:
                yield from rec(i + 1, acc)
                return
            for part in host.partitions(comps[i], dist[i]):
                yield from rec(i + 1, acc + part)

        yield from rec(0, [])


def has_minor(g: Graph, h: Graph) -> Tuple[bool, Optional[MinorModel]]:
    """Exhaustive minor test; returns a model keyed by ``h``'s vertices."""
    hv, hm = to_masks(h)
    k = len(hv)
    if k < 1:
        raise ValueError("pattern must have at least one vertex")
    if k > g.num_vertices():
        return False, None
    host = _Host(g)
    h_edges = h.num_edges()
    h_degs = sorted((m.bit_count() for m in hm), reverse=True)
    seen = set()
    for blocks in _covering_partitions(host, k):
        nbs = [host.nbhd(b) for b in blocks]
        q = [sum(1 << y for y in range(k) if nbs[x] & blocks[y]) for x in range(k)]
        key = tuple(q)
        if key in seen:
            continue
        seen.add(key)
        if sum(m.bit_count() for m in q) // 2 < h_edges:
            continue
        if any(a < b for a, b in zip(sorted((m.bit_count() for m in q), reverse=True), h_degs)):
            continue
        img = _embed(hm, q)
        if img is not None:
            return True, MinorModel(g, {hv[i]: host.ids(blocks[img[i]]) for i in range(k)})
    return False, None


def has_clique_minor(g: Graph, t: int) -> bool:
    return t <= g.num_vertices() and max_minor_edges(g, t, target=comb(t, 2)).optimum == comb(t, 2)

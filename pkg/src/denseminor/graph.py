"""Immutable simple graphs with stable integer vertex ids."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised on invalid graph construction or an illegal minor operation."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """A finite simple undirected graph.

    Vertices are integers that stay fixed under deletion and contraction;
    nothing is ever renumbered implicitly.  Instances are immutable, every
    operation returns a new graph.
    """

    __slots__ = ("_adj", "_vertices", "_m")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Iterable[int]] = ()):
        adj: Dict[int, set] = {int(v): set() for v in vertices}
        for e in edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._init(adj)

    def _init(self, adj: Dict[int, set]) -> None:
        self._adj: Dict[int, FrozenSet[int]] = {v: frozenset(adj[v]) for v in sorted(adj)}
        self._vertices: Tuple[int, ...] = tuple(self._adj)
        self._m = sum(len(n) for n in self._adj.values()) // 2

    @classmethod
    def _from_adj(cls, adj: Dict[int, set]) -> "Graph":
        g = cls.__new__(cls)
        g._init(adj)
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: Optional[int] = None) -> "Graph":
        """Build a graph from an edge list; vertices are ``0..n-1`` or the endpoints."""
        edges = [tuple(e) for e in edges]
        if n is None:
            verts = {x for e in edges for x in e}
        else:
            verts = range(n)
        return cls(verts, edges)

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> List[Edge]:
        return [(u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v]

    def num_vertices(self) -> int:
        return len(self._vertices)

    def num_edges(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(tuple(self._adj.items()))

    def __repr__(self) -> str:
        return f"Graph(v={len(self._vertices)}, e={self._m})"

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, u: int) -> FrozenSet[int]:
        try:
            return self._adj[u]
        except KeyError:
            raise GraphError(f"unknown vertex {u}") from None

    def closed_neighbors(self, u: int) -> FrozenSet[int]:
        return self.neighbors(u) | {u}

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def common_neighbors(self, u: int, v: int) -> int:
        """|N(u) ∩ N(v)|, in O(min(deg u, deg v))."""
        a, b = self.neighbors(u), self.neighbors(v)
        if len(a) > len(b):
            a, b = b, a
        return sum(1 for x in a if x in b)

    def min_degree(self) -> int:
        """Minimum degree; 0 for the null graph."""
        return min((len(n) for n in self._adj.values()), default=0)

    def avg_degree(self) -> Fraction:
        return avg_degree(self)

    def degrees(self) -> Dict[int, int]:
        return {v: len(n) for v, n in self._adj.items()}

    def adjacency(self) -> Dict[int, FrozenSet[int]]:
        """Read-only view of the adjacency map."""
        return dict(self._adj)

    # -- derived graphs ----------------------------------------------------

    def induced(self, xs: Iterable[int]) -> "Graph":
        return induced(self, xs)

    def delete(self, xs: Iterable[int]) -> "Graph":
        """G - X."""
        xs = set(xs)
        unknown = xs - self._adj.keys()
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)}")
        return induced(self, [v for v in self._vertices if v not in xs])

    def contract(self, u: int, v: int) -> "Graph":
        return contract(self, u, v)

    def relabel(self, mapping: Dict[int, int]) -> "Graph":
        """Rename vertices through an injective ``mapping``."""
        if len(set(mapping[v] for v in self._vertices)) != len(self._vertices):
            raise GraphError("relabel mapping is not injective")
        return Graph((mapping[v] for v in self._vertices),
                     ((mapping[a], mapping[b]) for a, b in self.edges))

    def compact(self) -> "Graph":
        """Relabel vertices to ``0..n-1`` preserving order."""
        return self.relabel({v: i for i, v in enumerate(self._vertices)})

    def components(self) -> List[FrozenSet[int]]:
        """Connected components in order of their smallest vertex."""
        seen: set = set()
        out = []
        for s in self._vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self._adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def avg_degree(g: Graph) -> Fraction:
    """Exact average degree 2e/v; zero for the null graph."""
    n = g.num_vertices()
    if n == 0:
        return Fraction(0)
    return Fraction(2 * g.num_edges(), n)


def induced(g: Graph, xs: Iterable[int]) -> Graph:
    """Subgraph of ``g`` induced by ``xs`` (ids kept)."""
    keep = set(xs)
    adj = g._adj
    unknown = keep - adj.keys()
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown)}")
    return Graph._from_adj({v: adj[v] & keep for v in keep})


def contract(g: Graph, u: int, v: int) -> Graph:
    """G/uv; the survivor keeps the smaller id, loops and parallels are dropped."""
    if not g.has_edge(u, v):
        raise GraphError(f"cannot contract non-edge ({u}, {v})")
    keep, gone = (u, v) if u < v else (v, u)
    adj = {x: set(ns) for x, ns in g._adj.items() if x != gone}
    merged = (g._adj[keep] | g._adj[gone]) - {keep, gone}
    adj[keep] = merged
    for x in g._adj[gone]:
        if x != keep:
            adj[x].discard(gone)
            adj[x].add(keep)
    return Graph._from_adj(adj)


def complete_graph(n: int) -> Graph:
    return Graph(range(n), ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(range(n))


def path_graph(n: int) -> Graph:
    return Graph(range(n), ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(range(n), ((i, (i + 1) % n) for i in range(n)))


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, spokes i--i+5, inner pentagram 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(range(10), outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union with vertices shifted to consecutive blocks."""
    verts: List[int] = []
    edges: List[Edge] = []
    offset = 0
    for g in graphs:
        cg = g.compact()
        verts.extend(v + offset for v in cg.vertices)
        edges.extend((a + offset, b + offset) for a, b in cg.edges)
        offset += cg.num_vertices()
    return Graph(verts, edges)

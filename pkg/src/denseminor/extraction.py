"""Deterministic extraction of a dense t-vertex minor from a graph with d̄ ≥ t.

The random-subset arguments behind the extraction are replaced by greedy
derandomizations (minimum-degree peeling and conditional expectations), so
the whole pipeline is reproducible and every output carries a checkable
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import FrozenSet, Iterable, List, Optional, Set

from .graph import Graph, avg_degree
from .models import DELETE, ContractionTrace, MinorModel, model_edge_count, verify_model
from .reduction import PreconditionError, mader_reduce, minimalize_vertices

SQRT2_UNDER = Fraction(1414213, 1000000)

CASE1 = "Case1"
CASE2 = "Case2"
CASE3 = "Case3"


class RestartNeeded(Exception):
    """Deleting ``witness`` keeps the average degree at least t; retry on G - witness."""

    def __init__(self, witness: Iterable[int], reason: str = ""):
        self.witness = frozenset(witness)
        super().__init__(reason or f"restart on G - {sorted(self.witness)}")


class NoSeedError(PreconditionError):
    """No vertex has degree below βt - 1, so no seed can be grown."""


class ExtractionError(RuntimeError):
    def __init__(self, msg: str, case_path: str):
        super().__init__(f"{msg} [path: {case_path}]")
        self.case_path = case_path


@dataclass(frozen=True)
class ExtractionParams:
    t: int
    alpha: Fraction = Fraction(4, 5)
    beta: Fraction = Fraction(6, 5)
    nu: Fraction = Fraction(6, 5)

    def __post_init__(self):
        for name in ("alpha", "beta", "nu"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.t < 1:
            raise ValueError("t must be a positive integer")
        if not (Fraction(1, 2) <= self.alpha < self.beta):
            raise ValueError("need 1/2 <= alpha < beta")

    @property
    def is_default(self) -> bool:
        return (self.alpha, self.beta, self.nu) == (Fraction(4, 5), Fraction(6, 5), Fraction(6, 5))


@dataclass(frozen=True)
class SeedOutcome:
    case: str
    X: FrozenSet[int]
    Y: Optional[FrozenSet[int]] = None


@dataclass(frozen=True)
class DensityCertificate:
    t: int
    model: MinorModel
    achieved_edges: int
    guaranteed_bound: Fraction
    case_path: str
    restarts: int = 0


# -- small helpers -----------------------------------------------------------

def _edges_within(g: Graph, xs) -> int:
    xs = set(xs)
    return sum(1 for x in xs for y in g.neighbors(x) if y in xs) // 2


def _min_deg_within(g: Graph, xs) -> int:
    xs = set(xs)
    return min((sum(1 for y in g.neighbors(x) if y in xs) for x in xs), default=0)


def sqrt2_lower(t: int) -> Fraction:
    """A rational strictly below √2 - 1 - 24/t."""
    if t < 1:
        raise ValueError("t must be positive")
    return SQRT2_UNDER - 1 - Fraction(24, t)


def certified_floor(t: int) -> Fraction:
    """Edges every certificate must reach: max(0, sqrt2_lower(t))·C(t,2)."""
    return max(Fraction(0), sqrt2_lower(t)) * comb(t, 2)


def extend_bound(x_size: int, y_size: int, t: int) -> Fraction:
    """(½(x + (1-x)²/y) - 1/t)·C(t,2) with x = |X|/t, y = |Y|/t."""
    x = Fraction(x_size, t)
    if x_size >= t:
        return (x / 2 - Fraction(1, t)) * comb(t, 2)
    y = Fraction(y_size, t)
    return (Fraction(1, 2) * (x + (1 - x) ** 2 / y) - Fraction(1, t)) * comb(t, 2)


# -- dense t-sets --------------------------------------------------------------

def densify_to_t(g: Graph, t: int) -> FrozenSet[int]:
    """Peel minimum-degree vertices (smallest id on ties) until ``t`` remain.

    Each deletion keeps e' ≥ e·(v-2)/v, which telescopes to
    e(G[Z]) ≥ d̄(G)/(v-1)·C(t,2).
    """
    n = g.num_vertices()
    if t < 1 or n < t:
        raise PreconditionError(f"need 1 <= t <= v(G), got t={t}, v={n}")
    adj = {v: set(ns) for v, ns in g.adjacency().items()}
    m = g.num_edges()
    while len(adj) > t:
        v = len(adj)
        u = min(adj, key=lambda x: (len(adj[x]), x))
        m_next = m - len(adj[u])
        assert m_next * v >= m * (v - 2), "peeling lost more than the average share"
        for x in adj.pop(u):
            adj[x].discard(u)
        m = m_next
    return frozenset(adj)


def _extend_score(base: int, exs: int, ess: int, size: int, m: int) -> Fraction:
    # expected edges of X ∪ (uniform m-subset of S) given e(X,S)=exs, e(S,S)=ess
    if size == 0:
        return Fraction(base)
    p1 = Fraction(m, size)
    p2 = Fraction(m * (m - 1), size * (size - 1)) if size > 1 else Fraction(0)
    return base + p1 * exs + p2 * ess


def extend_to_t(g: Graph, X: Iterable[int], Y: Iterable[int], t: int,
                check: bool = True) -> FrozenSet[int]:
    """Complete ``X`` to ``t`` vertices with vertices of ``Y``.

    Conditional expectations: keep a pool S = Y \\ X scored by the expected
    edge count of X plus a uniform (t-|X|)-subset of S, and drop the vertex
    whose removal keeps the score highest until |S| = t - |X|.  The score
    never decreases, so the result beats the expectation of the random
    completion.
    """
    X = frozenset(X)
    Y = frozenset(Y)
    if not (X | Y) <= set(g.vertices):
        raise PreconditionError("X and Y must be vertex subsets of G")
    if len(X) > t:
        raise PreconditionError("clause |X| <= t violated")
    if len(X | Y) < t:
        raise PreconditionError("clause |X ∪ Y| >= t violated")
    if X and 2 * _min_deg_within(g, X) < t:
        raise PreconditionError("clause δ(G[X]) >= t/2 violated")
    if Y and 2 * _min_deg_within(g, Y) < t:
        raise PreconditionError("clause δ(G[Y]) >= t/2 violated")
    if len(X) == t:
        return X

    m = t - len(X)
    S = set(Y - X)
    base = _edges_within(g, X)
    to_x = {w: sum(1 for y in g.neighbors(w) if y in X) for w in S}
    to_s = {w: sum(1 for y in g.neighbors(w) if y in S) for w in S}
    exs = sum(to_x.values())
    ess = sum(to_s.values()) // 2
    score = _extend_score(base, exs, ess, len(S), m)
    while len(S) > m:
        size = len(S) - 1
        p1 = Fraction(m, size)
        p2 = Fraction(m * (m - 1), size * (size - 1)) if size > 1 else Fraction(0)
        # removing w costs p1·to_x[w] + p2·to_s[w]
        w = min(S, key=lambda x: (p1 * to_x[x] + p2 * to_s[x], x))
        S.remove(w)
        exs -= to_x.pop(w)
        ess -= to_s.pop(w)
        for y in g.neighbors(w):
            if y in S:
                to_s[y] -= 1
        new_score = _extend_score(base, exs, ess, len(S), m)
        if check:
            assert new_score >= score, "conditional expectation decreased"
        score = new_score
    Z = X | S
    if check:
        assert _edges_within(g, Z) == score
    return frozenset(Z)


# -- seeds -----------------------------------------------------------------

def _require_neighbourhood_density(g: Graph, t: int) -> None:
    for u in g.vertices:
        nu = g.closed_neighbors(u)
        if 2 * _min_deg_within(g, nu) < t:
            raise PreconditionError(f"δ(G[N[{u}]]) < t/2")


def find_dense_seed(g: Graph, params: ExtractionParams) -> SeedOutcome:
    """Three-way seed search over unions of closed neighbourhoods.

    Case1: one set with αt ≤ |X| ≤ βt.  Case2: a small set X outside of
    which every degree exceeds βt - 1.  Case3: two small sets whose union
    overshoots βt.
    """
    t, a, b = params.t, params.alpha, params.beta
    _require_neighbourhood_density(g, t)
    lo, hi = a * t - 1, b * t - 1
    for u in g.vertices:
        if lo <= g.degree(u) <= hi:
            return SeedOutcome(CASE1, g.closed_neighbors(u))
    low = [u for u in g.vertices if g.degree(u) < lo]
    if not low:
        raise NoSeedError("every degree exceeds βt - 1")
    A: Set[int] = set()
    for u in low:
        A |= g.closed_neighbors(u)
    if len(A) < a * t:
        return SeedOutcome(CASE2, frozenset(A))
    B: Set[int] = set()
    for x in low:
        nx = g.closed_neighbors(x)
        if nx <= B:
            continue
        if len(B | nx) >= a * t:
            if len(B | nx) <= b * t:
                return SeedOutcome(CASE1, frozenset(B | nx))
            return SeedOutcome(CASE3, frozenset(B), nx)
        B |= nx
    raise AssertionError("union of low neighbourhoods never reached αt")


def check_seed(g: Graph, seed: SeedOutcome, params: ExtractionParams) -> Optional[str]:
    """Return the violated clause of the seed's case invariant, or None."""
    t, a, b = params.t, params.alpha, params.beta
    X = seed.X
    if 2 * _min_deg_within(g, X) < t:
        return "δ(G[X]) >= t/2"
    if seed.case == CASE1:
        if not (a * t <= len(X) <= b * t):
            return "αt <= |X| <= βt"
    elif seed.case == CASE2:
        if not (Fraction(t, 2) <= len(X) < a * t):
            return "t/2 <= |X| < αt"
        for u in g.vertices:
            if u not in X and not g.degree(u) > b * t - 1:
                return "deg(u) > βt - 1 off X"
    elif seed.case == CASE3:
        Y = seed.Y or frozenset()
        if 2 * _min_deg_within(g, Y) < t:
            return "δ(G[Y]) >= t/2"
        if not (len(X) < a * t and len(Y) < a * t):
            return "|X|, |Y| < αt"
        if not len(X | Y) > b * t:
            return "|X ∪ Y| > βt"
    else:
        return "unknown case"
    return None


def case2_bound_vertices(x_size: int, lam: Fraction, t: int) -> Fraction:
    """Upper bound (λ - 3/4)|X| / (λ - 1 - 3/t) on v(G)."""
    return (lam - Fraction(3, 4)) * x_size / (lam - 1 - Fraction(3, t))


def case2_bound_edges(x_size: int, lam: Fraction, t: int) -> Fraction:
    return (lam - 1 - Fraction(3, t)) * t / ((lam - Fraction(3, 4)) * x_size) * comb(t, 2)


def case2_extract(g: Graph, X: Iterable[int], lam, t: int) -> FrozenSet[int]:
    """Dense t-set when every vertex outside ``X`` has degree > λt - 1.

    Under the premises the graph itself is small, so peeling the whole
    graph works.  If the size bound fails the graph is not minimal enough;
    :class:`RestartNeeded` then carries a set whose deletion keeps d̄ ≥ t.
    """
    lam = Fraction(lam)
    X = frozenset(X)
    n = g.num_vertices()
    if lam <= 1 + Fraction(3, t):
        raise PreconditionError("need λ > 1 + 3/t")
    if avg_degree(g) < t:
        raise PreconditionError("need d̄(G) >= t")
    if not X or len(X) >= n or not X <= set(g.vertices):
        raise PreconditionError("need ∅ ≠ X ⊊ V(G)")
    if 2 * _min_deg_within(g, X) < t:
        raise PreconditionError("need δ(G[X]) >= t/2")
    for u in g.vertices:
        if u not in X and not g.degree(u) > lam * t - 1:
            raise PreconditionError(f"deg({u}) <= λt - 1 outside X")
    m = g.num_edges()
    for u in g.vertices:
        if 2 * (m - g.degree(u)) >= t * (n - 1):
            raise PreconditionError(f"d̄(G - {u}) >= t: not vertex-minimal")

    if not n < case2_bound_vertices(len(X), lam, t):
        rest = g.delete(X)
        if avg_degree(rest) >= t:
            raise RestartNeeded(X, "d̄(G - X) >= t")
        raise AssertionError("vertex bound failed although d̄(G - X) < t")
    Z = densify_to_t(g, t)
    assert _edges_within(g, Z) >= case2_bound_edges(len(X), lam, t)
    return Z


# -- orchestration -----------------------------------------------------------

def _grow_maximal(g: Graph, X: FrozenSet[int], t: int) -> FrozenSet[int]:
    X = set(X)
    grown = True
    while grown:
        grown = False
        for u in g.vertices:
            if u in X:
                continue
            nu = g.closed_neighbors(u)
            if len(X | nu) <= t and not nu <= X:
                X |= nu
                grown = True
                break
    return frozenset(X)


@dataclass
class _Run:
    t: int
    params: ExtractionParams
    path: List[str] = field(default_factory=list)

    def floor(self, edges: int, value: Fraction, label: str) -> None:
        if self.params.is_default and edges < value:
            raise ExtractionError(f"{label} floor {value} missed with {edges} edges",
                                  " > ".join(self.path))


def _normalize(g: Graph, t: int):
    """Alternate vertex trimming and the Mader pass until neither changes."""
    ops: list = []
    while True:
        g, tr = minimalize_vertices(g, t)
        ops.extend(tr.ops)
        res = mader_reduce(g)
        ops.extend(res.trace.ops)
        if not res.changed:
            return g, ops
        g = res.reduced


def _select(h: Graph, run: _Run) -> FrozenSet[int]:
    t, p = run.t, run.params
    C = comb(t, 2)
    try:
        seed = find_dense_seed(h, p)
    except NoSeedError:
        run.path.append("no-seed:densify")
        return densify_to_t(h, t)
    bad = check_seed(h, seed, p)
    if bad is not None:
        raise ExtractionError(f"seed invariant violated: {bad}", " > ".join(run.path))
    run.path.append(seed.case)

    if seed.case == CASE1 and len(seed.X) >= t:
        run.path.append("densify")
        Z = densify_to_t(h.induced(seed.X), t)
        run.floor(_edges_within(h, Z), Fraction(5, 12) * C, "Case1 densify")
        return Z

    if seed.case == CASE1:
        X = _grow_maximal(h, seed.X, t)
        for u in h.vertices:
            if u not in X and h.degree(u) <= p.nu * t - 1:
                run.path.append(f"extend@{u}")
                Y = h.closed_neighbors(u)
                Z = extend_to_t(h, X, Y, t)
                got = _edges_within(h, Z)
                if got < extend_bound(len(X), len(Y), t):
                    raise ExtractionError("extension bound missed", " > ".join(run.path))
                run.floor(got, (Fraction(5, 12) - Fraction(1, t)) * C, "Case1 extend")
                return Z
        return _via_large_degrees(h, X, p.nu, run, Fraction(4, 9) - Fraction(12, t))

    if seed.case == CASE2:
        return _via_large_degrees(h, seed.X, p.beta, run, Fraction(4, 9) - Fraction(24, t))

    X, Y = seed.X, seed.Y
    if len(Y) > len(X):
        X, Y = Y, X
    run.path.append("extend")
    Z = extend_to_t(h, X, Y, t)
    got = _edges_within(h, Z)
    if got < extend_bound(len(X), len(Y), t):
        raise ExtractionError("extension bound missed", " > ".join(run.path))
    run.floor(got, (SQRT2_UNDER - 1 - Fraction(1, t)) * C, "Case3")
    return Z


def _via_large_degrees(h: Graph, X, lam: Fraction, run: _Run, floor: Fraction) -> FrozenSet[int]:
    t = run.t
    if lam <= 1 + Fraction(3, t):
        run.path.append("small-t:densify")
        return densify_to_t(h, t)
    run.path.append("large-degree")
    Z = case2_extract(h, X, lam, t)
    run.floor(_edges_within(h, Z), floor * comb(t, 2), "large-degree")
    return Z


def extract_dense_minor(g: Graph, t: int, params: Optional[ExtractionParams] = None) -> DensityCertificate:
    """Find a t-vertex minor of ``g`` with a certified number of edges."""
    if params is None:
        params = ExtractionParams(t)
    elif params.t != t:
        raise ValueError("params.t differs from t")
    if avg_degree(g) < t:
        raise PreconditionError(f"average degree {avg_degree(g)} < t = {t}")

    run = _Run(t, params)
    ops: list = []
    h = g
    restarts = 0
    while True:
        h, more = _normalize(h, t)
        ops.extend(more)
        try:
            Z = _select(h, run)
            break
        except RestartNeeded as r:
            restarts += 1
            run.path.append(f"restart(-{len(r.witness)})")
            if restarts > g.num_vertices():
                raise ExtractionError("restart loop did not terminate", " > ".join(run.path))
            ops.extend((DELETE, v) for v in sorted(r.witness))
            h = h.delete(r.witness)

    path = " > ".join(run.path)
    reduced, model = ContractionTrace(tuple(ops)).replay(g)
    if reduced != h:
        raise ExtractionError("trace replay mismatch", path)
    model = model.restrict(sorted(Z))
    if not verify_model(model):
        raise ExtractionError("model failed verification", path)
    achieved = model_edge_count(model)
    bound = certified_floor(t)
    if achieved != _edges_within(h, Z):
        raise ExtractionError("model edge count differs from reduced graph", path)
    if achieved < bound:
        raise ExtractionError(f"achieved {achieved} < bound {bound}", path)
    return DensityCertificate(t, model, achieved, bound, path, restarts)


def certificate_to_json(cert: DensityCertificate) -> dict:
    from .formats import model_to_json

    return {
        "t": cert.t,
        "bound_num": cert.guaranteed_bound.numerator,
        "bound_den": cert.guaranteed_bound.denominator,
        "achieved": cert.achieved_edges,
        "case_path": cert.case_path,
        "model": model_to_json(cert.model),
    }

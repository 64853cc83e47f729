"""Acceptance criteria, each at its stated tolerance and time limit."""

import random
import time
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from denseminor import (CockadeSpec, Graph, SGraphSpec, avg_degree, cockade, complete_graph,
                        densify_to_t, extend_to_t, extract_dense_minor, f_bound, k5_minus,
                        line_graph_complete, mader_reduce, path_power, petersen_graph, s_graph,
                        sqrt2_lower)
from denseminor.cli import check_certificate
from denseminor.constructions import CHAIN, STAR, cockade_edge_count
from denseminor.extraction import certificate_to_json, extend_bound
from denseminor.oracle import (max_minor_edges, max_subgraph_edges, verify_6v12e_report,
                               verify_extremal11, verify_lemma32, verify_small_theorem)
from denseminor.oracle.enumeration import count_labeled

criterion = pytest.mark.criterion


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, limit {seconds} s"


def closed_min_degree(g, u):
    nb = g.closed_neighbors(u)
    return min(len(g.neighbors(x) & nb) for x in nb)


def random_graph(n, p, rng):
    return Graph(range(n), [e for e in combinations(range(n), 2) if rng.random() < p])


def random_dense(n, t, rng):
    """Random graph on n vertices topped up with random edges until d̄ ≥ t."""
    pairs = list(combinations(range(n), 2))
    p = min(1.0, t / (n - 1) * (1 + rng.random()))
    chosen = {e for e in pairs if rng.random() < p}
    need = -(-t * n // 2)
    if len(chosen) < need:
        rest = [e for e in pairs if e not in chosen]
        rng.shuffle(rest)
        chosen.update(rest[:need - len(chosen)])
    return Graph(range(n), chosen)


@criterion(1, "f_bound exactness")
def test_f_bound_exact():
    with within(0.001):
        values = (f_bound(2, 1, 4), f_bound(2, 2, 5))
    assert values == (5, 8)


@criterion(2, "S_{2,4,1} and S_{2,4,2} witnesses at t = 4, 5")
@pytest.mark.parametrize("k,r,s,t,expected", [(2, 4, 1, 4, 5), (2, 4, 2, 5, 8)])
def test_small_witnesses(k, r, s, t, expected):
    g = s_graph(SGraphSpec(k, r, s))
    with within(10):
        sub = max_subgraph_edges(g, t)
        mi = max_minor_edges(g, t)
    assert sub.exhaustive and mi.exhaustive
    assert sub.optimum == mi.optimum == expected


@criterion(3, "(K5-,2)-cockade on 8 vertices has max 6-vertex minor 11")
def test_cockade_witness():
    g = cockade(CockadeSpec(k5_minus(), 2, 2))
    assert g.num_vertices() == 8
    with within(60):
        res = max_minor_edges(g, 6)
    assert res.exhaustive and res.optimum == 11


@criterion(4, "small-t lower-bound sweep over labeled graphs")
def test_small_t_sweep():
    total = 0
    with within(30 * 60):
        for t, n_max in [(2, 7), (3, 7), (4, 7), (5, 8), (6, 8)]:
            rep = verify_small_theorem(t, n_max, labeled=True)
            expected = sum(count_labeled(n, lambda e, n=n: 2 * e >= (t - 1) * n)
                           for n in range(t, n_max + 1))
            assert rep.checked == expected
            assert rep.violations == [], (t, rep.violations[:3])
            total += rep.checked
    assert total == 86940497


@criterion(5, "extremal 11-edge claim on labeled graphs up to 7 vertices")
def test_extremal11():
    with within(15 * 60):
        rep = verify_extremal11(7, labeled=True)
    assert rep.violations == []
    assert rep.checked >= count_labeled(7, lambda e: e >= 14) == 198440


@criterion(6, "6-vertex graphs with >= 12 edges are 3-connected or contain K5")
def test_6v12e():
    with within(10):
        rep = verify_6v12e_report(labeled=True)
    assert rep.checked == 576 and rep.ok


@criterion(7, "contraction pass invariants on 1000 random graphs")
def test_mader_invariants():
    rng = random.Random(7)
    with within(120):
        for _ in range(1000):
            g = random_graph(rng.randint(1, 60), rng.choice([0.05, 0.1, 0.2, 0.4, 0.7, 0.9]) * rng.random() * 1.1, rng)
            res = mader_reduce(g)
            h = res.reduced
            d = avg_degree(g)
            assert res.threshold == d
            assert avg_degree(h) >= d
            assert all(2 * closed_min_degree(h, u) > d for u in h.vertices)
            assert res.trace.replay(g)[0] == h


def extension_instance(rng):
    t = rng.randint(4, 30)
    least = (t + 1) // 2 + 1  # smallest part whose vertices can reach degree t/2 inside it
    xs = rng.randint(least, t)
    ys = rng.randint(max(least, t - xs), t + 12)
    overlap = rng.randint(0, min(xs, ys) // 3) if rng.random() < 0.3 else 0
    X = list(range(xs))
    Y = list(range(xs - overlap, xs - overlap + ys))
    n = xs - overlap + ys
    p_in, p_cross = rng.uniform(0.5, 1.0), rng.uniform(0.0, 0.8)
    adj = {v: set() for v in range(n)}

    def add(a, b):
        adj[a].add(b)
        adj[b].add(a)

    for a, b in combinations(range(n), 2):
        inside = (a in X and b in X) or (a in Y and b in Y)
        if rng.random() < (p_in if inside else p_cross):
            add(a, b)
    for part in (set(X), set(Y)):
        for v in sorted(part):
            while 2 * len(adj[v] & part) < t:
                add(v, rng.choice(sorted(part - adj[v] - {v})))
    g = Graph(range(n), [(a, b) for a in adj for b in adj[a] if a < b])
    return g, X, Y, t


@criterion(8, "densify and extend floors on 1000 random instances")
def test_derandomization_floors():
    rng = random.Random(8)
    with within(120):
        for _ in range(1000):
            g = random_graph(rng.randint(2, 50), rng.random(), rng)
            t = rng.randint(1, g.num_vertices())
            z = densify_to_t(g, t)
            got = g.induced(z).num_edges()
            assert len(z) == t
            assert got >= avg_degree(g) / g.num_vertices() * comb(t, 2)

            g, X, Y, t = extension_instance(rng)
            z = extend_to_t(g, X, Y, t)
            assert len(z) == t and set(X) <= z <= set(X) | set(Y)
            x, y = Fraction(len(X), t), Fraction(len(set(Y)), t)
            floor = (Fraction(1, 2) * (x + (1 - x) ** 2 / y) - Fraction(1, t)) * comb(t, 2)
            assert floor == extend_bound(len(X), len(set(Y)), t) or len(X) == t
            assert g.induced(z).num_edges() >= floor


@criterion(9, "extraction pipeline end to end for t in {10, 30, 60}")
def test_pipeline():
    rng = random.Random(9)
    with within(10 * 60):
        for t in (10, 30, 60):
            floor = max(Fraction(0), sqrt2_lower(t)) * comb(t, 2)
            for _ in range(200):
                g = random_dense(rng.randint(t + 2, 3 * t + 20), t, rng)
                assert avg_degree(g) >= t
                cert = certificate_to_json(extract_dense_minor(g, t))
                ok, reason = check_certificate(g, cert)
                assert ok, reason
                assert cert["achieved"] >= floor


@criterion(10, "minor equals subgraph containment in S_{2,2,2} and S_{2,3,2}")
def test_minor_subgraph_equivalence():
    with within(5 * 60):
        for spec in (SGraphSpec(2, 2, 2), SGraphSpec(2, 3, 2)):
            rep = verify_lemma32(spec, 5)
            assert rep.checked == 1 + 2 + 4 + 11 + 34
            assert rep.violations == [], spec


@criterion(11, "construction edge-count formulas")
def test_construction_formulas():
    with within(10):
        for k in range(1, 10):
            for s in range(1, 10):
                for r in range(1, 10):
                    if k + r * s > 10:
                        continue
                    g = s_graph(SGraphSpec(k, r, s))
                    assert g.num_edges() == comb(k, 2) + r * comb(s, 2) + k * r * s
        for n in range(2, 13):
            for k in range(1, n):
                assert path_power(n, k).num_edges() == comb(k, 2) + k * (n - k)
        for base in (complete_graph(4), complete_graph(5), k5_minus(), petersen_graph()):
            for k in (1, 2):
                for copies in range(1, 5):
                    for policy in (STAR, CHAIN):
                        g = cockade(CockadeSpec(base, k, copies, policy))
                        law = cockade_edge_count(base.num_vertices(), base.num_edges(), k, g.num_vertices())
                        assert g.num_edges() == law


@criterion(12, "line graph of K5 has no 6-vertex subgraph with 15 edges")
def test_line_graph_k5():
    g = line_graph_complete(5)
    with within(60):
        res = max_subgraph_edges(g, 6)
    assert res.exhaustive
    assert res.optimum == 12 < comb(6, 2)

import pytest

from denseminor import SGraphSpec, complete_graph, cycle_graph, k5_minus
from denseminor.oracle import (SMALL_T_VALUES, minor_subgraph_mismatches, verify_6v12e_claim,
                               verify_6v12e_report, verify_extremal11, verify_lemma32,
                               verify_small_theorem)
from denseminor.oracle.verify import _extremal11_check, _SmallCheck


def test_small_values_table():
    assert SMALL_T_VALUES == {2: 1, 3: 3, 4: 5, 5: 8, 6: 11}


@pytest.mark.parametrize("t,n", [(2, 5), (3, 5), (4, 6), (5, 6), (6, 7)])
def test_small_sweep_iso(t, n):
    rep = verify_small_theorem(t, n)
    assert rep.ok and rep.checked > 0


@pytest.mark.parametrize("t,n", [(2, 5), (3, 5), (4, 6), (5, 6)])
def test_small_sweep_labeled(t, n):
    rep = verify_small_theorem(t, n, labeled=True)
    assert rep.ok


def test_small_sweep_rejects_t():
    with pytest.raises(ValueError):
        verify_small_theorem(7, 7)


def test_small_check_flags_sparse_graph():
    # C4 has d̄ = 2 < 3, so it is outside the t = 4 claim and has only 4 minor edges
    bad = _SmallCheck(4)(cycle_graph(4))
    assert bad is not None and bad["best"] == 4


def test_workers_do_not_change_result():
    one = verify_small_theorem(4, 6, labeled=True, workers=1)
    two = verify_small_theorem(4, 6, labeled=True, workers=3)
    assert (one.checked, one.violations) == (two.checked, two.violations)


def test_6v12e():
    rep = verify_6v12e_report()
    assert rep.checked == 576 and rep.ok
    assert verify_6v12e_claim()


def test_extremal11_exceptions():
    assert _extremal11_check(complete_graph(5)) is None
    assert _extremal11_check(k5_minus()) is None
    assert _extremal11_check(complete_graph(1)) is None
    assert _extremal11_check(complete_graph(4)) is not None


def test_extremal11_small():
    rep = verify_extremal11(6)
    assert rep.ok and rep.checked > 0


def test_report_json():
    rep = verify_small_theorem(2, 4)
    data = rep.to_json()
    assert set(data) == {"checked", "violations", "runtime_ms"}
    assert data["checked"] == rep.checked


def test_minor_subgraph_equivalence_small():
    assert verify_lemma32(SGraphSpec(2, 2, 2), 4).ok
    with pytest.raises(ValueError):
        verify_lemma32(SGraphSpec(1, 1, 1), 3)


def test_mismatch_detected_on_cycle():
    rep = minor_subgraph_mismatches(cycle_graph(4), 3)
    assert not rep.ok
    assert {"pattern": [(0, 1), (0, 2), (1, 2)], "n": 3, "minor": True, "subgraph": False} in rep.violations


# -- vectorized labeled sweeps ----------------------------------------------------

from itertools import combinations  # noqa: E402

from denseminor.oracle import max_minor_edges  # noqa: E402
from denseminor.oracle.enumeration import count_labeled  # noqa: E402
from denseminor.oracle.verify import _graph_of_mask, labeled_residue  # noqa: E402


@pytest.mark.parametrize("n,t,need", [(5, 4, 6), (5, 3, 3), (6, 4, 6), (6, 5, 9), (4, 4, 6)])
def test_residue_is_exactly_the_hard_graphs(n, t, need):
    """Masks the fast tests settle really have the minor; the residue is checked exactly."""
    pairs = list(combinations(range(n), 2))
    checked, rest = labeled_residue(n, t, need, lambda e: True)
    assert checked == 2 ** len(pairs)
    rest = set(rest.tolist())
    for x in range(2 ** len(pairs)):
        g = _graph_of_mask(x, n, pairs)
        if x not in rest:
            assert max_minor_edges(g, t, target=need).optimum >= need


def test_residue_respects_edge_filter():
    checked, _ = labeled_residue(6, 4, 5, lambda e: e >= 9)
    assert checked == count_labeled(6, lambda e: e >= 9)


@pytest.mark.parametrize("t,n", [(3, 6), (4, 6), (5, 7)])
def test_labeled_and_iso_agree(t, n):
    a = verify_small_theorem(t, n, labeled=True)
    b = verify_small_theorem(t, n, labeled=False)
    assert a.ok and b.ok
    assert a.checked == sum(count_labeled(k, lambda e, k=k: 2 * e >= (t - 1) * k) for k in range(t, n + 1))


def test_labeled_sweep_reports_violations():
    # demand more than the truth: 4-vertex minors with 6 edges when d̄ >= 2
    from denseminor.oracle.verify import _labeled_sweep, _SmallCheck

    strict = _SmallCheck(3)
    strict.t, strict.need = 4, 6
    rep = _labeled_sweep([4], 4, 6, lambda n: (lambda e: e >= 4), strict)
    assert rep.checked == count_labeled(4, lambda e: e >= 4)
    assert len(rep.violations) == rep.checked - 1  # only K4 itself has a K4 minor


def test_extremal11_labeled_seven():
    rep = verify_extremal11(7, labeled=True)
    assert rep.ok
    assert rep.checked >= count_labeled(7, lambda e: e >= 14) == 198440

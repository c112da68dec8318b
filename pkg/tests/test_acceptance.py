"""Acceptance criteria: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines alongside the pytest statuses.
"""

import json
import time
from fractions import Fraction

import pytest

from degix.families import FamilyKind, boundary_bipartite, wheel_closed_forms
from degix.graphs import canonical_form, degree_stats, graph6_decode
from degix.indices import ComparisonVerdict, Sign, compare_ga_abc, phi_term, theta_term, term_gap
from degix.intervals import Interval, precision_ladder
from degix.linegraph import is_line_graph, is_molecular, line_graph
from degix.search import (
    enumerate_connected,
    enumerate_trees,
    scan_conjecture,
    scan_result_json,
)
from degix.theorems import (
    SideStatus,
    check_sandwich,
    consistency_sweep,
    crossover_scan,
    gamma,
    lemma_positivity_scan,
    report_json,
)

from conftest import family

CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853)


def _root(num: int, den: int, rnum: int, rden: int) -> Interval:
    """(num/den) * sqrt(rnum/rden) at oracle precision."""
    return Interval.ratio(num, den, 200) * Interval.ratio(rnum, rden, 200).sqrt()


# closed forms of the twenty per-edge term pairs, keyed by degree pair:
# (theta, phi) as (num, den, root_num, root_den)
TABLE = {
    (6, 6): ((1, 1, 1, 1), (1, 3, 5, 2)),
    (6, 5): ((2, 11, 30, 1), (1, 1, 3, 10)),
    (6, 4): ((2, 5, 6, 1), (1, 1, 1, 3)),
    (6, 3): ((2, 3, 2, 1), (1, 3, 7, 2)),
    (6, 2): ((1, 2, 3, 1), (1, 1, 1, 2)),
    (6, 1): ((2, 7, 6, 1), (1, 1, 5, 6)),
    (5, 5): ((1, 1, 1, 1), (2, 5, 2, 1)),
    (5, 4): ((4, 9, 5, 1), (1, 2, 7, 5)),
    (5, 3): ((1, 4, 15, 1), (1, 1, 2, 5)),
    (5, 2): ((2, 7, 10, 1), (1, 1, 1, 2)),
    (5, 1): ((1, 3, 5, 1), (2, 1, 1, 5)),
    (4, 4): ((1, 1, 1, 1), (1, 2, 3, 2)),
    (4, 3): ((4, 7, 3, 1), (1, 2, 5, 3)),
    (4, 2): ((2, 3, 2, 1), (1, 1, 1, 2)),
    (4, 1): ((4, 5, 1, 1), (1, 2, 3, 1)),
    (3, 3): ((1, 1, 1, 1), (2, 3, 1, 1)),
    (3, 2): ((2, 5, 6, 1), (1, 1, 1, 2)),
    (3, 1): ((1, 2, 3, 1), (1, 1, 2, 3)),
    (2, 2): ((1, 1, 1, 1), (1, 1, 1, 2)),
    (2, 1): ((2, 3, 2, 1), (1, 1, 1, 2)),
}


def _all_connected():
    return [g for n in range(1, 8) for g in enumerate_connected(n)]


def test_criterion_1_table_reproduction():
    start = time.perf_counter()
    tol = Fraction(1, 10**12)
    checked = 0
    for (a, b), (theta_cf, phi_cf) in TABLE.items():
        for term, cf in ((theta_term(a, b, 64), theta_cf), (phi_term(a, b, 64), phi_cf)):
            oracle = _root(*cf)
            assert abs(term.midpoint() - oracle.midpoint()) <= tol, (a, b)
            assert term.lo <= oracle.hi and oracle.lo <= term.hi, (a, b)
            checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 40
    assert elapsed < 1.0, f"table reproduction took {elapsed:.3f}s"
    print(f"PASS criterion 1: 40 table entries within 1e-12 in {elapsed:.3f}s")


def test_criterion_2_piecewise_branch_values():
    quarter = Fraction(5, 10**5)  # agreement after rounding to 4 decimals

    def mid(a, b):
        return term_gap(a, b, 128).midpoint()

    assert abs(mid(3, 1) - Fraction("0.0495")) < quarter
    assert abs(mid(6, 2) - Fraction("0.1589")) < quarter
    assert abs(mid(5, 2) - Fraction("0.1964")) < quarter
    assert abs(mid(2, 1) - Fraction("0.2357")) < quarter
    assert abs(mid(4, 2) - Fraction("0.2357")) < quarter

    pendant_min = min(((a, 1) for a in (4, 5, 6)), key=lambda p: mid(*p))
    assert pendant_min == (6, 1)
    bound_61 = _root(2, 7, 6, 1) - _root(1, 1, 5, 6)  # 2*sqrt(6)/7 - sqrt(5/6)
    assert abs(mid(6, 1) - bound_61.midpoint()) < Fraction(1, 10**12)
    assert abs(mid(6, 1) - Fraction("-0.2130")) < quarter

    remaining = [
        (a, b)
        for a in range(2, 7)
        for b in range(2, a + 1)
        if (a, b) not in ((6, 2), (5, 2), (4, 2))
    ]
    rem_min = min(remaining, key=lambda p: mid(*p))
    assert rem_min == (3, 2)
    bound_32 = _root(2, 5, 6, 1) - _root(1, 1, 1, 2)  # 2*sqrt(6)/5 - 1/sqrt(2)
    assert abs(mid(3, 2) - bound_32.midpoint()) < Fraction(1, 10**12)
    assert abs(mid(3, 2) - Fraction("0.2727")) < quarter
    print("PASS criterion 2: piecewise branch values reproduced to 4 decimals")


def test_criterion_3_wheel_crossover():
    start = time.perf_counter()
    result = crossover_scan(4, 300, 256)
    elapsed = time.perf_counter() - start
    signs = dict(result.signs)
    assert all(signs[n] is Sign.GA_GREATER for n in range(4, 195))
    assert all(signs[n] is Sign.ABC_GREATER for n in range(195, 301))
    assert result.first_flip == 195
    assert elapsed < 5.0, f"crossover took {elapsed:.3f}s"
    print(f"PASS criterion 3: certified flip at 195 over 4..300 in {elapsed:.3f}s")


def test_criterion_4_boundary_examples():
    assert compare_ga_abc(boundary_bipartite(2), 256).sign is Sign.ABC_GREATER

    bridge = family("bridge", 12, 3)
    stats = degree_stats(bridge)
    assert stats.delta_max - stats.delta_min == 10
    assert compare_ga_abc(bridge, 256).sign is Sign.GA_GREATER

    assert compare_ga_abc(family("star", 4), 256).sign is Sign.ABC_GREATER

    verdict = compare_ga_abc(family("tstar"), 256)
    assert verdict.sign is Sign.ABC_GREATER
    assert Fraction(-9, 1000) <= verdict.gap.lo_fraction()
    assert verdict.gap.hi_fraction() <= Fraction(-8, 1000)
    print("PASS criterion 4: K_{2,12}, clique bridge, K_{1,4} and double claw certified")


def test_criterion_5_exhaustive_theorem_consistency():
    start = time.perf_counter()
    counts = tuple(len(enumerate_connected(n)) for n in range(1, 8))
    assert counts == CONNECTED_COUNTS
    graphs = _all_connected()
    assert len(graphs) == sum(CONNECTED_COUNTS) == 996

    reports = consistency_sweep(graphs, max_precision=128)  # falsification raises
    held = 0
    for r in reports:
        if not r.hypothesis_holds:
            continue
        held += 1
        if isinstance(r.verdict, ComparisonVerdict):
            assert r.verdict.sign is Sign.GA_GREATER, report_json(r)
        else:
            assert r.verdict.holds, report_json(r)
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0, f"sweep took {elapsed:.1f}s"
    print(
        f"PASS criterion 5: {len(reports)} reports over 996 graphs, "
        f"{held} hypotheses held, zero violations in {elapsed:.1f}s"
    )


def test_criterion_6_line_graph_pipeline():
    molecular = [
        g for n in range(3, 8) for g in enumerate_connected(n) if is_molecular(g)
    ]
    for m_graph in molecular:
        verdict = compare_ga_abc(line_graph(m_graph), 256)
        assert verdict.sign is Sign.GA_GREATER, m_graph.edges()

    for n in range(2, 7):
        for g in enumerate_connected(n):
            assert is_line_graph(line_graph(g))[0]

    image = set()
    for m_graph in (g for n in range(2, 8) for g in enumerate_connected(n)):
        if 1 <= m_graph.m <= 6:
            image.add(canonical_form(line_graph(m_graph)))
    for n in range(1, 7):
        for h in enumerate_connected(n):
            assert is_line_graph(h)[0] == (canonical_form(h) in image), h.edges()
    print(
        f"PASS criterion 6: {len(molecular)} molecular root graphs certified, "
        "recognition sound and complete on <= 6 vertices"
    )


def test_criterion_7_polynomial_side_conditions():
    for k in range(2, 7):
        res = lemma_positivity_scan(k, grid_step=1)
        span = (2 * k - 1) ** 2 + 1
        assert res.points_checked == span * span
        assert res.all_positive, (k, res.nonpositive[:3], res.indeterminate[:3])

    for a in range(1, 31):
        for b in range(1, 31):
            if a + b <= 2:
                continue
            gm = gamma(a, b)
            assert not gm.contains_zero(), (a, b)
            for p in precision_ladder(512):
                diff = term_gap(a, b, p)
                if diff.is_positive() or diff.is_negative():
                    break
            assert gm.is_positive() == diff.is_positive(), (a, b)
    print("PASS criterion 7: quartic positive on all integer boxes k=2..6; "
          "sign identity holds for all degree pairs up to 30")


def test_criterion_8_sandwich_bounds():
    left_eq, right_eq = [], []
    checked = 0
    for g in _all_connected():
        if g.n < 2 or min(g.degrees) < 2:
            continue
        checked += 1
        report = check_sandwich(g, 256)
        assert report.holds, report
        assert report.left_status in (SideStatus.STRICT, SideStatus.EQUALITY)
        assert report.right_status in (SideStatus.STRICT, SideStatus.EQUALITY)
        complete = g.m == g.n * (g.n - 1) // 2
        if report.left_status is SideStatus.EQUALITY:
            left_eq.append(g)
            assert complete, g.edges()
        elif complete:
            pytest.fail(f"complete graph without left equality: n={g.n}")
        if report.right_status is SideStatus.EQUALITY:
            right_eq.append(g)
            assert g.n == 3 and complete
        elif g.n == 3 and complete:
            pytest.fail("triangle without right equality")
    assert sorted(g.n for g in left_eq) == [3, 4, 5, 6, 7]
    assert len(right_eq) == 1
    print(f"PASS criterion 8: both bounds hold on {checked} graphs; "
          "left equality exactly on complete graphs, right exactly on the triangle")


def test_criterion_9_conjecture_scan():
    stream = _all_connected() + [t for n in range(8, 13) for t in enumerate_trees(n)]
    result = scan_conjecture(stream, 256)
    assert result.graphs_scanned == 995 + 962  # nontrivial connected + larger trees
    assert result.violations == ()
    assert result.indeterminates == ()
    g6, gap = result.min_abs_gap
    assert not gap.contains_zero()
    winner = graph6_decode(g6)
    assert canonical_form(winner) == canonical_form(family("tstar"))
    print(
        f"PASS criterion 9: {result.graphs_scanned} graphs scanned, zero "
        f"indeterminates; smallest gap on {g6} within "
        f"[{float(gap.lo_fraction()):.6f}, {float(gap.hi_fraction()):.6f}]"
    )


def test_criterion_10_parallel_determinism():
    serial = crossover_scan(4, 300, 256, workers=1)
    parallel = crossover_scan(4, 300, 256, workers=8)
    blob_a = json.dumps({"first_flip": serial.first_flip,
                         "signs": [[n, s.value] for n, s in serial.signs]})
    blob_b = json.dumps({"first_flip": parallel.first_flip,
                         "signs": [[n, s.value] for n, s in parallel.signs]})
    assert blob_a == blob_b

    graphs = _all_connected()
    sweep_a = json.dumps([report_json(r) for r in consistency_sweep(graphs, 128, workers=1)])
    sweep_b = json.dumps([report_json(r) for r in consistency_sweep(graphs, 128, workers=8)])
    assert sweep_a == sweep_b

    stream = graphs + [t for n in range(8, 13) for t in enumerate_trees(n)]
    scan_a = json.dumps(scan_result_json(scan_conjecture(stream, 256, workers=1)))
    scan_b = json.dumps(scan_result_json(scan_conjecture(stream, 256, workers=8)))
    assert scan_a == scan_b
    print("PASS criterion 10: crossover, sweep and scan byte-identical with 8 workers")

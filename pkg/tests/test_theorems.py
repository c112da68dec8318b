"""Hypothesis checkers, polynomial side conditions, sandwich bounds, crossover."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from degix.graphs import build_graph
from degix.indices import Sign, term_gap
from degix.intervals import precision_ladder
from degix.theorems import (
    IndeterminateSignError,
    PreconditionError,
    SideStatus,
    TheoremFalsified,
    TheoremId,
    TheoremReport,
    check_hypothesis,
    check_sandwich,
    crossover_scan,
    gamma,
    lemma_f,
    lemma_positivity_scan,
    report_json,
    starlike_branches,
    verify_theorem,
)
from degix.families import boundary_bipartite

from conftest import complete, cycle, family, path, star

small_rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=64
)


def poly_f(x: Fraction, y: Fraction) -> Fraction:
    return (x + y) ** 2 * x**2 - (x + y / 2) ** 2 * (2 * x + y - 2)


# -- lemma_f -------------------------------------------------------------------


def test_lemma_f_at_left_edge():
    # f(k, 0) = k^2 * (k^2 - 2*(k-1))
    for k in range(2, 7):
        assert lemma_f(k, 0).contains(k**2 * (k**2 - 2 * (k - 1)))
    assert lemma_f(2, 0).contains(8)


def test_lemma_f_at_right_corner():
    # f(k, (2k-1)^2) = k^4 + k^2 - k/2 + 1/4
    for k in range(2, 7):
        expected = Fraction(k**4 + k**2) - Fraction(k, 2) + Fraction(1, 4)
        assert lemma_f(k, (2 * k - 1) ** 2).contains(expected)
    assert lemma_f(2, 9).contains(Fraction(77, 4))


def test_lemma_f_outside_domain():
    # at (1, 0) the value is 1*1 - 1*0 = 1; the k >= 2 restriction is about
    # positivity over the whole box, not this corner
    assert lemma_f(1, 0).contains(poly_f(Fraction(1), Fraction(0)))
    assert poly_f(Fraction(1), Fraction(0)) == 1


@given(small_rationals, small_rationals)
@settings(max_examples=80)
def test_lemma_f_matches_exact_polynomial(x, y):
    assert lemma_f(x, y, 128).contains(poly_f(x, y))


def test_positivity_scan_k2_integer_points():
    res = lemma_positivity_scan(2)
    assert res.all_positive
    assert res.points_checked == 10 * 10
    assert not res.indeterminate and not res.nonpositive


def test_positivity_scan_k3():
    res = lemma_positivity_scan(3)
    assert res.all_positive and res.points_checked == 26 * 26


def test_positivity_scan_finer_grid():
    res = lemma_positivity_scan(2, grid_step=Fraction(1, 4))
    assert res.all_positive
    assert res.points_checked == 37 * 37


def test_positivity_scan_validation():
    with pytest.raises(ValueError):
        lemma_positivity_scan(1)
    with pytest.raises(ValueError):
        lemma_positivity_scan(2, grid_step=0)


# -- gamma ----------------------------------------------------------------------


def test_gamma_values():
    assert gamma(2, 2).contains(8)
    assert gamma(4, 1).contains(Fraction(-11, 4))
    for k in range(2, 7):
        assert gamma(k, k).contains(k**4 - k**2 * (2 * k - 2))
    with pytest.raises(ValueError):
        gamma(0, 3)


@given(st.integers(1, 30), st.integers(1, 30))
@settings(max_examples=120)
def test_gamma_sign_matches_per_edge_gap(a, b):
    if a + b <= 2:
        return
    gm = gamma(a, b)
    for p in precision_ladder(512):
        diff = term_gap(a, b, p)
        if diff.is_positive() or diff.is_negative():
            break
    assert diff.is_positive() == gm.is_positive()
    assert diff.is_negative() == gm.is_negative()


# -- hypothesis checks ------------------------------------------------------------


def test_dt_clauses_on_double_claw():
    h = check_hypothesis(TheoremId.DT_DELTA3, family("tstar"))
    by_name = {c.name: c.holds for c in h.clauses}
    assert by_name["degree_gap_at_most_3"]
    assert by_name["not_star_on_5_vertices"]
    assert not by_name["not_double_claw"]
    assert not h.holds


def test_dt_clauses_on_star4():
    h = check_hypothesis(TheoremId.DT_DELTA3, star(4))
    assert not h.holds
    assert not {c.name: c.holds for c in h.clauses}["not_star_on_5_vertices"]


def test_delta_squared_on_boundary_bipartite():
    h = check_hypothesis(TheoremId.DELTA_SQUARED, boundary_bipartite(2))
    by_name = {c.name: c.holds for c in h.clauses}
    assert by_name["min_degree_at_least_2"]
    assert not by_name["degree_gap_within_square"]


def test_delta_squared_on_cycle():
    assert check_hypothesis(TheoremId.DELTA_SQUARED, cycle(7)).holds


def test_preconditions():
    disconnected = build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(PreconditionError):
        check_hypothesis(TheoremId.DT_DELTA3, disconnected)
    with pytest.raises(PreconditionError):
        check_hypothesis(TheoremId.DT_DELTA3, build_graph(1, []))
    with pytest.raises(PreconditionError):
        check_hypothesis(TheoremId.TREE_PENDANT, cycle(4))
    with pytest.raises(PreconditionError):
        check_hypothesis(TheoremId.STARLIKE_1, path(4))
    with pytest.raises(PreconditionError):
        check_hypothesis(TheoremId.LINE_MOLECULAR, path(2))


def test_tree_pendant_clauses():
    holds = check_hypothesis(TheoremId.TREE_PENDANT, star(3))
    assert holds.holds  # no pendant edge lands on degree >= 4
    fails = check_hypothesis(TheoremId.TREE_PENDANT, star(4))
    assert not fails.holds


def test_starlike_branches_extraction():
    s = family("starlike", 4, 3, 2, 2)
    assert starlike_branches(s) == [4, 3, 2, 2]
    assert starlike_branches(path(5)) is None
    assert starlike_branches(family("tstar")) is None
    assert starlike_branches(cycle(5)) is None


def test_starlike_clause_variants():
    s = family("starlike", 4, 4, 4)
    assert check_hypothesis(TheoremId.STARLIKE_1, s).holds
    assert check_hypothesis(TheoremId.STARLIKE_2, s).holds
    assert not check_hypothesis(TheoremId.STARLIKE_3, s).holds  # mean 4 < 8
    mixed = family("starlike", 9, 9, 6)  # mean 8, but a branch of length < 4 elsewhere
    assert check_hypothesis(TheoremId.STARLIKE_3, mixed).holds
    pendant_branch = family("starlike", 10, 9, 5, 1)
    # mean 25/4 < 8 fails; unit branches are allowed by the mean-only clause
    assert not check_hypothesis(TheoremId.STARLIKE_3, pendant_branch).holds
    assert not check_hypothesis(TheoremId.STARLIKE_1, pendant_branch).holds


# -- verification ------------------------------------------------------------------


def test_verify_line_molecular_on_star4():
    report = verify_theorem(TheoremId.LINE_MOLECULAR, star(4), 128)
    assert report.hypothesis_holds
    assert report.verdict.sign is Sign.GA_GREATER
    assert report.consistent
    assert report.conclusion_graph_id != report.graph_id


def test_verify_dt_on_path5():
    report = verify_theorem(TheoremId.DT_DELTA3, path(5), 128)
    assert report.hypothesis_holds and report.verdict.sign is Sign.GA_GREATER


def test_verify_starlike1():
    report = verify_theorem(TheoremId.STARLIKE_1, family("starlike", 4, 4, 4), 128)
    assert report.hypothesis_holds and report.verdict.sign is Sign.GA_GREATER


def test_verify_near_miss_is_consistent():
    # hypothesis fails and ABC wins: not a falsification
    report = verify_theorem(TheoremId.DELTA_SQUARED, boundary_bipartite(2), 128)
    assert not report.hypothesis_holds
    assert report.verdict.sign is Sign.ABC_GREATER
    assert report.consistent


def test_falsified_exception_carries_report():
    report = verify_theorem(TheoremId.DT_DELTA3, path(3), 128)
    exc = TheoremFalsified(report)
    assert exc.report is report
    assert "dt_delta3" in str(exc)


def test_report_json_fields():
    payload = report_json(verify_theorem(TheoremId.DT_DELTA3, path(3), 128))
    assert payload["theorem"] == "dt_delta3"
    assert payload["verdict"] == "GA_GREATER"
    assert {"graph6", "clauses", "gap_lo", "gap_hi", "precision", "consistent"} <= set(payload)


# -- sandwich -----------------------------------------------------------------------


def test_sandwich_complete5_left_equality():
    report = check_sandwich(complete(5), 256)
    assert report.left_status is SideStatus.EQUALITY
    assert report.right_status is SideStatus.STRICT
    assert report.holds


def test_sandwich_triangle_double_equality():
    report = check_sandwich(complete(3), 256)
    assert report.left_status is SideStatus.EQUALITY
    assert report.right_status is SideStatus.EQUALITY


def test_sandwich_cycle6_strict():
    report = check_sandwich(cycle(6), 256)
    assert report.left_status is SideStatus.STRICT
    assert report.right_status is SideStatus.STRICT


def test_sandwich_requires_min_degree_2():
    with pytest.raises(PreconditionError):
        check_sandwich(path(4), 128)


# -- crossover ---------------------------------------------------------------------


def test_crossover_window():
    result = crossover_scan(190, 200, 256)
    assert result.first_flip == 195
    signs = dict(result.signs)
    assert signs[194] is Sign.GA_GREATER and signs[195] is Sign.ABC_GREATER


def test_crossover_none_in_low_range():
    assert crossover_scan(4, 100, 128).first_flip is None


def test_crossover_validation():
    with pytest.raises(ValueError):
        crossover_scan(3, 10)
    with pytest.raises(ValueError):
        crossover_scan(10, 10)


def test_crossover_stable_under_precision_doubling():
    assert crossover_scan(190, 200, 128).first_flip == crossover_scan(190, 200, 256).first_flip


def test_wheel_gap_near_flip_against_mpmath():
    import mpmath

    from degix.families import wheel_closed_forms

    mpmath.mp.dps = 60
    for n, positive in ((194, True), (195, False)):
        ref = (n - 1) * (1 + 2 * mpmath.sqrt(3 * (n - 1)) / (n + 2)) - (n - 1) * (
            mpmath.mpf(2) / 3 + mpmath.sqrt(mpmath.mpf(n) / (3 * (n - 1)))
        )
        assert (ref > 0) == positive
        ga, abc = wheel_closed_forms(n, 256)
        gap = ga - abc
        ref_frac = Fraction(*mpmath.mpf(ref).as_integer_ratio())
        slack = Fraction(1, 10**50)
        assert gap.lo_fraction() - slack <= ref_frac <= gap.hi_fraction() + slack

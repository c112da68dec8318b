"""Executable hypothesis checkers and conclusion verifiers.

Each supported statement pairs a decidable hypothesis over a concrete graph
with a conclusion that can be certified by interval arithmetic (a strict
GA > ABC comparison, or the two-sided sandwich bounds).  A report whose
hypothesis holds but whose conclusion is *certified to fail* would falsify
the underlying mathematics; that situation raises ``TheoremFalsified``
immediately rather than being returned as data.

Clause results are reported individually so that near-misses (the boundary
examples where exactly one clause fails) stay inspectable.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .families import FamilyKind, FamilySpec, generate, wheel_closed_forms
from .graphs import (
    Graph,
    canonical_form,
    degree_stats,
    edge_degree_census,
    graph6_encode,
    is_connected,
    is_tree,
)
from .indices import ComparisonVerdict, Sign, abc_index, compare_ga_abc, ga_index
from .intervals import (
    DEFAULT_MAX_PRECISION,
    DEFAULT_PRECISION,
    Interval,
    Number,
    precision_ladder,
)
from .linegraph import is_molecular, line_graph


class TheoremId(enum.Enum):
    DT_DELTA3 = "dt_delta3"                # degree gap <= 3, two exceptional trees excluded
    LINE_MOLECULAR = "line_molecular"      # line graph of a molecular graph
    DELTA_SQUARED = "delta_squared"        # degree gap <= (2*delta-1)**2, delta >= 2
    EDGEWISE_GLOBAL = "edgewise_global"    # per-edge gap <= (2*delta-1)**2
    EDGEWISE_LOCAL = "edgewise_local"      # per-edge gap <= (2*min(di,dj)-1)**2
    SANDWICH = "sandwich"                  # two-sided ABC vs GA bounds
    TREE_PENDANT = "tree_pendant"          # trees without pendant-to-high-degree edges
    STARLIKE_1 = "starlike_1"              # all branches >= 4
    STARLIKE_2 = "starlike_2"              # all branches >= 2 and mean branch >= 4
    STARLIKE_3 = "starlike_3"              # mean branch >= 8


GA_COMPARISON_THEOREMS = (
    TheoremId.DT_DELTA3,
    TheoremId.LINE_MOLECULAR,
    TheoremId.DELTA_SQUARED,
    TheoremId.EDGEWISE_GLOBAL,
    TheoremId.EDGEWISE_LOCAL,
    TheoremId.TREE_PENDANT,
    TheoremId.STARLIKE_1,
    TheoremId.STARLIKE_2,
    TheoremId.STARLIKE_3,
)


class PreconditionError(ValueError):
    """Input graph is outside the class a checker is defined on."""


class TheoremFalsified(RuntimeError):
    """A hypothesis held but the conclusion was certified to fail."""

    def __init__(self, report: "TheoremReport"):
        self.report = report
        super().__init__(
            f"FALSIFIED {report.theorem.value} on {report.graph_id}: "
            f"hypothesis holds but conclusion certified false; report={report!r}"
        )


@dataclass(frozen=True)
class Clause:
    name: str
    holds: bool
    note: str = ""


@dataclass(frozen=True)
class HypothesisCheck:
    clauses: tuple[Clause, ...]

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.clauses)


class SideStatus(enum.Enum):
    STRICT = "STRICT"
    EQUALITY = "EQUALITY"          # zero inside at max precision, equality case confirmed
    VIOLATION = "VIOLATION"        # inequality certified to fail
    UNRESOLVED = "UNRESOLVED"      # zero inside at max precision, no equality case applies


@dataclass(frozen=True)
class SandwichReport:
    """Result of checking lower*GA <= ABC <= upper*GA with equality detection."""

    graph_id: str
    n: int
    left_status: SideStatus
    right_status: SideStatus
    left_diff: Interval    # ABC - lower_coeff * GA, must be >= 0
    right_diff: Interval   # upper_coeff * GA - ABC, must be >= 0
    precision_used: int

    @property
    def holds(self) -> bool:
        ok = (SideStatus.STRICT, SideStatus.EQUALITY)
        return self.left_status in ok and self.right_status in ok


@dataclass(frozen=True)
class TheoremReport:
    """Per-graph verification record for one theorem."""

    theorem: TheoremId
    graph_id: str                 # graph6 of the input graph
    conclusion_graph_id: str      # graph6 of the graph the conclusion is evaluated on
    clauses: tuple[Clause, ...]
    hypothesis_holds: bool
    verdict: ComparisonVerdict | SandwichReport | None
    consistent: bool


# -- small helpers -----------------------------------------------------------


def _require_connected_nontrivial(g: Graph) -> None:
    if g.n < 2:
        raise PreconditionError("checker requires a non-trivial graph")
    if not is_connected(g):
        raise PreconditionError("checker requires a connected graph")


def _isomorphic_small(g: Graph, h: Graph) -> bool:
    if g.n != h.n or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)


def starlike_branches(g: Graph) -> list[int] | None:
    """Branch lengths of a starlike tree, sorted nonincreasing; None if the
    input is not a starlike tree (a tree with exactly one vertex of degree > 2)."""
    if not is_tree(g):
        return None
    centers = [v for v in range(g.n) if g.degrees[v] > 2]
    if len(centers) != 1:
        return None
    c = centers[0]
    lengths = []
    for start in g.adj[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in g.adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    return sorted(lengths, reverse=True)


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


_STAR4 = generate(FamilySpec(FamilyKind.STAR, (4,)))
_DOUBLE_CLAW = generate(FamilySpec(FamilyKind.T_STAR))


# -- polynomial side conditions ----------------------------------------------


def lemma_f(x: Number, y: Number, precision: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of (x+y)^2 * x^2 - (x + y/2)^2 * (2x + y - 2)."""
    xv = Interval.exact(x, precision)
    yv = Interval.exact(y, precision)
    half_y = yv * Interval.ratio(1, 2, precision)
    two = Interval.exact(2, precision)
    left = (xv + yv).square() * xv.square()
    right = (xv + half_y).square() * (xv.scaled(2) + yv - two)
    return left - right


def gamma(d_i: int, d_j: int, precision: int = DEFAULT_PRECISION) -> Interval:
    """Exact enclosure of di^2*dj^2 - (di+dj)^2*(di+dj-2)/4.

    The sign of this quantity equals the sign of the per-edge GA - ABC
    difference whenever di + dj > 2.
    """
    if d_i < 1 or d_j < 1:
        raise ValueError(f"degrees must be positive, got ({d_i}, {d_j})")
    four_gamma = 4 * d_i**2 * d_j**2 - (d_i + d_j) ** 2 * (d_i + d_j - 2)
    return Interval.exact(Fraction(four_gamma, 4), precision)


@dataclass(frozen=True)
class LemmaScanResult:
    all_positive: bool
    points_checked: int
    nonpositive: tuple[tuple[Fraction, Fraction], ...]
    indeterminate: tuple[tuple[Fraction, Fraction], ...]


def lemma_positivity_scan(
    k: int,
    grid_step: float | Fraction = 1,
    max_precision: int = DEFAULT_MAX_PRECISION,
) -> LemmaScanResult:
    """Certify positivity of the quartic side condition over its box.

    Scans every integer point of [k, k+(2k-1)^2] x [0, (2k-1)^2] plus the
    grid of the given step, certifying each enclosure positive.  Points that
    stay indeterminate at max precision are recorded and the scan continues.
    """
    if k < 2:
        raise ValueError(f"scan requires k >= 2, got {k}")
    step = Fraction(grid_step)
    if step <= 0:
        raise ValueError(f"grid_step must be positive, got {grid_step}")
    span = (2 * k - 1) ** 2
    xs: set[Fraction] = {Fraction(v) for v in range(k, k + span + 1)}
    ys: set[Fraction] = {Fraction(v) for v in range(0, span + 1)}
    x = Fraction(k)
    while x <= k + span:
        xs.add(x)
        x += step
    y = Fraction(0)
    while y <= span:
        ys.add(y)
        y += step
    nonpositive: list[tuple[Fraction, Fraction]] = []
    indeterminate: list[tuple[Fraction, Fraction]] = []
    checked = 0
    for xv in sorted(xs):
        for yv in sorted(ys):
            checked += 1
            for p in precision_ladder(max_precision):
                val = lemma_f(xv, yv, p)
                if val.is_positive():
                    break
                if val.is_negative():
                    nonpositive.append((xv, yv))
                    break
            else:
                indeterminate.append((xv, yv))
    return LemmaScanResult(
        all_positive=not nonpositive and not indeterminate,
        points_checked=checked,
        nonpositive=tuple(nonpositive),
        indeterminate=tuple(indeterminate),
    )


# -- hypothesis checking -----------------------------------------------------


def check_hypothesis(theorem: TheoremId, g: Graph) -> HypothesisCheck:
    """Evaluate each hypothesis clause of the given statement on g.

    Raises PreconditionError when g is outside the input class the statement
    is about (disconnected, trivial, non-tree for the tree statements, ...).
    """
    _require_connected_nontrivial(g)
    stats = degree_stats(g)
    gap = stats.delta_max - stats.delta_min

    if theorem is TheoremId.DT_DELTA3:
        return HypothesisCheck((
            Clause("degree_gap_at_most_3", gap <= 3, f"gap={gap}"),
            Clause("not_star_on_5_vertices", not _isomorphic_small(g, _STAR4)),
            Clause("not_double_claw", not _isomorphic_small(g, _DOUBLE_CLAW)),
        ))

    if theorem is TheoremId.LINE_MOLECULAR:
        if g.n < 3:
            raise PreconditionError("line-graph comparison needs a root graph with >= 3 vertices")
        return HypothesisCheck((
            Clause("molecular", is_molecular(g), f"max_degree={stats.delta_max}"),
        ))

    if theorem is TheoremId.DELTA_SQUARED:
        bound = (2 * stats.delta_min - 1) ** 2
        return HypothesisCheck((
            Clause("min_degree_at_least_2", stats.delta_min >= 2, f"delta={stats.delta_min}"),
            Clause("degree_gap_within_square", gap <= bound, f"gap={gap}, bound={bound}"),
        ))

    if theorem is TheoremId.EDGEWISE_GLOBAL:
        bound = (2 * stats.delta_min - 1) ** 2
        worst = max((abs(g.degrees[u] - g.degrees[v]) for u, v in g.edges()), default=0)
        return HypothesisCheck((
            Clause("min_degree_at_least_2", stats.delta_min >= 2, f"delta={stats.delta_min}"),
            Clause("edge_gap_within_square", worst <= bound, f"worst={worst}, bound={bound}"),
        ))

    if theorem is TheoremId.EDGEWISE_LOCAL:
        ok = all(
            abs(g.degrees[u] - g.degrees[v]) <= (2 * min(g.degrees[u], g.degrees[v]) - 1) ** 2
            for u, v in g.edges()
        )
        return HypothesisCheck((
            Clause("min_degree_at_least_2", stats.delta_min >= 2, f"delta={stats.delta_min}"),
            Clause("edge_gap_within_local_square", ok),
        ))

    if theorem is TheoremId.SANDWICH:
        return HypothesisCheck((
            Clause("min_degree_at_least_2", stats.delta_min >= 2, f"delta={stats.delta_min}"),
        ))

    if theorem is TheoremId.TREE_PENDANT:
        if not is_tree(g):
            raise PreconditionError("checker requires a tree")
        census = edge_degree_census(g)
        bad = sorted(k for k in census.counts if k[1] == 1 and k[0] >= 4)
        d1 = stats.delta_min_nonpendant
        if d1 is None:
            gap_clause = Clause("nonpendant_degree_gap_within_square", False,
                                "no non-pendant vertex")
        else:
            bound = (2 * d1 - 1) ** 2
            gap_clause = Clause(
                "nonpendant_degree_gap_within_square",
                stats.delta_max - d1 <= bound,
                f"gap={stats.delta_max - d1}, bound={bound}",
            )
        return HypothesisCheck((
            Clause("order_at_least_3", g.n >= 3, f"n={g.n}"),
            Clause("no_pendant_edge_to_degree_4_plus", not bad,
                   f"offending pairs: {bad}" if bad else ""),
            gap_clause,
        ))

    if theorem in (TheoremId.STARLIKE_1, TheoremId.STARLIKE_2, TheoremId.STARLIKE_3):
        branches = starlike_branches(g)
        if branches is None:
            raise PreconditionError("checker requires a starlike tree")
        mean = Fraction(sum(branches), len(branches))
        if theorem is TheoremId.STARLIKE_1:
            return HypothesisCheck((
                Clause("all_branches_at_least_4", min(branches) >= 4, f"branches={branches}"),
            ))
        if theorem is TheoremId.STARLIKE_2:
            return HypothesisCheck((
                Clause("all_branches_at_least_2", min(branches) >= 2, f"branches={branches}"),
                Clause("mean_branch_at_least_4", mean >= 4, f"mean={mean}"),
            ))
        return HypothesisCheck((
            Clause("mean_branch_at_least_8", mean >= 8, f"mean={mean}"),
        ))

    raise ValueError(f"unknown theorem id {theorem!r}")


# -- conclusion verification -------------------------------------------------


def check_sandwich(g: Graph, max_precision: int = DEFAULT_MAX_PRECISION) -> SandwichReport:
    """Certify lower*GA <= ABC <= upper*GA with the known equality cases.

    lower = sqrt(2*(n-2))/(n-1), upper = (n+1)/(4*sqrt(n-1)).  Left equality
    is expected exactly on complete graphs and right equality exactly on the
    triangle; an equality candidate (enclosure straddling zero at max
    precision) is confirmed against those shapes.
    """
    _require_connected_nontrivial(g)
    stats = degree_stats(g)
    if stats.delta_min < 2:
        raise PreconditionError("sandwich bounds require minimum degree >= 2")
    n = g.n
    left_status = right_status = None
    left_diff = right_diff = None
    used = None
    for p in precision_ladder(max_precision):
        used = p
        ga = ga_index(g, p)
        abc = abc_index(g, p)
        low = Interval.exact(2 * (n - 2), p).sqrt() / Interval.exact(n - 1, p)
        high = Interval.exact(n + 1, p) / Interval.exact(n - 1, p).sqrt().scaled(4)
        left_diff = abc - low * ga
        right_diff = high * ga - abc
        if left_status is None:
            if left_diff.is_positive():
                left_status = SideStatus.STRICT
            elif left_diff.is_negative():
                left_status = SideStatus.VIOLATION
        if right_status is None:
            if right_diff.is_positive():
                right_status = SideStatus.STRICT
            elif right_diff.is_negative():
                right_status = SideStatus.VIOLATION
        if left_status is not None and right_status is not None:
            break
    if left_status is None:
        left_status = SideStatus.EQUALITY if _is_complete(g) else SideStatus.UNRESOLVED
    if right_status is None:
        right_status = (
            SideStatus.EQUALITY if (n == 3 and _is_complete(g)) else SideStatus.UNRESOLVED
        )
    return SandwichReport(
        graph_id=graph6_encode(g),
        n=n,
        left_status=left_status,
        right_status=right_status,
        left_diff=left_diff,
        right_diff=right_diff,
        precision_used=used,
    )


def verify_theorem(
    theorem: TheoremId,
    g: Graph,
    max_precision: int = DEFAULT_MAX_PRECISION,
) -> TheoremReport:
    """Hypothesis breakdown plus certified conclusion for one graph.

    Raises TheoremFalsified when the hypothesis holds and the conclusion is
    certified to fail.  An INDETERMINATE conclusion is reported as-is (the
    report's verdict carries it); it never silently passes.
    """
    hyp = check_hypothesis(theorem, g)
    gid = graph6_encode(g)

    if theorem is TheoremId.SANDWICH:
        verdict = None
        consistent = True
        if all(c.holds for c in hyp.clauses):
            verdict = check_sandwich(g, max_precision)
            consistent = SideStatus.VIOLATION not in (verdict.left_status, verdict.right_status)
        report = TheoremReport(theorem, gid, gid, hyp.clauses, hyp.holds, verdict, consistent)
        if not consistent:
            raise TheoremFalsified(report)
        return report

    if theorem is TheoremId.LINE_MOLECULAR:
        target = line_graph(g)
    else:
        target = g
    verdict = compare_ga_abc(target, max_precision)
    consistent = not (hyp.holds and verdict.sign is Sign.ABC_GREATER)
    report = TheoremReport(
        theorem, gid, graph6_encode(target), hyp.clauses, hyp.holds, verdict, consistent
    )
    if not consistent:
        raise TheoremFalsified(report)
    return report


def applicable_theorems(g: Graph) -> list[TheoremId]:
    """Theorem ids whose input-class preconditions g satisfies."""
    if g.n < 2 or not is_connected(g):
        return []
    ids = [
        TheoremId.DT_DELTA3,
        TheoremId.DELTA_SQUARED,
        TheoremId.EDGEWISE_GLOBAL,
        TheoremId.EDGEWISE_LOCAL,
    ]
    if g.n >= 3:
        ids.append(TheoremId.LINE_MOLECULAR)
    if min(g.degrees) >= 2:
        ids.append(TheoremId.SANDWICH)
    if is_tree(g):
        ids.append(TheoremId.TREE_PENDANT)
        if starlike_branches(g) is not None:
            ids.extend((TheoremId.STARLIKE_1, TheoremId.STARLIKE_2, TheoremId.STARLIKE_3))
    return ids


def verify_all_applicable(g: Graph, max_precision: int = DEFAULT_MAX_PRECISION) -> list[TheoremReport]:
    return [verify_theorem(t, g, max_precision) for t in applicable_theorems(g)]


# -- wheel crossover ---------------------------------------------------------


@dataclass(frozen=True)
class CrossoverResult:
    first_flip: int | None                 # smallest n with certified ABC > GA
    signs: tuple[tuple[int, Sign], ...]


class IndeterminateSignError(RuntimeError):
    """A scan could not certify a sign at its precision ceiling."""


def wheel_sign(n: int, max_precision: int = DEFAULT_MAX_PRECISION) -> Sign:
    """Certified sign of GA - ABC for the wheel of order n via closed forms."""
    for p in precision_ladder(max_precision):
        ga, abc = wheel_closed_forms(n, p)
        diff = ga - abc
        if diff.is_positive():
            return Sign.GA_GREATER
        if diff.is_negative():
            return Sign.ABC_GREATER
    return Sign.INDETERMINATE


def crossover_scan(
    n_lo: int,
    n_hi: int,
    max_precision: int = DEFAULT_MAX_PRECISION,
    workers: int = 1,
) -> CrossoverResult:
    """Certified wheel sign table over n_lo..n_hi and the first flip to ABC."""
    if not (4 <= n_lo < n_hi):
        raise ValueError(f"need 4 <= n_lo < n_hi, got {n_lo}, {n_hi}")
    orders = list(range(n_lo, n_hi + 1))
    if workers > 1:
        from .parallel import parallel_map

        signs = parallel_map(_wheel_sign_task, [(n, max_precision) for n in orders], workers)
    else:
        signs = [_wheel_sign_task((n, max_precision)) for n in orders]
    bad = [n for n, s in zip(orders, signs) if s is Sign.INDETERMINATE]
    if bad:
        raise IndeterminateSignError(f"indeterminate wheel sign at orders {bad}")
    table = tuple(zip(orders, signs))
    first = next((n for n, s in table if s is Sign.ABC_GREATER), None)
    return CrossoverResult(first_flip=first, signs=table)


def _wheel_sign_task(args: tuple[int, int]) -> Sign:
    return wheel_sign(*args)


# -- exhaustive consistency sweep ---------------------------------------------


def consistency_sweep(
    graphs,
    max_precision: int = DEFAULT_MAX_PRECISION,
    workers: int = 1,
) -> list[TheoremReport]:
    """verify_all_applicable over a graph collection; falsification aborts.

    Reports are returned sorted by (graph6, theorem id) so the serialized
    output does not depend on how the work was partitioned.
    """
    items = [(g, max_precision) for g in graphs]
    if workers > 1:
        from .parallel import parallel_map

        chunks = parallel_map(_sweep_task, items, workers)
    else:
        chunks = [_sweep_task(it) for it in items]
    reports = list(itertools.chain.from_iterable(chunks))
    reports.sort(key=lambda r: (r.graph_id, r.theorem.value))
    return reports


def _sweep_task(args: tuple[Graph, int]) -> list[TheoremReport]:
    g, max_precision = args
    return verify_all_applicable(g, max_precision)


# -- serialization -------------------------------------------------------------


def sandwich_json(r: SandwichReport) -> dict:
    from .intervals import decimal_str

    return {
        "graph6": r.graph_id,
        "n": r.n,
        "left_status": r.left_status.value,
        "right_status": r.right_status.value,
        "left_lo": decimal_str(r.left_diff.lo_fraction(), 17, "down"),
        "left_hi": decimal_str(r.left_diff.hi_fraction(), 17, "up"),
        "right_lo": decimal_str(r.right_diff.lo_fraction(), 17, "down"),
        "right_hi": decimal_str(r.right_diff.hi_fraction(), 17, "up"),
        "holds": r.holds,
        "precision": r.precision_used,
    }


def report_json(r: TheoremReport) -> dict:
    """JSON form: theorem, graph6, clauses[], verdict, gap_lo, gap_hi, precision."""
    from .intervals import decimal_str

    out: dict = {
        "theorem": r.theorem.value,
        "graph6": r.graph_id,
        "clauses": [
            {"name": c.name, "holds": c.holds, **({"note": c.note} if c.note else {})}
            for c in r.clauses
        ],
        "hypothesis_holds": r.hypothesis_holds,
    }
    if r.conclusion_graph_id != r.graph_id:
        out["conclusion_graph6"] = r.conclusion_graph_id
    v = r.verdict
    if isinstance(v, ComparisonVerdict):
        out["verdict"] = v.sign.value
        out["gap_lo"] = decimal_str(v.gap.lo_fraction(), 17, "down")
        out["gap_hi"] = decimal_str(v.gap.hi_fraction(), 17, "up")
        out["precision"] = v.precision_used
    elif isinstance(v, SandwichReport):
        out["verdict"] = sandwich_json(v)
        out["precision"] = v.precision_used
    else:
        out["verdict"] = None
    out["consistent"] = r.consistent
    return out

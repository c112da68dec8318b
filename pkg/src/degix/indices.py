"""GA and ABC indices with certified sign comparison.

Both indices are sums over edges of a term that depends only on the two
endpoint degrees, so whole-graph values are computed from the edge-degree
census (term enclosure times multiplicity).  The comparison ``GA - ABC`` is
a sum of radicals that can sit arbitrarily close to zero; it is therefore
accumulated term-by-term as an interval and its sign is only reported when
the enclosure excludes zero, escalating precision along the ladder
64 -> 128 -> 256 -> 512 when it does not.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import EdgeDegreeCensus, Graph, edge_degree_census
from .intervals import (
    DEFAULT_MAX_PRECISION,
    DEFAULT_PRECISION,
    Interval,
    precision_ladder,
)


class Sign(enum.Enum):
    GA_GREATER = "GA_GREATER"
    ABC_GREATER = "ABC_GREATER"
    INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class ComparisonVerdict:
    """Certified sign of GA(G) - ABC(G).

    GA_GREATER guarantees gap.lo > 0 and ABC_GREATER guarantees gap.hi < 0;
    INDETERMINATE means the maximum precision was reached with zero still
    inside the enclosure.
    """

    sign: Sign
    gap: Interval
    precision_used: int


def _check_degrees(a: int, b: int) -> None:
    if a < 1 or b < 1:
        raise ValueError(f"degrees must be positive integers, got ({a}, {b})")


def theta_term(a: int, b: int, precision: int = DEFAULT_PRECISION) -> Interval:
    """Per-edge GA term 2*sqrt(a*b)/(a+b) for endpoint degrees a, b."""
    _check_degrees(a, b)
    root = Interval.exact(a * b, precision).sqrt()
    return root.scaled(2) / Interval.exact(a + b, precision)


def phi_term(a: int, b: int, precision: int = DEFAULT_PRECISION) -> Interval:
    """Per-edge ABC term sqrt((a+b-2)/(a*b)) for endpoint degrees a, b."""
    _check_degrees(a, b)
    return Interval.ratio(a + b - 2, a * b, precision).sqrt()


def term_gap(a: int, b: int, precision: int = DEFAULT_PRECISION) -> Interval:
    """Per-edge difference theta - phi."""
    return theta_term(a, b, precision) - phi_term(a, b, precision)


def _census_sum(census: EdgeDegreeCensus, term, precision: int) -> Interval:
    acc = Interval.zero(precision)
    for (a, b), count in census.items():
        acc = acc + term(a, b, precision).scaled(count)
    return acc


def ga_index(g: Graph, precision: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of the GA index; 0 for edgeless graphs."""
    return _census_sum(edge_degree_census(g), theta_term, precision)


def abc_index(g: Graph, precision: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of the ABC index; 0 for edgeless graphs."""
    return _census_sum(edge_degree_census(g), phi_term, precision)


def ga_general(g: Graph, quantities, precision: int = DEFAULT_PRECISION) -> Interval:
    """Generic geometric-arithmetic functional over a per-vertex quantity.

    ``quantities`` assigns a positive number to every vertex; each edge
    contributes sqrt(q_u*q_v) / ((q_u+q_v)/2).  With the degree sequence as
    the quantity this reduces to the GA index.
    """
    q = list(quantities)
    if len(q) != g.n:
        raise ValueError(f"expected {g.n} vertex quantities, got {len(q)}")
    iq = [Interval.exact(x, precision) for x in q]
    for v, x in enumerate(iq):
        if not x.is_positive():
            raise ValueError(f"vertex quantity for {v} must be positive, got {q[v]}")
    acc = Interval.zero(precision)
    two = Interval.exact(2, precision)
    for u, v in g.edges():
        acc = acc + ((iq[u] * iq[v]).sqrt() * two) / (iq[u] + iq[v])
    return acc


def gap_from_census(census: EdgeDegreeCensus, precision: int) -> Interval:
    """Enclosure of GA - ABC accumulated as per-pair (theta - phi) terms."""
    return _census_sum(census, term_gap, precision)


def compare_ga_abc(
    g: Graph,
    max_precision: int = DEFAULT_MAX_PRECISION,
    start_precision: int = DEFAULT_PRECISION,
) -> ComparisonVerdict:
    """Certified sign of GA(G) - ABC(G), escalating precision as needed."""
    census = edge_degree_census(g)
    return compare_from_census(census, max_precision, start_precision)


def compare_from_census(
    census: EdgeDegreeCensus,
    max_precision: int = DEFAULT_MAX_PRECISION,
    start_precision: int = DEFAULT_PRECISION,
) -> ComparisonVerdict:
    gap = None
    for p in precision_ladder(max_precision, start_precision):
        gap = gap_from_census(census, p)
        if gap.is_positive():
            return ComparisonVerdict(Sign.GA_GREATER, gap, p)
        if gap.is_negative():
            return ComparisonVerdict(Sign.ABC_GREATER, gap, p)
    return ComparisonVerdict(Sign.INDETERMINATE, gap, max_precision)

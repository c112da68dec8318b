"""Exhaustive small-graph enumeration and conjecture scanning.

Connected graphs on up to 7 vertices are enumerated by sweeping every edge
subset of the complete graph (2**21 labeled graphs at n=7), filtering for
connectivity, and deduplicating isomorphs.  The dedup buckets labeled graphs
by a strong vectorized invariant (degree sequence, triangle count, one round
of neighbor-degree refinement) and then *proves* each bucket is a single
isomorphism class by checking its size against n!/|Aut(representative)|;
any bucket failing that proof is split by exact canonical forms.  Class
counts are additionally asserted against the published sequences, so a
silent merge or split is impossible.

Trees are enumerated up to 12 vertices by decoding every non-decreasing
degree-repetition sequence (the sorted representatives of the classical
bijective tree code) and deduplicating with a center-rooted subtree
encoding; class counts are asserted the same way.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .graphs import (
    CONNECTED_CLASS_COUNTS,
    TREE_CLASS_COUNTS,
    Graph,
    build_graph,
    canonical_form,
    graph6_decode,
    graph6_encode,
    is_connected,
)
from .indices import ComparisonVerdict, Sign, compare_ga_abc
from .intervals import Interval
from .theorems import Clause, TheoremId, verify_theorem
from .families import FamilyError, FamilySpec, generate

MAX_BUILTIN_ORDER = 7
MAX_TREE_ORDER = 12


class EnumerationIntegrityError(RuntimeError):
    """Internal enumeration produced counts that contradict known values."""


# -- connected graphs on <= 7 vertices ---------------------------------------


def _pair_list(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def _connected_masks(n: int, pairs) -> np.ndarray:
    """Bitmasks (over the pair list) of all connected labeled graphs."""
    nb = len(pairs)
    masks = np.arange(1 << nb, dtype=np.uint32)
    nbr = [np.zeros(1 << nb, dtype=np.uint8) for _ in range(n)]
    for i, (u, v) in enumerate(pairs):
        b = ((masks >> np.uint32(i)) & np.uint32(1)).astype(np.uint8)
        nbr[u] |= b << np.uint8(v)
        nbr[v] |= b << np.uint8(u)
    reach = np.ones(1 << nb, dtype=np.uint8)  # vertex 0 reached
    for _ in range(n - 1):
        for v in range(n):
            reach |= nbr[v] * ((reach >> np.uint8(v)) & np.uint8(1))
    return masks[reach == np.uint8((1 << n) - 1)]


_HASH_MULT = np.uint64(0x9E3779B97F4A7C15)  # fixed odd multiplier, deterministic runs


def _invariant_groups(n: int, pairs, cm: np.ndarray) -> np.ndarray:
    """Group index per connected mask under an isomorphism-invariant key.

    The key (edge count, triangle count, sorted degrees, sorted one-round
    neighbor-degree colors) is folded into a 64-bit mix for fast grouping.
    A fold collision could only merge two groups, and every group is later
    proven to be a single isomorphism class by the automorphism-orbit count
    (with an exact canonical-form split as fallback), so correctness never
    rests on the hash.
    """
    nb = len(pairs)
    ebits = [((cm >> np.uint32(i)) & np.uint32(1)).astype(np.uint8) for i in range(nb)]
    deg = np.zeros((len(cm), n), dtype=np.uint8)
    for i, (u, v) in enumerate(pairs):
        deg[:, u] += ebits[i]
        deg[:, v] += ebits[i]
    tri = np.zeros(len(cm), dtype=np.uint8)
    index = {p: i for i, p in enumerate(pairs)}
    for a, b, c in itertools.combinations(range(n), 3):
        tri += ebits[index[(a, b)]] & ebits[index[(a, c)]] & ebits[index[(b, c)]]
    # one refinement round: per-vertex sum of 8**(neighbor degree)
    pow8 = np.power(np.int64(8), deg.astype(np.int64))
    ncol = np.zeros((len(cm), n), dtype=np.int64)
    for i, (u, v) in enumerate(pairs):
        e = ebits[i].astype(np.int64)
        ncol[:, u] += e * pow8[:, v]
        ncol[:, v] += e * pow8[:, u]
    colors = deg.astype(np.int64) * np.int64(8**8) + ncol
    h = np.bitwise_count(cm).astype(np.uint64)
    h = h * _HASH_MULT + tri.astype(np.uint64)
    for col in np.sort(deg, axis=1).astype(np.uint64).T:
        h = h * _HASH_MULT + col
    for col in np.sort(colors, axis=1).astype(np.uint64).T:
        h = h * _HASH_MULT + col
    _, groups = np.unique(h, return_inverse=True)
    return groups


def _permutation_bit_table(n: int, pairs) -> np.ndarray:
    """For each vertex permutation, where each adjacency bit moves to."""
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    table = np.zeros((len(perms), len(pairs)), dtype=np.int64)
    for pi, perm in enumerate(perms):
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            table[pi, i] = index[(a, b) if a < b else (b, a)]
    return table


def _mask_to_graph(n: int, pairs, mask: int) -> Graph:
    return build_graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


@lru_cache(maxsize=None)
def enumerate_connected(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Built-in for 1 <= n <= 7; larger orders must be ingested from graph6
    files produced by an external enumerator.  The returned tuple is sorted
    by (edge count, adjacency bitmask) and its length is asserted against
    the published class counts.
    """
    if not 1 <= n <= MAX_BUILTIN_ORDER:
        raise ValueError(
            f"built-in enumeration covers 1..{MAX_BUILTIN_ORDER} vertices (got {n}); "
            "ingest a graph6 file for larger orders"
        )
    if n == 1:
        return (build_graph(1, []),)
    pairs = _pair_list(n)
    cm = _connected_masks(n, pairs)
    groups = _invariant_groups(n, pairs, cm)
    n_groups = int(groups.max()) + 1
    sizes = np.bincount(groups, minlength=n_groups)
    first = np.zeros(n_groups, dtype=np.int64)
    first[groups[::-1]] = np.arange(len(groups) - 1, -1, -1)  # first occurrence

    # prove each bucket is one isomorphism class: size must equal n!/|Aut(rep)|
    perm_table = _permutation_bit_table(n, pairs)
    powers = np.int64(1) << np.arange(len(pairs), dtype=np.int64)
    fact = math.factorial(n)
    reps: list[int] = []
    for b in range(n_groups):
        rep = int(cm[first[b]])
        bits = (rep >> np.arange(len(pairs), dtype=np.int64)) & 1
        vals = bits[perm_table] @ powers
        aut = int(np.count_nonzero(vals == rep))
        if int(sizes[b]) == fact // aut:
            reps.append(rep)
        else:
            reps.extend(_split_bucket(n, pairs, cm[groups == b]))

    graphs = [_mask_to_graph(n, pairs, r) for r in reps]
    graphs.sort(key=lambda g: (g.m, tuple(g.edges())))
    expected = CONNECTED_CLASS_COUNTS[n - 1]
    if len(graphs) != expected:
        raise EnumerationIntegrityError(
            f"connected classes on {n} vertices: found {len(graphs)}, expected {expected}"
        )
    return tuple(graphs)


def _split_bucket(n: int, pairs, masks: np.ndarray) -> list[int]:
    """Exact per-member canonical split for an invariant collision."""
    reps: dict[bytes, int] = {}
    for mask in masks:
        g = _mask_to_graph(n, pairs, int(mask))
        key = canonical_form(g)
        reps.setdefault(key, int(mask))
    return list(reps.values())


# -- trees up to 12 vertices ---------------------------------------------------


def _decode_degree_sequence(seq: tuple[int, ...], n: int) -> list[list[int]]:
    """Classical bijective tree code decode (smallest-leaf-first) to adjacency."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    adj: list[list[int]] = [[] for _ in range(n)]
    for x in seq:
        leaf = heapq.heappop(leaves)
        adj[leaf].append(x)
        adj[x].append(leaf)
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = leaves
    adj[u].append(v)
    adj[v].append(u)
    return adj


def _tree_key(n: int, adj) -> str:
    """Canonical encoding: sorted nested subtree strings rooted at a center."""
    if n == 1:
        return "()"
    deg = [len(a) for a in adj]
    remaining = n
    layer = [v for v in range(n) if deg[v] <= 1]
    while remaining > 2:
        nxt = []
        for v in layer:
            deg[v] = 0
            remaining -= 1
            for w in adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in range(n) if deg[v] >= 1]

    def encode(v: int, parent: int) -> str:
        subs = sorted(encode(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(c, -1) for c in centers)


def tree_canonical_key(g: Graph) -> str:
    """Canonical tree encoding; equal for two trees iff they are isomorphic."""
    return _tree_key(g.n, g.adj)


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """One representative per tree isomorphism class on n vertices (n <= 12)."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree enumeration covers 1..{MAX_TREE_ORDER} vertices (got {n})")
    found: dict[str, Graph] = {}
    if n == 1:
        found["()"] = build_graph(1, [])
    elif n == 2:
        found["(())"] = build_graph(2, [(0, 1)])
    else:
        for seq in itertools.combinations_with_replacement(range(n), n - 2):
            adj = _decode_degree_sequence(seq, n)
            key = _tree_key(n, adj)
            if key not in found:
                found[key] = build_graph(
                    n, [(u, v) for u in range(n) for v in adj[u] if u < v]
                )
    expected = TREE_CLASS_COUNTS[n - 1]
    if len(found) != expected:
        raise EnumerationIntegrityError(
            f"tree classes on {n} vertices: found {len(found)}, expected {expected}"
        )
    return tuple(found[k] for k in sorted(found))


# -- conjecture scan -----------------------------------------------------------


@dataclass(frozen=True)
class ScanResult:
    """Outcome of a nonequality scan over a stream of graphs.

    ``min_abs_gap`` names the scanned graph with the smallest |GA - ABC|
    (by exact midpoint, graph6 lexicographic tiebreak) together with its gap
    enclosure.  ``violations`` would hold certified-equality graphs; finding
    one falsifies the nonequality conjecture and callers treat it as a
    process-level failure.
    """

    graphs_scanned: int
    min_abs_gap: tuple[str, Interval] | None
    indeterminates: tuple[str, ...]
    violations: tuple[str, ...]


@dataclass(frozen=True)
class ScanRow:
    """Per-graph verdict of a nonequality scan (CSV-friendly)."""

    graph6: str
    sign: Sign
    precision: int
    gap_lo: str   # outward-rounded decimal bounds, rigorous as printed
    gap_hi: str
    abs_mid: Fraction
    exact_zero: bool


def _scan_task(args: tuple[Graph, int]) -> tuple | None:
    from .intervals import decimal_str

    g, max_precision = args
    if g.n < 2 or not is_connected(g):
        return None
    verdict = compare_ga_abc(g, max_precision)
    mid = verdict.gap.midpoint()
    return (
        graph6_encode(g),
        verdict.sign.value,
        verdict.precision_used,
        decimal_str(verdict.gap.lo_fraction(), 17, "down"),
        decimal_str(verdict.gap.hi_fraction(), 17, "up"),
        abs(mid.numerator),
        mid.denominator,
        verdict.gap.lo == 0 and verdict.gap.hi == 0,
    )


def scan_rows(source, max_precision: int = 256, workers: int = 1) -> list[ScanRow]:
    """Per-graph certified rows over every connected non-trivial graph.

    The row list is independent of stream partitioning and order: workers
    return plain tuples and the merge sorts by graph6 string.  Trivial and
    disconnected entries are skipped.
    """
    items = [(g, max_precision) for g in source]
    if workers > 1:
        from .parallel import parallel_map

        raw = parallel_map(_scan_task, items, workers)
    else:
        raw = [_scan_task(it) for it in items]
    rows = [
        ScanRow(g6, Sign(sign), prec, lo, hi, Fraction(num, den), zero)
        for g6, sign, prec, lo, hi, num, den, zero in (r for r in raw if r is not None)
    ]
    rows.sort(key=lambda r: r.graph6)
    return rows


def summarize_scan(rows: list[ScanRow], max_precision: int = 256) -> ScanResult:
    """Deterministic reduction of scan rows to a ScanResult."""
    indeterminates = tuple(r.graph6 for r in rows if r.sign is Sign.INDETERMINATE)
    # a width-zero enclosure pinned at 0 would certify GA = ABC exactly
    violations = tuple(r.graph6 for r in rows if r.exact_zero)
    min_abs: tuple[str, Interval] | None = None
    best = min(((r.abs_mid, r.graph6) for r in rows), default=None)
    if best is not None:
        g6 = best[1]
        verdict = compare_ga_abc(graph6_decode(g6), max_precision)
        min_abs = (g6, verdict.gap)
    return ScanResult(
        graphs_scanned=len(rows),
        min_abs_gap=min_abs,
        indeterminates=indeterminates,
        violations=violations,
    )


def scan_conjecture(source, max_precision: int = 256, workers: int = 1) -> ScanResult:
    """Certified-sign scan of GA - ABC over every connected non-trivial graph."""
    return summarize_scan(scan_rows(source, max_precision, workers), max_precision)


# -- parameterized family sweeps ------------------------------------------------


def scan_result_json(result: ScanResult) -> dict:
    from .intervals import interval_json

    out: dict = {
        "graphs_scanned": result.graphs_scanned,
        "indeterminates": list(result.indeterminates),
        "violations": list(result.violations),
    }
    if result.min_abs_gap is not None:
        g6, gap = result.min_abs_gap
        out["min_abs_gap"] = {"graph6": g6, "gap": interval_json(gap)}
    else:
        out["min_abs_gap"] = None
    return out


@dataclass(frozen=True)
class SweepRow:
    params: tuple[int, ...]
    graph_id: str | None
    clauses: tuple[Clause, ...] | None
    hypothesis_holds: bool | None
    sign: Sign | None
    gap: Interval | None
    error: str | None = None


def _sweep_row_task(args) -> SweepRow:
    kind, params, theorem, max_precision = args
    try:
        g = generate(FamilySpec(kind, params))
    except FamilyError as exc:
        return SweepRow(params, None, None, None, None, None, str(exc))
    if theorem is None:
        verdict = compare_ga_abc(g, max_precision)
        return SweepRow(params, graph6_encode(g), None, None, verdict.sign, verdict.gap)
    report = verify_theorem(theorem, g, max_precision)
    verdict = report.verdict
    sign = verdict.sign if isinstance(verdict, ComparisonVerdict) else None
    gap = verdict.gap if isinstance(verdict, ComparisonVerdict) else None
    return SweepRow(
        params, report.graph_id, report.clauses, report.hypothesis_holds, sign, gap
    )


def sweep_family(
    kind,
    params_list,
    theorem: TheoremId | None = None,
    max_precision: int = 512,
    workers: int = 1,
) -> list[SweepRow]:
    """One verdict row per parameter tuple; generation errors stay per-row."""
    items = [(kind, tuple(p), theorem, max_precision) for p in params_list]
    if workers > 1:
        from .parallel import parallel_map

        return parallel_map(_sweep_row_task, items, workers)
    return [_sweep_row_task(it) for it in items]

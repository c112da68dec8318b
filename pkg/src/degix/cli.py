"""Command-line front end with machine-readable output.

Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 mathematical
inconsistency (a falsified statement or a certified-equality counterexample;
reserved exclusively for that).  Output is buffered and flushed whole, so a
failure never leaves partial output behind.  Row output is ordered by graph6
string or parameter value, which keeps repeated and parallel invocations
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .families import FamilyError, FamilyKind, generate, parse_family_spec
from .graphs import (
    Graph,
    Graph6ParseError,
    GraphConstructionError,
    degree_stats,
    edge_degree_census,
    graph6_decode,
    graph6_encode,
    parse_edge_list,
)
from .indices import abc_index, compare_ga_abc, ga_index
from .intervals import PRECISION_LADDER, interval_json
from .linegraph import is_line_graph, line_graph
from .search import (
    enumerate_connected,
    enumerate_trees,
    scan_result_json,
    scan_rows,
    summarize_scan,
    sweep_family,
)
from .theorems import (
    PreconditionError,
    TheoremFalsified,
    TheoremId,
    check_sandwich,
    crossover_scan,
    report_json,
    sandwich_json,
    verify_theorem,
)

CSV_HEADER = "# degix csv v1"
PRECISION_ENV = "DEGIX_MAX_PRECISION"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit(2); usage errors are exit 1
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="degix", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_io(p, sources=True):
        if sources:
            p.add_argument("--family", help='family spec, e.g. "wheel:195" or "starlike:4,3,2,2"')
            p.add_argument("--g6", help="path to a graph6 file, one record per line")
            p.add_argument("--edges", help='path to an edge-list file ("n m" then "u v" lines)')
        p.add_argument("--precision", type=int, default=128,
                       help="precision ceiling in bits (64, 128, 256 or 512)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--workers", type=int, default=1)

    add_io(sub.add_parser("compute", help="GA/ABC enclosures and certified comparison"))
    add_io(sub.add_parser("census", help="edge endpoint-degree census"))
    add_io(sub.add_parser("family", help="generate a named family graph"))
    add_io(sub.add_parser("linegraph", help="construct the line graph"))
    add_io(sub.add_parser("recognize", help="line-graph recognition with evidence"))

    p = sub.add_parser("verify", help="per-graph theorem reports")
    p.add_argument("--theorem", required=True,
                   choices=[t.value for t in TheoremId])
    add_io(p)

    add_io(sub.add_parser("sandwich", help="two-sided ABC/GA bound check"))

    p = sub.add_parser("crossover", help="wheel family sign scan")
    p.add_argument("--range", default="4..300", help="order range LO..HI (inclusive)")
    add_io(p, sources=False)

    p = sub.add_parser("enumerate", help="exhaustive small-graph streams")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--kind", choices=("graphs", "trees"), default="graphs")
    add_io(p, sources=False)

    p = sub.add_parser("conjecture", help="nonequality scan over exhaustive streams")
    p.add_argument("--max-n", type=int, help="connected graphs up to this order")
    p.add_argument("--trees-max-n", type=int, default=0, help="also scan trees up to this order")
    p.add_argument("--g6", help="scan the graphs in this graph6 file instead")
    add_io(p, sources=False)

    p = sub.add_parser("sweep", help="parameterized family sweep")
    p.add_argument("--kind", required=True,
                   choices=("wheel", "boundary-bipartite", "clique-bridge"))
    p.add_argument("--range", required=True, help="parameter range LO..HI (inclusive)")
    p.add_argument("--q", type=int, default=3, help="second clique size for clique-bridge")
    p.add_argument("--theorem", choices=[t.value for t in TheoremId])
    add_io(p, sources=False)

    return parser


def _ceiling(args) -> int:
    env = os.environ.get(PRECISION_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"{PRECISION_ENV} must be an integer, got {env!r}") from None
    else:
        value = args.precision
    if value not in PRECISION_LADDER:
        raise UsageError(
            f"precision must be one of {PRECISION_LADDER}, got {value}"
        )
    return value


def _load_graphs(args) -> list[Graph]:
    sources = [s for s in (args.family, args.g6, args.edges) if s]
    if len(sources) != 1:
        raise UsageError("exactly one of --family, --g6, --edges is required")
    if args.family:
        return [generate(parse_family_spec(args.family))]
    if args.g6:
        with open(args.g6) as fh:
            return [graph6_decode(line) for line in fh if line.strip()]
    with open(args.edges) as fh:
        return [parse_edge_list(fh.read())]


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f'range must look like "LO..HI", got {text!r}')
    try:
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"range endpoints must be integers, got {text!r}") from None


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _dump_csv(verb: str, columns: list[str], rows: list[list]) -> str:
    lines = [f"{CSV_HEADER} {verb}", ",".join(columns)]
    for row in rows:
        lines.append(",".join("" if v is None else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _graph_rows(graphs, fn) -> list[dict]:
    rows = [fn(g) for g in graphs]
    rows.sort(key=lambda r: r["graph6"])
    return rows


# -- verb handlers -----------------------------------------------------------


def _run_compute(args) -> tuple[str, int]:
    ceiling = _ceiling(args)

    def row(g: Graph) -> dict:
        verdict = compare_ga_abc(g, ceiling)
        return {
            "graph6": graph6_encode(g),
            "n": g.n,
            "m": g.m,
            "ga": interval_json(ga_index(g, ceiling)),
            "abc": interval_json(abc_index(g, ceiling)),
            "verdict": verdict.sign.value,
            "gap": interval_json(verdict.gap),
            "precision_used": verdict.precision_used,
        }

    rows = _graph_rows(_load_graphs(args), row)
    if args.format == "csv":
        cols = ["graph6", "n", "m", "ga_lo", "ga_hi", "ga_mid", "abc_lo", "abc_hi",
                "abc_mid", "verdict", "gap_lo", "gap_hi", "precision_used"]
        data = [[r["graph6"], r["n"], r["m"], r["ga"]["lo"], r["ga"]["hi"], r["ga"]["mid"],
                 r["abc"]["lo"], r["abc"]["hi"], r["abc"]["mid"], r["verdict"],
                 r["gap"]["lo"], r["gap"]["hi"], r["precision_used"]] for r in rows]
        return _dump_csv("compute", cols, data), 0
    return _dump_json(rows[0] if len(rows) == 1 else rows), 0


def _run_census(args) -> tuple[str, int]:
    def row(g: Graph) -> dict:
        census = edge_degree_census(g)
        return {
            "graph6": graph6_encode(g),
            "m": g.m,
            "census": [{"a": a, "b": b, "count": c} for (a, b), c in census.items()],
        }

    rows = _graph_rows(_load_graphs(args), row)
    if args.format == "csv":
        data = [[r["graph6"], e["a"], e["b"], e["count"]] for r in rows for e in r["census"]]
        return _dump_csv("census", ["graph6", "a", "b", "count"], data), 0
    return _dump_json(rows[0] if len(rows) == 1 else rows), 0


def _run_family(args) -> tuple[str, int]:
    if not args.family:
        raise UsageError("family verb requires --family")
    g = generate(parse_family_spec(args.family))
    stats = degree_stats(g)
    out = {
        "family": args.family,
        "graph6": graph6_encode(g),
        "n": g.n,
        "m": g.m,
        "max_degree": stats.delta_max,
        "min_degree": stats.delta_min,
        "pendant_count": stats.pendant_count,
    }
    if args.format == "csv":
        cols = list(out)
        return _dump_csv("family", cols, [[out[c] for c in cols]]), 0
    return _dump_json(out), 0


def _run_linegraph(args) -> tuple[str, int]:
    def row(g: Graph) -> dict:
        lg = line_graph(g)
        return {"graph6": graph6_encode(g), "line_graph6": graph6_encode(lg),
                "n": lg.n, "m": lg.m}

    rows = _graph_rows(_load_graphs(args), row)
    if args.format == "csv":
        data = [[r["graph6"], r["line_graph6"], r["n"], r["m"]] for r in rows]
        return _dump_csv("linegraph", ["graph6", "line_graph6", "n", "m"], data), 0
    return _dump_json(rows[0] if len(rows) == 1 else rows), 0


def _run_recognize(args) -> tuple[str, int]:
    def row(g: Graph) -> dict:
        ok, violation = is_line_graph(g)
        return {
            "graph6": graph6_encode(g),
            "is_line_graph": ok,
            "violation": None if violation is None else
                {"kind": violation.kind, "vertices": list(violation.vertices)},
        }

    rows = _graph_rows(_load_graphs(args), row)
    if args.format == "csv":
        data = [[r["graph6"], r["is_line_graph"],
                 "" if r["violation"] is None else r["violation"]["kind"],
                 "" if r["violation"] is None else
                 " ".join(str(v) for v in r["violation"]["vertices"])] for r in rows]
        return _dump_csv("recognize", ["graph6", "is_line_graph", "kind", "vertices"], data), 0
    return _dump_json(rows[0] if len(rows) == 1 else rows), 0


def _run_verify(args) -> tuple[str, int]:
    ceiling = _ceiling(args)
    theorem = TheoremId(args.theorem)
    rows = []
    code = 0
    for g in _load_graphs(args):
        g6 = graph6_encode(g)
        try:
            rows.append(report_json(verify_theorem(theorem, g, ceiling)))
        except PreconditionError as exc:
            rows.append({"theorem": theorem.value, "graph6": g6, "error": str(exc)})
        except TheoremFalsified as exc:
            rows.append(report_json(exc.report))
            code = 3
    rows.sort(key=lambda r: r["graph6"])
    if args.format == "csv":
        cols = ["graph6", "hypothesis_holds", "verdict", "gap_lo", "gap_hi",
                "precision", "consistent", "error"]
        data = [[r["graph6"], r.get("hypothesis_holds"),
                 r.get("verdict") if isinstance(r.get("verdict"), (str, type(None))) else "sandwich",
                 r.get("gap_lo"), r.get("gap_hi"), r.get("precision"),
                 r.get("consistent"), r.get("error")] for r in rows]
        return _dump_csv(f"verify {theorem.value}", cols, data), code
    return _dump_json(rows[0] if len(rows) == 1 else rows), code


def _run_sandwich(args) -> tuple[str, int]:
    ceiling = _ceiling(args)
    rows = []
    code = 0
    for g in _load_graphs(args):
        try:
            report = check_sandwich(g, ceiling)
        except PreconditionError as exc:
            rows.append({"graph6": graph6_encode(g), "error": str(exc)})
            continue
        rows.append(sandwich_json(report))
        if "VIOLATION" in (report.left_status.value, report.right_status.value):
            code = 3
    rows.sort(key=lambda r: r["graph6"])
    if args.format == "csv":
        cols = ["graph6", "n", "left_status", "right_status", "holds", "precision", "error"]
        data = [[r.get(c) for c in cols] for r in rows]
        return _dump_csv("sandwich", cols, data), code
    return _dump_json(rows[0] if len(rows) == 1 else rows), code


def _run_crossover(args) -> tuple[str, int]:
    ceiling = _ceiling(args)
    lo, hi = _parse_range(args.range)
    if not 4 <= lo < hi:
        raise UsageError(f"crossover range needs 4 <= LO < HI, got {args.range}")
    result = crossover_scan(lo, hi, ceiling, workers=args.workers)
    if args.format == "csv":
        data = [[n, s.value] for n, s in result.signs]
        return _dump_csv("crossover", ["n", "sign"], data), 0
    return _dump_json({
        "first_flip": result.first_flip,
        "signs": [[n, s.value] for n, s in result.signs],
    }), 0


def _run_enumerate(args) -> tuple[str, int]:
    if args.kind == "graphs" and not 1 <= args.max_n <= 7:
        raise UsageError("built-in graph enumeration supports --max-n 1..7; "
                         "ingest a graph6 file for larger orders")
    if args.kind == "trees" and not 1 <= args.max_n <= 12:
        raise UsageError("tree enumeration supports --max-n 1..12")
    enum = enumerate_trees if args.kind == "trees" else enumerate_connected
    counts = {}
    rows = []
    for n in range(1, args.max_n + 1):
        graphs = enum(n)
        counts[str(n)] = len(graphs)
        rows.extend({"n": n, "graph6": graph6_encode(g)} for g in graphs)
    if args.format == "csv":
        return _dump_csv(f"enumerate {args.kind}", ["n", "graph6"],
                         [[r["n"], r["graph6"]] for r in rows]), 0
    return _dump_json({"kind": args.kind, "counts": counts, "graphs": rows}), 0


def _run_conjecture(args) -> tuple[str, int]:
    ceiling = _ceiling(args)
    if (args.g6 is None) == (args.max_n is None):
        raise UsageError("conjecture needs exactly one stream source: --max-n or --g6")
    graphs: list[Graph] = []
    if args.g6 is not None:
        with open(args.g6) as fh:
            graphs = [graph6_decode(line) for line in fh if line.strip()]
    else:
        for n in range(2, args.max_n + 1):
            graphs.extend(enumerate_connected(n))
        for n in range(2, args.trees_max_n + 1):
            if n <= args.max_n:
                continue  # trees on <= max_n vertices are already in the stream
            graphs.extend(enumerate_trees(n))
    rows = scan_rows(graphs, ceiling, workers=args.workers)
    result = summarize_scan(rows, ceiling)
    code = 3 if result.violations else 0
    if args.format == "csv":
        data = [[r.graph6, r.sign.value, r.gap_lo, r.gap_hi, r.precision] for r in rows]
        return _dump_csv("conjecture", ["graph6", "sign", "gap_lo", "gap_hi", "precision"],
                         data), code
    return _dump_json(scan_result_json(result)), code


def _run_sweep(args) -> tuple[str, int]:
    ceiling = _ceiling(args)
    lo, hi = _parse_range(args.range)
    if lo > hi:
        raise UsageError(f"range needs LO <= HI, got {args.range}")
    theorem = TheoremId(args.theorem) if args.theorem else None
    if args.kind == "wheel":
        kind, params = FamilyKind.WHEEL, [(n,) for n in range(lo, hi + 1)]
    elif args.kind == "boundary-bipartite":
        kind = FamilyKind.COMPLETE_BIPARTITE
        params = [(d, (2 * d - 1) ** 2 + d + 1) for d in range(lo, hi + 1)]
    else:
        kind, params = FamilyKind.CLIQUE_BRIDGE, [(p, args.q) for p in range(lo, hi + 1)]
    rows = sweep_family(kind, params, theorem, ceiling, workers=args.workers)
    out = []
    for r in rows:
        entry: dict = {"params": list(r.params)}
        if r.error:
            entry["error"] = r.error
        else:
            entry["graph6"] = r.graph_id
            if r.clauses is not None:
                entry["clauses"] = [{"name": c.name, "holds": c.holds} for c in r.clauses]
                entry["hypothesis_holds"] = r.hypothesis_holds
            if r.sign is not None:
                entry["sign"] = r.sign.value
                entry["gap"] = interval_json(r.gap)
        out.append(entry)
    if args.format == "csv":
        cols = ["params", "graph6", "hypothesis_holds", "sign", "error"]
        data = [[" ".join(str(p) for p in r.params), r.graph_id,
                 r.hypothesis_holds, None if r.sign is None else r.sign.value,
                 r.error] for r in rows]
        return _dump_csv(f"sweep {args.kind}", cols, data), 0
    return _dump_json(out), 0


_HANDLERS = {
    "compute": _run_compute,
    "census": _run_census,
    "family": _run_family,
    "linegraph": _run_linegraph,
    "recognize": _run_recognize,
    "verify": _run_verify,
    "sandwich": _run_sandwich,
    "crossover": _run_crossover,
    "enumerate": _run_enumerate,
    "conjecture": _run_conjecture,
    "sweep": _run_sweep,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = _HANDLERS[args.verb](args)
    except UsageError as exc:
        print(f"degix: usage error: {exc}", file=sys.stderr)
        return 1
    except (OSError, Graph6ParseError, GraphConstructionError, FamilyError) as exc:
        print(f"degix: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"degix: {exc}", file=sys.stderr)
        return 2
    except TheoremFalsified as exc:
        # falsification evidence is the output; exit code 3 is the signal
        print(_dump_json(report_json(exc.report)), end="")
        return 3
    try:
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"degix: {exc}", file=sys.stderr)
        return 2
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

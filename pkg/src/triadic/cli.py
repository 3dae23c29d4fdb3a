"""Command-line interface: ``triadic <subcommand> ...``.

Machine-readable output goes to stdout (or ``-o``), diagnostics to stderr.
Exit status is 0 on success, 1 on usage errors and 2 on data errors.
JSON documents carry ``"schema": "triadic/1"``; floats are written with
six decimals, rounded half to even.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import warnings
from decimal import ROUND_HALF_EVEN, Decimal
from math import comb

import numpy as np

from . import census as cen
from . import generators as gen
from . import hypothesis as hyp
from . import null_models as nm
from .graphs import (
    Digraph,
    GraphError,
    LoopDigraph,
    UndirectedGraph,
    WeightedDigraph,
    read_edge_list,
    to_edge_list,
    to_json,
)
from .montecarlo import run_chunked
from .triads import TRIAD_CLASSES, balanced_loop_digraph_structure, motto_prime_failures, motto_table

SCHEMA = "triadic/1"
log = logging.getLogger("triadic")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------- output

_SIX = Decimal("0.000001")


def _fmt_float(x: float) -> str:
    if not np.isfinite(x):
        return "null"
    d = Decimal(repr(float(x))).quantize(_SIX, rounding=ROUND_HALF_EVEN)
    if d == 0:
        d = abs(d)
    return str(d)


def dumps(obj) -> str:
    """JSON text with fixed key order (as given) and 6-decimal floats."""
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(obj)
    if obj is None:
        return "null"
    if isinstance(obj, (frozenset, set)):
        return dumps(sorted(obj))
    return json.dumps(str(obj))


def _cell(v) -> str:
    if isinstance(v, (float, np.floating)):
        return _fmt_float(v)
    if isinstance(v, (bool, np.bool_)):
        return "Y" if v else "N"
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    return "" if v is None else str(v)


def _text(payload: dict, rows: list) -> str:
    out = []
    for k, v in payload.items():
        if k in ("schema", "rows") or isinstance(v, dict):
            continue
        out.append(f"{k}: {_cell(v)}")
    for k, v in payload.items():
        if isinstance(v, dict):
            out.append(f"{k}:")
            out += [f"  {kk}: {_cell(vv)}" for kk, vv in v.items()]
    if rows:
        cols = list(rows[0])
        cells = [[_cell(r[c]) for c in cols] for r in rows]
        widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
        out.append("  ".join(c.rjust(w) for c, w in zip(cols, widths)))
        out += ["  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in cells]
    return "\n".join(out) + "\n"


def _csv(rows: list) -> str:
    buf = io.StringIO()
    if rows:
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _cell(v) for k, v in r.items()})
    return buf.getvalue()


def _emit(args, command: str, payload: dict, rows: list) -> None:
    doc = {"schema": SCHEMA, "command": command, **payload}
    if args.format == "json":
        text = dumps(doc) + "\n"
    elif args.format == "csv":
        text = _csv(rows)
    else:
        text = _text(doc, rows)
    _write(args, text)


def _write(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------- commands


def _input_mode(args) -> str:
    for mode in ("directed", "loop", "weighted"):
        if getattr(args, mode, False):
            return mode
    return "undirected"


def _census_rows_u(counts, expected=None):
    rows = []
    for i, c in enumerate(counts):
        r = {"edges_in_triad": i, "count": c}
        if expected is not None:
            r["expected"] = float(expected[i])
        rows.append(r)
    return rows


def _census_rows_d(counts, expected=None):
    rows = []
    for cls, c in zip(TRIAD_CLASSES, counts):
        r = {"class": cls.index, "code": cls.code, "count": c}
        if expected is not None:
            r["expected"] = float(expected[cls.index - 1])
        rows.append(r)
    return rows


def cmd_census(args):
    mode = _input_mode(args)
    g = read_edge_list(args.file, mode)
    if mode == "undirected":
        c = cen.census_undirected(g)
        _emit(args, "census", {"mode": mode, "n": g.n, "counts": list(c.counts), "total": c.total},
              _census_rows_u(c.counts))  # fmt: skip
        return
    extra = {}
    if isinstance(g, LoopDigraph):
        loops = sum(1 for u, v in g.arcs if u == v)
        extra["loops_ignored"] = loops
        d = Digraph(g.n, frozenset(a for a in g.arcs if a[0] != a[1]))
    elif isinstance(g, WeightedDigraph):
        d = g.support()
    else:
        d = g
    c = cen.census_directed(d)
    payload = {"mode": mode, "n": g.n, "counts": list(c.counts), "total": c.total, **extra}
    _emit(args, "census", payload, _census_rows_d(c.counts))


def _validated(cls, *values):
    try:
        return cls(*values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _params_from_args(args, kind):
    if (args.edges is None) == (args.p is None):
        raise UsageError("give exactly one of --edges or --p")
    if args.p is not None:
        return _validated(nm.ErParams, args.n, args.p)
    if kind == "undirected":
        if args.edges > comb(args.n, 2):
            raise UsageError(f"--edges {args.edges} exceeds C(n,2) = {comb(args.n, 2)}")
        return nm.ErParams.matching_undirected(args.n, args.edges)
    if kind == "directed":
        return nm.ErParams.matching_directed(args.n, args.edges)
    return nm.ErParams.matching_loop(args.n, args.edges)


def cmd_expected(args):
    if args.n < 1:
        raise UsageError("--n must be positive")
    kind = _input_mode(args)
    params = _params_from_args(args, kind)
    payload = {"mode": kind, "n": params.n, "p": params.p, "total": comb(params.n, 3)}
    if kind == "undirected":
        e = nm.expected_census_undirected(params)
        payload["expected"] = [float(x) for x in e]
        rows = _census_rows_u(range(4), e)
        for r in rows:
            del r["count"]
        if args.wrong_null:
            d = nm.expected_census_directed(params)
            payload["wrong_null"] = {
                "label": "INVALID COMPARISON: directed null model applied to an undirected graph",
                "class_3": float(d[2]),
                "class_16": float(d[15]),
                "expected": [float(x) for x in d],
            }
    elif kind == "directed":
        e = nm.expected_census_directed(params)
        payload["expected"] = [float(x) for x in e]
        payload["intransitive_triples"] = nm.expected_intransitive_triples(params)
        rows = [{k: v for k, v in r.items() if k != "count"} for r in _census_rows_d(range(16), e)]
    else:
        ex = nm.expected_motto_prime_failures(params)
        payload["leading"] = list(ex.leading)
        payload["exact"] = list(ex.exact)
        rows = [
            {"motto": f"M{i + 1}'", "leading": ex.leading[i], "exact": ex.exact[i]} for i in range(4)
        ]
    if args.wrong_null and kind != "undirected":
        raise UsageError("--wrong-null only applies to undirected expectations")
    _emit(args, "expected", payload, rows)


def _report_payload(r: hyp.HypothesisReport) -> dict:
    return r.as_dict()


def _report_rows(r: hyp.HypothesisReport) -> list:
    rows = []
    for i in range(len(r.observed)):
        row = {
            "class": i if r.hypothesis == "GBH" else "intransitive",
            "observed": r.observed[i],
            "expected": r.expected[i],
            "direction": r.direction[i],
            "predicted": r.predicted[i],
            "agrees": r.agrees[i],
        }
        if r.mc_quantile is not None:
            row["mc_quantile"] = r.mc_quantile[i]
        rows.append(row)
    return rows


def _check_seed(args):
    if args.samples < 0:
        raise UsageError("--samples must be nonnegative")
    if args.samples > 0 and args.seed is None:
        raise UsageError("--seed is required when --samples > 0")


def cmd_hypothesis(args):
    _check_seed(args)
    if args.directed:
        g = read_edge_list(args.file, "directed")
        r = hyp.evaluate_gth(g, args.samples, args.seed)
    else:
        g = read_edge_list(args.file, "undirected")
        r = hyp.evaluate_gbh(g, args.samples, args.seed, null=args.null)
    _emit(args, "hypothesis", _report_payload(r), _report_rows(r))


def cmd_karate(args):
    _check_seed(args)
    k = hyp.karate_reference_report(args.samples, args.seed)
    payload = {
        "counts": list(k.gbh.observed),
        "total": comb(34, 3),
        "report": _report_payload(k.gbh),
        "wrong_null": k.wrong_null,
        "dataset": k.dataset,
    }
    _emit(args, "karate", payload, _report_rows(k.gbh))


def cmd_generate(args):
    if args.model == "star":
        g = _validated(gen.star_graph, args.n)
    elif args.model == "cliques":
        g = _validated(gen.clique_union, args.k, args.n)
    elif args.model == "constellation":
        if args.seed is None:
            raise UsageError("--seed is required for random models")
        params = _validated(gen.ConstellationParams, args.k, args.n, args.delta)
        g = gen.sample_constellation(params, args.seed)
    else:
        if args.seed is None:
            raise UsageError("--seed is required for random models")
        params = _validated(nm.ErParams, args.n, args.p)
        if args.directed:
            g = nm.sample_er_directed(params, args.seed)
        elif args.loop:
            g = nm.sample_er_loop(params, args.seed)
        else:
            g = nm.sample_er_undirected(params, args.seed)
    if args.format == "json":
        _write(args, to_json(g) + "\n")
    elif args.format == "csv":
        pairs = sorted(g.edges if isinstance(g, UndirectedGraph) else g.arcs)
        _write(args, "u,v\n" + "".join(f"{u},{v}\n" for u, v in pairs))
    else:
        _write(args, to_edge_list(g))


def cmd_verify_constellation(args):
    _check_seed(args)
    params = _validated(gen.ConstellationParams, args.k, args.n, args.delta)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rep = gen.sign_pattern_report(params)
    for w in caught:
        log.warning("%s", w.message)
    ex = rep.expectation
    payload = {
        "k": params.k,
        "n": params.n,
        "delta": params.delta,
        "in_regime": rep.in_regime,
        "expected_edges": ex.eps,
        "p_match": ex.p_match,
        "constellation": [float(x) for x in ex.constellation],
        "er": [float(x) for x in ex.er],
        "signs": list(rep.signs),
        "matches_pattern": rep.matches_pattern,
        "ratios": {
            "triangles": rep.triangle_ratio,
            "two_edge": rep.wedge_ratio,
            "one_edge_gap": rep.one_edge_gap_ratio,
            "empty_gap": rep.empty_gap_ratio,
            "one_edge_branch": rep.one_edge_branch_ratio,
        },
        "samples": args.samples,
        "seed": args.seed,
    }
    rows = [
        {"edges_in_triad": i, "constellation": float(ex.constellation[i]), "er": float(ex.er[i]),
         "sign": rep.signs[i]}
        for i in range(4)
    ]  # fmt: skip
    if args.samples:
        sims = run_chunked(
            lambda a, b: cen.census_undirected_batch(gen.constellation_batch(params, args.seed, a, b)),
            args.samples,
            chunk=100,
        )
        mean = sims.mean(axis=0)
        se = sims.std(axis=0, ddof=1) / np.sqrt(len(sims)) if len(sims) > 1 else np.full(4, np.nan)
        with np.errstate(divide="ignore", invalid="ignore"):
            z = np.where(se > 0, (mean - ex.constellation) / se, 0.0)
        payload["mc_mean"] = [float(x) for x in mean]
        payload["mc_standard_error"] = [float(x) for x in se]
        payload["mc_z"] = [float(x) for x in z]
        for i, r in enumerate(rows):
            r["mc_mean"] = float(mean[i])
            r["mc_z"] = float(z[i])
    _emit(args, "verify-constellation", payload, rows)


def cmd_triad_table(args):
    rows = []
    for cls, prof in zip(TRIAD_CLASSES, motto_table()):
        rows.append({
            "class": cls.index, "code": cls.code, "size": cls.size, "arcs": cls.arc_count,
            "M1": prof.m1, "M2": prof.m2, "M3": prof.m3, "M4": prof.m4, "balanced": all(prof),
        })  # fmt: skip
    _emit(args, "triad-table", {"rows": rows}, rows)


def cmd_loop_census(args):
    g = read_edge_list(args.file, "loop")
    fails = motto_prime_failures(g)
    params = nm.ErParams.matching_loop(g.n, g.arc_count) if g.n else nm.ErParams(0, 0.0)
    ex = nm.expected_motto_prime_failures(params)
    payload = {
        "n": g.n,
        "arcs": g.arc_count,
        "p": params.p,
        "failures": list(fails),
        "expected_leading": list(ex.leading),
        "expected_exact": list(ex.exact),
    }
    if g.n:
        bal = balanced_loop_digraph_structure(g)
        payload["balanced"] = bal.balanced
        if bal.balanced:
            payload["classes"] = [sorted(c) for c in bal.classes]
        else:
            motto, triple = bal.witness
            payload["witness"] = {"motto": f"{motto.name}'", "triple": list(triple)}
    rows = [
        {"motto": f"M{i + 1}'", "failures": fails[i], "expected_leading": ex.leading[i],
         "expected_exact": ex.exact[i]}
        for i in range(4)
    ]  # fmt: skip
    _emit(args, "loop-census", payload, rows)


def cmd_flow_balance(args):
    g = read_edge_list(args.file, "weighted")
    if args.tol is not None and args.tol < 0:
        raise UsageError("--tol must be nonnegative")
    r = cen.flow_balance(g, args.tol)
    payload = {"n": g.n, "balanced": r.balanced, "node": r.node,
               "in_weight": r.in_weight, "out_weight": r.out_weight}  # fmt: skip
    w = g.weight_matrix()
    rows = [
        {"node": v + 1, "in_weight": float(w[:, v].sum()), "out_weight": float(w[v].sum())}
        for v in range(g.n)
    ]
    _emit(args, "flow-balance", payload, rows)


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text")
    common.add_argument("-o", "--output", help="output path (default: stdout)")

    mc = argparse.ArgumentParser(add_help=False)
    mc.add_argument("--samples", type=int, default=0, help="Monte Carlo null samples (0: formulas only)")
    mc.add_argument("--seed", type=int, help="seed; required when --samples > 0")

    p = _Parser(prog="triadic", description="Triad censuses, balance and transitivity analysis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("census", parents=[common],
                       help="triad census of a graph read from FILE",
                       description="Count triads by class: 4 edge-count classes for undirected "
                                   "graphs, the 16 M-A-N classes for digraphs.")  # fmt: skip
    s.add_argument("file", help="edge-list path or - for stdin")
    modes = s.add_mutually_exclusive_group()
    modes.add_argument("--directed", action="store_true")
    modes.add_argument("--loop", action="store_true", help="loop digraph; loops are ignored by the census")
    modes.add_argument("--weighted", action="store_true", help="census of the positive-weight arcs")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("expected", parents=[common],
                       help="Erdos-Renyi expected triad counts",
                       description="Expected triad counts in G(n,p) (undirected), the directed "
                                   "G(n,p), or expected M1'-M4' failures in a random loop digraph. "
                                   "--edges sets the density-matched p.")  # fmt: skip
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--edges", type=int)
    s.add_argument("--p", type=float)
    modes = s.add_mutually_exclusive_group()
    modes.add_argument("--directed", action="store_true")
    modes.add_argument("--loop", action="store_true")
    s.add_argument("--wrong-null", action="store_true",
                   help="also print directed-null expectations, labelled as an invalid comparison")  # fmt: skip
    s.set_defaults(func=cmd_expected)

    s = sub.add_parser("hypothesis", parents=[common, mc],
                       help="balance (GBH) or transitivity (GTH) hypothesis test",
                       description="Observed triad counts (or intransitive ordered triples with "
                                   "--directed) against the density-matched Erdos-Renyi null.")  # fmt: skip
    s.add_argument("file")
    s.add_argument("--directed", action="store_true")
    s.add_argument("--null", choices=("gnp", "gnm"), default="gnp",
                   help="Monte Carlo null for GBH: G(n,p) or fixed edge count G(n,m)")  # fmt: skip
    s.set_defaults(func=cmd_hypothesis)

    s = sub.add_parser("karate", parents=[common, mc],
                       help="balance analysis of the embedded karate club graph",
                       description="Census, G(n,p) expectations, the invalid directed-null values "
                                   "and dataset checks for Zachary's karate club graph.")  # fmt: skip
    s.set_defaults(func=cmd_karate)

    s = sub.add_parser("generate", parents=[common],
                       help="write a generated graph as an edge list",
                       description="Star graphs, noisy star constellations, clique unions and "
                                   "Erdos-Renyi graphs.")  # fmt: skip
    s.add_argument("model", choices=("star", "constellation", "cliques", "er"))
    s.add_argument("--n", type=int, required=True, help="nodes (per component for constellation/cliques)")
    s.add_argument("--k", type=int, default=1, help="number of components")
    s.add_argument("--delta", type=float, default=0.0, help="leaf-leaf noise probability")
    s.add_argument("--p", type=float, default=0.5, help="Erdos-Renyi edge probability")
    s.add_argument("--seed", type=int)
    modes = s.add_mutually_exclusive_group()
    modes.add_argument("--directed", action="store_true")
    modes.add_argument("--loop", action="store_true")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify-constellation", parents=[common, mc],
                       help="noisy constellation vs matched Erdos-Renyi graph",
                       description="Exact expected censuses of a (k,n,delta) noisy constellation "
                                   "and of G(kn,p) at the same density, the over/under pattern, "
                                   "large-n ratio checks and optional Monte Carlo means.")  # fmt: skip
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--delta", type=float, required=True)
    s.set_defaults(func=cmd_verify_constellation)

    s = sub.add_parser("triad-table", parents=[common],
                       help="which mottoes M1-M4 hold for each of the 16 triad classes",
                       description="Class sizes and the M1-M4 truth table of the 16 directed "
                                   "triad classes.")  # fmt: skip
    s.set_defaults(func=cmd_triad_table)

    s = sub.add_parser("loop-census", parents=[common],
                       help="M1'-M4' failing triples of a loop digraph",
                       description="Triples (x,y,z), repeats allowed, failing each of M1'-M4', "
                                   "with random loop digraph expectations at p = e/n^2.")  # fmt: skip
    s.add_argument("file")
    s.set_defaults(func=cmd_loop_census)

    s = sub.add_parser("flow-balance", parents=[common],
                       help="in-weight equals out-weight at every node?",
                       description="Flow balance of a weighted digraph read from FILE ('u v w' lines).")  # fmt: skip
    s.add_argument("file")
    s.add_argument("--tol", type=float, help="absolute tolerance (default: scale-aware)")
    s.set_defaults(func=cmd_flow_balance)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="triadic: %(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"triadic: error: {exc}", file=sys.stderr)
        return 1
    except (GraphError, OSError, ValueError) as exc:
        print(f"triadic: data error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

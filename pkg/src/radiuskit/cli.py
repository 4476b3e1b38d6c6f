"""Command-line front end.

Exit codes: 0 success, 1 domain errors (invalid sequences, uncovered edges,
bad witnesses), 2 usage errors (bad flags, malformed files), 3 budget
exhaustion.  Output is human-readable by default; --format json-lines emits
one JSON object per line whose embedded sequences and edge lists round-trip
through the file-format parsers.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import binseq, debruijn, exact, graphs, hardness, radius
from .errors import (BudgetError, InputError, InvalidParameterError,
                     ParseError, StructureError, UnsupportedLengthError,
                     WitnessError)

_USAGE_ERRORS = (InvalidParameterError, ParseError, FileNotFoundError)
_DOMAIN_ERRORS = (InputError, WitnessError, StructureError,
                  UnsupportedLengthError)


def _fmt_rational(x):
    return str(Fraction(x))


def _fmt_float(x):
    return f"{x:.12g}"


class _Output:
    def __init__(self, fmt):
        self.json = fmt == "json-lines"

    def emit(self, record, human_lines):
        if self.json:
            print(json.dumps(record, sort_keys=True))
        else:
            for line in human_lines:
                print(line)


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path):
    return graphs.parse_graph(_read(path))


def _budget_from_args(args):
    kwargs = {}
    if getattr(args, "time_limit", None):
        kwargs["time_limit"] = args.time_limit
    return exact.SearchBudget(**kwargs)


def _add_common(parser):
    parser.add_argument("--format", choices=["human", "json-lines"],
                        default="human", help="output format")
    parser.add_argument("--threads", type=int, default=None,
                        help="cap worker count (mirrors RADIUSKIT_THREADS; "
                             "the current implementation is single-process)")


def _resolve_threads(args):
    value = args.threads
    if value is None:
        env = os.environ.get("RADIUSKIT_THREADS")
        value = int(env) if env else 1
    if value < 1:
        raise InvalidParameterError("--threads must be >= 1")
    return value


def _cmd_ak(args, out):
    g = debruijn.build_debruijn(args.k, args.alphabet)
    cycle = debruijn.min_normalized_cycle(g)
    record = {"op": "ak", "k": args.k, "alphabet": args.alphabet,
              "value": _fmt_rational(cycle.normalized),
              "cycle": cycle.word, "cycle_length": cycle.length,
              "cycle_weight": cycle.total_weight}
    lines = [f"a_{args.k} = {_fmt_rational(cycle.normalized)}",
             f"cycle {cycle.word} (length {cycle.length}, "
             f"weight {cycle.total_weight})"]
    if args.cycle:
        windows = " ".join(g.vertex_word(c) for c in cycle.window_codes())
        lines.append(f"windows {windows}")
    out.emit(record, lines)
    return 0


def _cmd_zk(args, out):
    value = debruijn.zk(args.k)
    out.emit({"op": "zk", "k": args.k, "value": _fmt_rational(value.value),
              "t": value.t},
             [f"z_{args.k} = {_fmt_rational(value.value)} (t = {value.t})"])
    return 0


def _cmd_wk(args, out):
    value = binseq.wk_exact(args.k, args.s, alphabet=args.alphabet,
                            method=args.method)
    out.emit({"op": "wk", "k": args.k, "s": args.s,
              "alphabet": args.alphabet, "value": value},
             [f"w_{args.k}({args.s}) = {value}"])
    return 0


def _cmd_lowbad(args, out):
    result = binseq.construct_low_bad(args.k, args.s)
    out.emit({"op": "lowbad", "k": args.k, "s": args.s,
              "sequence": str(result.sequence),
              "bad_pairs": result.bad_count},
             [f"{result.sequence}", f"bad pairs: {result.bad_count}"])
    return 0


def _cmd_bounds(args, out):
    g = _load_graph(args.graph)
    report = radius.bounds(g, args.k)
    if args.bipartite and g.bipartition() is None:
        raise InputError("graph is not bipartite")
    def opt_rational(x):
        return _fmt_rational(x) if x is not None else None

    record = {"op": "bounds", "k": args.k,
              "edge_bound": opt_rational(report.edge_bound),
              "bipartite_bound": opt_rational(report.bipartite_bound),
              "degree_bound": report.degree_bound,
              "fk_lower": report.fk_lower}
    lines = []
    if report.edge_bound is not None:
        lines.append(f"edge-count bound: {_fmt_rational(report.edge_bound)}")
    else:
        lines.append("edge-count bound: not applicable "
                     "(too few non-isolated vertices)")
    if report.bipartite_bound is not None:
        lines.append(f"bipartite cycle bound: {_fmt_rational(report.bipartite_bound)}")
    lines.append(f"degree bound: {report.degree_bound}")
    lines.append(f"length lower bound: {report.fk_lower}")
    out.emit(record, lines)
    return 0


def _cmd_verify(args, out):
    g = _load_graph(args.graph)
    if args.kind == "radius":
        mode = radius.CYCLIC if args.cyclic else radius.LINEAR
        seq = radius.parse_vertex_sequence(_read(args.seq), g, mode=mode)
        check = radius.verify_radius(seq, args.k)
        record = {"op": "verify-radius", "k": args.k, "valid": check.valid,
                  "uncovered": [list(e) for e in check.uncovered],
                  "length": len(seq)}
        lines = [f"{'valid' if check.valid else 'INVALID'} "
                 f"({len(seq)} items)"]
        lines += [f"uncovered: {u} {v}" for u, v in check.uncovered]
    else:
        cov = radius.parse_cover_sequence(_read(args.seq), g, args.k)
        check = radius.verify_cover(cov)
        record = {"op": "verify-cover", "k": args.k, "valid": check.valid,
                  "uncovered": [list(e) for e in check.uncovered],
                  "reads": check.reads}
        lines = [f"{'valid' if check.valid else 'INVALID'} "
                 f"(reads {check.reads})"]
        lines += [f"uncovered: {u} {v}" for u, v in check.uncovered]
    out.emit(record, lines)
    return 0 if check.valid else 1


def _cmd_construct(args, out):
    if args.kind == "bipartite":
        result = radius.construct_bipartite(args.m, args.n, args.k,
                                            epsilon_hint=args.epsilon,
                                            seed=args.seed)
        record = {"op": "construct-bipartite", "k": args.k, "m": args.m,
                  "n": args.n, "length": result.length,
                  "lower_bound": _fmt_rational(result.lower_bound),
                  "ratio": _fmt_float(result.ratio),
                  "sequence": " ".join(result.sequence.items)}
        lines = [f"length {result.length}, lower bound "
                 f"{_fmt_rational(result.lower_bound)}, "
                 f"ratio {_fmt_float(result.ratio)}",
                 " ".join(result.sequence.items)]
        out.emit(record, lines)
    elif args.kind == "cover-bipartite":
        cov = radius.cover_strategy_bipartite(args.m, args.n, args.k)
        check = radius.verify_cover(cov)
        record = {"op": "construct-cover-bipartite", "k": args.k,
                  "m": args.m, "n": args.n, "sets": len(cov),
                  "reads": check.reads,
                  "cover": radius.serialize_cover_sequence(cov)}
        lines = [f"{len(cov)} sets, reads {check.reads}"]
        lines += [" ".join(sorted(s)) for s in cov.sets]
        out.emit(record, lines)
    else:  # euler1
        if not args.graph:
            raise InvalidParameterError("construct euler1 requires --graph")
        g = _load_graph(args.graph)
        seq = radius.euler_radius1(g)
        record = {"op": "construct-euler1", "length": len(seq),
                  "sequence": " ".join(seq.items)}
        lines = [f"length {len(seq)}", " ".join(seq.items)]
        out.emit(record, lines)
    return 0


def _cmd_exact(args, out):
    g = _load_graph(args.graph)
    if args.kind == "maxcut":
        value = exact.exact_maxcut(g)
        out.emit({"op": "exact-maxcut", "value": value},
                 [f"max cut = {value}"])
        return 0
    budget = _budget_from_args(args)
    if args.kind == "fk":
        mode = radius.CYCLIC if args.cyclic else radius.LINEAR
        result = exact.exact_fk(g, args.k, mode=mode, budget=budget)
        name = f"f_{args.k}" + ("^cyc" if args.cyclic else "")
    else:
        result = exact.exact_ck(g, args.k, budget=budget)
        name = f"c_{args.k}"
    if not result.is_optimal:
        out.emit({"op": f"exact-{args.kind}", "k": args.k,
                  "status": "unknown", "lower": result.lower,
                  "upper": result.upper},
                 [f"{name}: unknown (proven >= {result.lower}"
                  + (f", best found {result.upper}" if result.upper else "")
                  + ")"])
        return 3
    if args.kind == "fk":
        witness = " ".join(result.witness.items)
    else:
        witness = radius.serialize_cover_sequence(result.witness).strip()
    out.emit({"op": f"exact-{args.kind}", "k": args.k, "status": "optimal",
              "value": result.optimum, "witness": witness},
             [f"{name} = {result.optimum}", witness])
    return 0


def _cmd_maxcut(args, out):
    value = radius.maxcut_circulant(args.n, args.k)
    record = {"op": "maxcut-circulant", "n": args.n, "k": args.k,
              "value": value}
    lines = [f"mc = {value}"]
    if args.brute_check:
        brute = exact.exact_maxcut(graphs.circulant(args.n, args.k).graph)
        record["brute"] = brute
        lines.append(f"brute force = {brute}")
        if brute != value:
            out.emit(record, lines)
            raise InputError(
                f"identity mismatch: {value} != brute {brute}")
    out.emit(record, lines)
    return 0


def _cmd_reduce(args, out):
    g = _load_graph(args.graph)
    if args.kind == "ham-radius":
        inst = hardness.reduce_hampath_to_radius(g, args.k)
    else:
        inst = hardness.reduce_cover1_to_coverk(g, args.k)
    meta = hardness.instance_metadata(inst)
    record = dict(meta)
    record["op"] = "reduce"
    lines = [f"{key} = {value}" for key, value in sorted(meta.items())]
    if args.target_out:
        with open(args.target_out, "w", encoding="utf-8") as fh:
            fh.write(graphs.serialize_graph(inst.target))
        lines.append(f"target graph written to {args.target_out}")
    if args.meta_out:
        with open(args.meta_out, "w", encoding="utf-8") as fh:
            fh.write(hardness.serialize_metadata(inst))
        lines.append(f"metadata written to {args.meta_out}")
    if args.witness:
        text = _read(args.witness)
        if args.kind == "ham-radius":
            path_vertices = text.split()
            seq = hardness.hampath_witness_to_sequence(inst, path_vertices)
            record["witness_length"] = len(seq)
            record["witness"] = " ".join(seq.items)
            lines.append(f"witness length {len(seq)} (threshold "
                         f"{inst.threshold})")
            lines.append(" ".join(seq.items))
        else:
            edge_list = []
            for raw in text.splitlines():
                line = raw.split("#", 1)[0].strip()
                if line:
                    tokens = line.split()
                    if len(tokens) != 2:
                        raise ParseError(f"expected 'u v', got {line!r}")
                    edge_list.append(tuple(tokens))
            cov = hardness.cover1_witness_to_coverk(inst, edge_list)
            record["witness_length"] = len(cov)
            record["losses"] = hardness.loss_count(cov)
            record["witness"] = radius.serialize_cover_sequence(cov)
            lines.append(f"witness length {len(cov)} (target "
                         f"{inst.target_length}), losses {record['losses']}")
            lines.extend(" ".join(sorted(s)) for s in cov.sets)
    out.emit(record, lines)
    return 0


def _cmd_table2(args, out):
    rows = []
    for k in range(1, 6):
        cycle = debruijn.min_normalized_cycle(debruijn.build_debruijn(k))
        rows.append({"k": k, "ak": _fmt_rational(cycle.normalized),
                     "cycle": cycle.word})
    out.emit({"op": "table2", "rows": rows},
             [f"{'k':<3}{'a_k':<6}cycle"] +
             [f"{row['k']:<3}{row['ak']:<6}{row['cycle']}" for row in rows])
    return 0


def _cmd_conjecture(args, out):
    lines = []
    rows = []
    for k in range(1, args.max_k + 1):
        z = debruijn.zk(k)
        a = debruijn.ak(k)
        rows.append({"k": k, "ak": _fmt_rational(a),
                     "zk": _fmt_rational(z.value), "equal": a == z.value})
        lines.append(f"k={k}: a_k={_fmt_rational(a)} "
                     f"z_k={_fmt_rational(z.value)} "
                     f"{'equal' if a == z.value else 'DIFFER'}")
    out.emit({"op": "conjecture", "max_k": args.max_k, "rows": rows}, lines)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="radiuskit",
        description="k-radius and k-cover sequence toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ak", help="minimum normalized cycle weight")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--cycle", action="store_true",
                   help="also print the witness cycle's window decomposition")
    _add_common(p)
    p.set_defaults(func=_cmd_ak)

    p = sub.add_parser("zk", help="alternating-run cycle bound")
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_zk)

    p = sub.add_parser("wk", help="minimum bad-pair count for length s")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--method", choices=["auto", "brute", "walk"],
                   default="auto")
    p.add_argument("--alphabet", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=_cmd_wk)

    p = sub.add_parser("lowbad", help="construct a low-bad-pair string")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_lowbad)

    p = sub.add_parser("bounds", help="lower bounds for a graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--bipartite", action="store_true",
                   help="require the graph to be bipartite")
    _add_common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("verify", help="verify a sequence against a graph")
    p.add_argument("kind", choices=["radius", "cover"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--seq", required=True)
    p.add_argument("--cyclic", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="constructive sequences")
    p.add_argument("kind", choices=["bipartite", "cover-bipartite", "euler1"])
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--graph", help="input graph (euler1)")
    _add_common(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("exact", help="exhaustive solvers (tiny instances)")
    p.add_argument("kind", choices=["fk", "ck", "maxcut"])
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--graph", required=True)
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--time-limit", type=float, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("maxcut", help="circulant max cut identity")
    p.add_argument("kind", choices=["circulant"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--brute-check", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_maxcut)

    p = sub.add_parser("reduce", help="hardness reduction instances")
    p.add_argument("kind", choices=["ham-radius", "cover1-coverk"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--witness", help="witness to transform (vertex list / "
                                     "edge list file)")
    p.add_argument("--target-out", help="write the target graph edge list")
    p.add_argument("--meta-out", help="write sidecar metadata JSON")
    _add_common(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("table2", help="minimum-cycle constants for k = 1..5")
    _add_common(p)
    p.set_defaults(func=_cmd_table2)

    p = sub.add_parser("conjecture",
                       help="compare exact constants against the "
                            "alternating-run bound")
    p.add_argument("--max-k", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(args.format)
    try:
        _resolve_threads(args)
        return args.func(args, out)
    except BudgetError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _USAGE_ERRORS as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

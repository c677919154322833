"""Command-line interface: ``pisano-legendre <command> ...``.

Negative seeds are passed as ``--a -9`` (or ``--a=-9``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import graphs, reproduce, survey
from .cache import CACHE_ENV, ClassificationCache
from .graphs import Graph
from .labeling import (
    PreconditionError,
    evaluate,
    label_corona,
    label_corona_path,
    label_cycle_product,
    label_join,
    label_path,
    label_star,
    label_wheel,
    labeling_from_json,
    labeling_to_json,
)
from .numtheory import InitialPair, classify, is_prime, lambda_partition, pisano_period


class CLIError(Exception):
    pass


# --- output helpers -----------------------------------------------------------

def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _num(x):
    return float(x) if x is not None and not isinstance(x, (int, bool)) else x


def _emit(text: str) -> None:
    sys.stdout.write(text)


# --- shared arguments ---------------------------------------------------------

def _pair_args(p, default_a=0, default_b=1):
    p.add_argument("--a", type=int, default=default_a, help="seed F_0")
    p.add_argument("--b", type=int, default=default_b, help="seed F_1")


def _format_arg(p):
    p.add_argument("--format", choices=("human", "csv", "json"), default="human")


def _scan_args(p):
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache", metavar="FILE", help=f"classification cache (default ${CACHE_ENV})")
    p.add_argument("--no-cache", action="store_true")


def _cache(args):
    if getattr(args, "no_cache", False):
        return None
    if getattr(args, "cache", None):
        return ClassificationCache(args.cache)
    return ClassificationCache.from_env()


def _pair(args) -> InitialPair:
    try:
        return InitialPair(args.a, args.b)
    except ValueError as exc:
        raise CLIError(str(exc)) from None


def _prime(p: int) -> int:
    if p < 3 or not is_prime(p):
        raise CLIError(f"p={p} is not an odd prime")
    return p


# --- commands -----------------------------------------------------------------

def cmd_pisano(args):
    if args.m < 2:
        raise CLIError(f"modulus must be >= 2, got {args.m}")
    _emit(f"{pisano_period(_pair(args), args.m)}\n")


def cmd_classify(args):
    pair = _pair(args)
    rec = classify(_prime(args.p), pair)
    part = lambda_partition(args.p, pair) if args.lambda_members else None
    if args.format == "json":
        out = {"a": pair.a, "b": pair.b, "p": rec.p, "period": rec.period,
               "l_minus": rec.l_minus, "l_zero": rec.l_zero, "l_plus": rec.l_plus, "k": rec.k}
        if part is not None:
            out["members_minus"] = sorted(part.members_minus)
            out["members_zero"] = sorted(part.members_zero)
            out["members_plus"] = sorted(part.members_plus)
            out["legendre"] = part.legendre_row()
        _emit(_json(out))
    elif args.format == "csv":
        _emit(_csv(["a", "b", "p", "period", "l_minus", "l_zero", "l_plus", "k"],
                   [[pair.a, pair.b, rec.p, rec.period, rec.l_minus, rec.l_zero,
                     rec.l_plus, rec.k]]))
    else:
        lines = [
            f"p = {rec.p}, pair = {pair}, period = {rec.period}",
            f"|L-1| = {rec.l_minus}, |L0| = {rec.l_zero}, |L1| = {rec.l_plus}",
            f"p is a ({rec.k})-PL prime relative to {pair}",
        ]
        if part is not None:
            lines.append(f"L-1 = {sorted(part.members_minus)}")
            lines.append(f"L0  = {sorted(part.members_zero)}")
            lines.append(f"L1  = {sorted(part.members_plus)}")
            lines.append(f"legendre = {part.legendre_row()}")
        _emit("\n".join(lines) + "\n")


def cmd_zeta(args):
    pair, cache = _pair(args), _cache(args)
    if args.k is not None:
        e = survey.zeta(pair, args.k, args.bound, args.workers, cache)
        entries = [e] if e is not None else []
    else:
        entries = survey.zeta_table(pair, args.k_min, args.k_max, args.bound,
                                    args.workers, cache)
    if args.format == "csv":
        _emit(_csv(["k", "prime", "bound"], [[e.k, e.prime, e.bound] for e in entries]))
    elif args.format == "json":
        _emit(_json([{"k": e.k, "prime": e.prime, "bound": e.bound} for e in entries]))
    elif args.k is not None and not entries:
        _emit(f"no ({args.k})-PL prime relative to {pair} up to {args.bound}\n")
    else:
        _emit("".join(f"zeta{pair}({e.k}) = {e.prime}\n" for e in entries))


def cmd_theta(args):
    pair = _pair(args)
    primes = survey.theta_prefix(pair, args.k, args.count, args.bound, args.workers,
                                 _cache(args))
    if args.format == "csv":
        _emit(_csv(["prime"], [[q] for q in primes]))
    elif args.format == "json":
        _emit(_json({"a": pair.a, "b": pair.b, "k": args.k, "primes": primes}))
    else:
        _emit(", ".join(map(str, primes)) + "\n")


def cmd_omega(args):
    pair = _pair(args)
    s = survey.omega_series(pair, args.k, args.nmax, args.step or args.nmax,
                            args.workers, _cache(args))
    if args.format == "csv":
        _emit(_csv(["n", "count"], s.points))
    elif args.format == "json":
        _emit(_json({"a": pair.a, "b": pair.b, "k": args.k,
                     "points": [{"n": n, "count": c} for n, c in s.points]}))
    else:
        _emit("".join(f"{n}\t{c}\n" for n, c in s.points))


_FAMILIES = {
    "path": graphs.path,
    "cycle": graphs.cycle,
    "star": graphs.star,
    "wheel": graphs.wheel,
    "complete": graphs.complete,
    "empty": graphs.empty,
}


def parse_graph_spec(spec: str) -> Graph:
    """``path:3``, ``cycle:9``, ``empty:9``, ``random:32:480[:seed]`` and friends."""
    kind, _, rest = spec.partition(":")
    try:
        nums = [int(x) for x in rest.split(":")] if rest else []
        if kind == "random" and len(nums) in (2, 3):
            return graphs.connected_graph(*nums)
        if kind in _FAMILIES and len(nums) == 1:
            return _FAMILIES[kind](nums[0])
    except ValueError as exc:
        raise CLIError(f"bad graph spec {spec!r}: {exc}") from None
    raise CLIError(f"bad graph spec {spec!r}")


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CLIError(f"cannot read {path}: {exc}") from None


def _graph_input(spec, path, what):
    if path:
        return Graph.from_json(_load_json(path))
    if spec:
        return parse_graph_spec(spec)
    raise CLIError(f"theorem needs {what} (use --{what} SPEC or --{what}-file FILE)")


def cmd_label(args):
    pair = _pair(args)
    p = _prime(args.p)
    check = not args.unchecked
    t = args.theorem
    if t == "path":
        c = label_path(p, pair, args.q, check=check)
    elif t == "star":
        c = label_star(p, pair, args.q, check=check)
    elif t == "wheel":
        c = label_wheel(p, pair, args.q, check=check)
    elif t == "product":
        g = _graph_input(args.g, args.graph_file, "g")
        c = label_cycle_product(p, pair, g, args.op, args.q, check=check)
    elif t == "corona-path":
        g = _graph_input(args.g, args.graph_file, "g")
        c = label_corona_path(p, pair, g, check=check)
    elif t == "corona":
        g = _graph_input(args.g, args.graph_file, "g")
        h = _graph_input(args.h, args.h_file, "h")
        c = label_corona(p, pair, g, h, check=check)
    else:  # join
        g = _graph_input(args.g, args.graph_file, "g")
        if args.hs_file:
            hs = [Graph.from_json(x) for x in _load_json(args.hs_file)]
        elif args.hs:
            count = args.hs_count
            if count is None:
                count = classify(p, pair).period - 1
            hs = [parse_graph_spec(args.hs)] * count
        else:
            raise CLIError("join needs --hs SPEC or --hs-file FILE")
        c = label_join(p, pair, g, hs, check=check)
    summary = evaluate(c.labeling, p, pair)
    doc = labeling_to_json(c.labeling, p, pair)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(_json(doc))
    verdict = {
        "theorem": c.theorem,
        "order": c.labeling.graph.order,
        "size": c.labeling.graph.size,
        "e0": summary.e0,
        "e1": summary.e1,
        "cordial": summary.cordial,
        "predicted_e0": c.predicted.e0,
        "predicted_e1": c.predicted.e1,
        "epsilon": c.epsilon,
    }
    if check and (not summary.cordial or summary != c.predicted):
        raise RuntimeError(f"construction failed verification: {verdict}")
    if args.format == "json":
        _emit(_json({"verdict": verdict, "labeling": doc}))
    elif args.format == "csv":
        _emit(_csv(list(verdict), [list(verdict.values())]))
    else:
        word = "cordial" if summary.cordial else "NOT cordial"
        _emit(f"{c.theorem}: order {verdict['order']}, size {verdict['size']}, "
              f"e0={summary.e0}, e1={summary.e1}, {word} (epsilon={c.epsilon})\n")


def cmd_verify(args):
    data = _load_json(args.labeling_file)
    try:
        f, p, pair, stored = labeling_from_json(data)
    except (KeyError, TypeError) as exc:
        raise CLIError(f"malformed labeling file: missing or bad field {exc}") from None
    _prime(p)
    s = evaluate(f, p, pair)
    if stored is not None and stored != s:
        raise CLIError(f"stored summary (e0={stored.e0}, e1={stored.e1}) disagrees with "
                       f"recomputed (e0={s.e0}, e1={s.e1})")
    if args.format == "json":
        _emit(_json({"e0": s.e0, "e1": s.e1, "cordial": s.cordial}))
    elif args.format == "csv":
        _emit(_csv(["e0", "e1", "cordial"], [[s.e0, s.e1, s.cordial]]))
    else:
        word = "cordial" if s.cordial else "NOT cordial"
        _emit(f"{word}: e0={s.e0}, e1={s.e1}\n")


def _primes_field(xs):
    return " ".join(map(str, xs))


def cmd_tables(args):
    cache = _cache(args)
    if args.which == 1:
        rows = reproduce.table1(args.p, (args.a, args.b))
        if args.format == "csv":
            _emit(_csv(["i", "F", "legendre"], [[r["i"], r["F"], r["legendre"]] for r in rows]))
        elif args.format == "json":
            _emit(_json(rows))
        else:
            cells = [["i"] + [r["i"] for r in rows],
                     ["F_i"] + [r["F"] for r in rows],
                     [f"(F_i/{args.p})"] + [r["legendre"] for r in rows]]
            width = max(len(str(x)) for row in cells for x in row)
            _emit("".join(" | ".join(str(x).rjust(width) for x in row) + "\n" for row in cells))
    elif args.which == 2:
        rows = reproduce.table2(args.bound or survey.DEFAULT_BOUND, args.workers, cache)
        keys = ["k", "computed", "published", "discrepant", "published_is_witness"]
        if args.format == "csv":
            _emit(_csv(keys, [[r[k] for k in keys] for r in rows]))
        elif args.format == "json":
            _emit(_json(rows))
        else:
            out = []
            for r in rows:
                note = ""
                if r["discrepant"]:
                    note = "  <- computed minimum differs"
                    if r["published_is_witness"]:
                        note += " (published prime is also a witness)"
                out.append(f"{r['k']:>5}  {str(r['computed']):>7}  {r['published']:>7}{note}")
            _emit("    k  computed published\n" + "\n".join(out) + "\n")
    else:
        rows = reproduce.table3(args.bound or 300, 10, args.workers, cache)
        keys = ["a", "b", "computed", "published", "match", "flagged"]
        if args.format == "csv":
            _emit(_csv(keys, [[r["a"], r["b"], _primes_field(r["computed"]),
                               _primes_field(r["published"]), r["match"], r["flagged"]]
                              for r in rows]))
        elif args.format == "json":
            _emit(_json(rows))
        else:
            out = []
            for r in rows:
                flag = "  [published row lists 11 entries]" if r["flagged"] else ""
                ok = "" if r["match"] else "  MISMATCH"
                out.append(f"({r['a']},{r['b']})".ljust(12)
                           + ", ".join(map(str, r["computed"])) + ok + flag)
            _emit("\n".join(out) + "\n")


def cmd_plotdata(args):
    cache = _cache(args)
    if args.figure == 6:
        data = reproduce.omega_figure(args.nmax, args.step, 0, args.workers, cache)
        rows = [[s["a"], s["b"], n, c] for s in data["series"] for n, c in s["points"]]
        if args.format == "json":
            _emit(_json({"figure": 6, "k": 0, "series": [
                {"a": s["a"], "b": s["b"],
                 "points": [{"n": n, "count": c} for n, c in s["points"]]}
                for s in data["series"]]}))
        else:
            _emit(_csv(["a", "b", "n", "count"], rows))
        return
    if args.c is not None:
        try:
            survey.reference_curve(args.c, [])
        except Exception as exc:
            raise CLIError(str(exc)) from None
    data = reproduce.zeta_figure(args.figure, args.c, args.bound, args.workers, cache)
    keys = ["k", "prime", "bound"] + (["g", "above"] if data["c"] is not None else [])
    points = [{k: _num(pt[k]) for k in keys} for pt in data["points"]]
    if args.format == "json":
        _emit(_json({"figure": data["figure"], "a": data["a"], "b": data["b"],
                     "c": _num(data["c"]) if data["c"] is not None else None,
                     "points": points}))
    else:
        _emit(_csv(keys, [[pt[k] for k in keys] for pt in points]))


# --- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pisano-legendre",
        description="Pisano-Legendre prime surveys and Fibonacci-Legendre cordial labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pisano", help="Pisano period of an (a, b) sequence")
    _pair_args(p)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_pisano)

    p = sub.add_parser("classify", help="classify an odd prime")
    _pair_args(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda-members", action="store_true")
    _format_arg(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("zeta", help="least k-PL prime (or a table over a k range)")
    _pair_args(p)
    p.add_argument("--k", type=int)
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--bound", type=int, default=survey.DEFAULT_BOUND)
    _format_arg(p)
    _scan_args(p)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("theta", help="leading k-PL primes")
    _pair_args(p)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--bound", type=int, default=survey.DEFAULT_BOUND)
    _format_arg(p)
    _scan_args(p)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("omega", help="cumulative count of k-PL primes")
    _pair_args(p)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--nmax", type=int, default=survey.DEFAULT_BOUND)
    p.add_argument("--step", type=int)
    _format_arg(p)
    _scan_args(p)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("label", help="build and verify a constructive labeling")
    p.add_argument("--theorem", required=True,
                   choices=("path", "star", "wheel", "product", "corona-path", "join", "corona"))
    _pair_args(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, default=1)
    p.add_argument("--op", choices=sorted(graphs.PRODUCTS), default="tensor")
    p.add_argument("--g", help="graph spec for g, e.g. path:2 or random:32:480:0")
    p.add_argument("--graph-file", help="JSON graph for g")
    p.add_argument("--h", help="graph spec for h")
    p.add_argument("--h-file")
    p.add_argument("--hs", help="graph spec repeated for every member of hs (join)")
    p.add_argument("--hs-count", type=int, help="number of copies of --hs (default period-1)")
    p.add_argument("--hs-file", help="JSON list of graphs for hs (join)")
    p.add_argument("--unchecked", action="store_true", help="skip hypothesis checks")
    p.add_argument("--out", help="write the labeling JSON here")
    _format_arg(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="re-evaluate a labeling file")
    p.add_argument("--labeling-file", required=True)
    _format_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="regenerate a published table")
    p.add_argument("--which", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("--p", type=int, default=3, help="prime for table 1")
    _pair_args(p)
    _format_arg(p)
    _scan_args(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("plotdata", help="dataset behind a published figure")
    p.add_argument("--figure", type=int, choices=range(1, 7), required=True)
    p.add_argument("--c", help="reference-curve constant (figures 1-5)")
    p.add_argument("--bound", type=int, default=survey.DEFAULT_BOUND)
    p.add_argument("--nmax", type=int, default=survey.DEFAULT_BOUND)
    p.add_argument("--step", type=int, default=100)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _scan_args(p)
    p.set_defaults(func=cmd_plotdata)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (CLIError, ValueError) as exc:
        kind = "precondition" if isinstance(exc, PreconditionError) else "error"
        sys.stderr.write(f"{kind}: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

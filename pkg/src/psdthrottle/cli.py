"""Command-line interface: ``psdthrottle {throttle,census,concentrate,plot-data}``.

Graph specs accepted wherever a graph is expected::

    path:N   spider:A,B,C   S(A,B,C)   A,B,C   balanced:ALPHA,BETA   bintree:H   file:PATH

Exit codes: 0 success, 2 parse error, 3 budget error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import census as census_mod
from .concentration import full_concentration
from .forcing import DEFAULT_CAP, BudgetError, propagate
from .formulas import balanced_spider_throttle, beta_breakpoint, path_throttle, t_P, t_S
from .graphs import (
    Graph,
    ParseError,
    SpiderPartition,
    WeightMap,
    format_weighted_tree,
    make_balanced_spider,
    make_full_binary_tree,
    make_path,
    make_spider,
    parse_spider,
    parse_weighted_tree,
)
from .throttling import CAP_ENV, HARD_CAP, default_cap, th_plus, th_plus_omega, th_plus_weighted

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4


class VerificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class GraphSpec:
    text: str
    graph: Graph
    weights: WeightMap | None = None
    spider: SpiderPartition | None = None
    balanced: tuple[int, int] | None = None
    path: int | None = None


def _ints(body: str, text: str) -> list[int]:
    try:
        return [int(x) for x in body.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers in {text!r}") from None


def resolve_spec(text: str) -> GraphSpec:
    """Turn an inline spec or ``file:PATH`` into a graph."""
    kind, sep, body = text.partition(":")
    try:
        if sep and kind == "path":
            (n,) = _ints(body, text) or [0]
            return GraphSpec(text, make_path(n), path=n)
        if sep and kind == "spider":
            p = SpiderPartition(_ints(body, text))
            return GraphSpec(text, make_spider(p), spider=p)
        if sep and kind == "balanced":
            alpha, beta = _ints(body, text)
            return GraphSpec(text, make_balanced_spider(alpha, beta), balanced=(alpha, beta))
        if sep and kind == "bintree":
            (h,) = _ints(body, text)
            return GraphSpec(text, make_full_binary_tree(h))
        if sep and kind == "file":
            return _from_file(text, Path(body))
        if not sep:
            p = parse_spider(text)
            return GraphSpec(text, make_spider(p), spider=p)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"bad graph spec {text!r}: {exc}") from None
    raise ParseError(f"unknown graph spec {text!r}")


def _from_file(text: str, path: Path) -> GraphSpec:
    try:
        content = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    has_weights = any(line.split()[:1] == ["w"] for line in content.splitlines())
    if has_weights:
        g, w = parse_weighted_tree(content)
        return GraphSpec(text, g, weights=w)
    from .graphs import parse_edge_list

    g = parse_edge_list(content)
    return GraphSpec(text, Graph(g.n, g.edges, tree=g.is_tree()))


def _fmt_num(x) -> str:
    if isinstance(x, Fraction) and x.denominator == 1:
        return str(x.numerator)
    return format(float(x), ".10g")


def _set_text(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


# --- commands ---------------------------------------------------------------


def cmd_throttle(args) -> str:
    spec = resolve_spec(args.graph)
    g = spec.graph
    if args.method == "formula":
        return _throttle_formula(spec, args.format)
    cap = args.cap
    if spec.weights is not None and not args.ignore_weights:
        res = th_plus_weighted(g, spec.weights, cap=cap)
        mode = "weighted"
    elif args.omega != 1:
        res = th_plus_omega(g, args.omega, cap=cap)
        mode = f"omega={args.omega}"
    else:
        res = th_plus(g, cap=cap)
        mode = "unweighted"
    sched = propagate(g, res.witness_set)
    if sched.total_time != res.propagation_time:
        raise VerificationError("witness does not reproduce the reported propagation time")
    rounds = [sorted(r) for r in sched.rounds]
    if args.format == "json":
        return json.dumps(
            {
                "graph": spec.text,
                "n": g.n,
                "mode": mode,
                "value": res.value,
                "witness": sorted(res.witness_set),
                "propagation_time": res.propagation_time,
                "rounds": [[list(f) for f in r] for r in rounds],
            },
            indent=2,
        ) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("graph", "n", "mode", "value", "witness", "propagation_time"))
        w.writerow((spec.text, g.n, mode, res.value, " ".join(map(str, sorted(res.witness_set))), res.propagation_time))
        return buf.getvalue()
    lines = [
        f"graph: {spec.text} ({g.n} vertices, {mode})",
        f"th_+ = {res.value}",
        f"witness: {_set_text(res.witness_set)}",
        f"propagation time: {res.propagation_time}",
    ]
    for k, r in enumerate(rounds, start=1):
        lines.append(f"round {k}: " + " ".join(f"{v}->{x}" for v, x in r))
    return "\n".join(lines) + "\n"


def _throttle_formula(spec: GraphSpec, fmt: str) -> str:
    if spec.path is not None:
        value, how = path_throttle(spec.path), "path closed form"
    elif spec.balanced is not None:
        value, how = balanced_spider_throttle(*spec.balanced).value, "balanced spider closed form"
    elif spec.spider is not None:
        value, how = census_mod.spider_throttle(spec.spider), "spider recursion"
    else:
        raise ParseError("--method formula needs a path, spider or balanced spider spec")
    if fmt == "json":
        return json.dumps({"graph": spec.text, "n": spec.graph.n, "value": value, "method": how}) + "\n"
    if fmt == "csv":
        return f"graph,n,value,method\n{spec.text},{spec.graph.n},{value},{how}\n"
    return f"graph: {spec.text} ({spec.graph.n} vertices)\nth_+ = {value} ({how})\n"


def cmd_census(args) -> str:
    limit = None if args.full_examples else census_mod.DEFAULT_EXAMPLE_LIMIT
    rows = census_mod.census_range(args.n_lo, args.n_hi, args.budget_k, limit)
    for r in rows:
        if r.budget_exceeded:
            print(
                f"warning: n={r.n}: {len(r.budget_exceeded)} spider(s) exceed t+{args.budget_k}",
                file=sys.stderr,
            )
    if args.format == "json":
        return census_mod.rows_to_json(rows)
    if args.format == "text":
        out = [f"{'n':>4} {'th_+(P_n)':>9} {'count':>7}  examples"]
        out += [f"{r.n:>4} {r.path_value:>9} {r.super_count:>7}  {r.example_text()}" for r in rows]
        return "\n".join(out) + "\n"
    return census_mod.rows_to_csv(rows)


def cmd_concentrate(args) -> str:
    spec = resolve_spec(args.graph)
    g = spec.graph
    if not g.is_tree():
        raise ParseError("concentration needs a tree")
    g = Graph(g.n, g.edges, g.labels, tree=True)
    w = spec.weights or WeightMap.uniform(g.n)
    result = full_concentration(g, w, root=args.root)
    if not result.changed:
        print("warning: no symmetric branches at any weight-1 vertex; tree unchanged", file=sys.stderr)
    report = [f"# concentrated {g.n} -> {result.tree.n} vertices"]
    if args.verify:
        before = th_plus_weighted(g, w, cap=args.cap).value
        after = th_plus_weighted(result.tree, result.weights, cap=args.cap).value
        report.append(f"# th_+ original = {before}, concentrated = {after}")
        if before != after:
            raise VerificationError(f"throttling changed under concentration: {before} != {after}")
    body = format_weighted_tree(result.tree, result.weights)
    if args.format == "json":
        data = {
            "n": result.tree.n,
            "edges": [list(e) for e in result.tree.sorted_edges()],
            "weights": list(result.weights),
            "origins": [sorted(o) for o in result.origins],
            "changed": result.changed,
        }
        if args.verify:
            data["verified"] = True
        return json.dumps(data, indent=2) + "\n"
    return "\n".join(report) + "\n" + body


def plot_rows(alpha: int, beta_max, step) -> list[tuple[Fraction, Fraction, float, str]]:
    beta_max = Fraction(beta_max)
    step = Fraction(step)
    if step <= 0:
        raise ValueError("step must be positive")
    points: dict[Fraction, str] = {}
    b = Fraction(0)
    while b <= beta_max:
        points[b] = ""
        b += step
    s = 1
    while beta_breakpoint(alpha, s) <= beta_max:
        points[beta_breakpoint(alpha, s)] = str(s)
        s += 1
    return [(b, t_S(alpha, b), t_P(alpha, b), points[b]) for b in sorted(points)]


def cmd_plot_data(args) -> str:
    if args.alpha < 3:
        raise ParseError("alpha must be >= 3")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("beta", "t_S", "t_P", "breakpoint_s"))
    for b, ts, tp, mark in plot_rows(args.alpha, Fraction(args.beta_max), Fraction(args.step)):
        w.writerow((_fmt_num(b), _fmt_num(ts), _fmt_num(tp), mark))
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psdthrottle",
        description="PSD zero forcing, propagation time and throttling on trees and spiders.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
graph specs: path:N  spider:A,B,C  S(A,B,C)  balanced:ALPHA,BETA  bintree:H  file:PATH
environment: {CAP_ENV} sets the default brute-force cap (default {DEFAULT_CAP}).
exit codes: 0 ok, 2 parse error, 3 budget error, 4 verification failure.
""",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cap(p):
        p.add_argument("--cap", type=int, default=None,
                       help=f"brute-force vertex cap (default ${CAP_ENV} or {DEFAULT_CAP})")
        p.add_argument("--allow-large-cap", action="store_true",
                       help=f"permit --cap above {DEFAULT_CAP} (hard limit {HARD_CAP})")

    p = sub.add_parser("throttle", help="compute th_+ with an optimal set and its force schedule")
    p.add_argument("graph", help="graph spec")
    add_cap(p)
    p.add_argument("--omega", type=int, default=1, help="scalar weight on |B| (default 1)")
    p.add_argument("--method", choices=("search", "formula"), default="search",
                   help="exhaustive search, or closed form / spider recursion")
    p.add_argument("--ignore-weights", action="store_true", help="ignore weights in a file input")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_throttle)

    p = sub.add_parser("census", help="count super-spiders for each order in a range")
    p.add_argument("n_lo", type=int)
    p.add_argument("n_hi", type=int)
    p.add_argument("--budget-k", type=int, default=1, help="extra throttling budget for re-scoring (default 1)")
    p.add_argument("--full-examples", action="store_true", help="list every super-spider, not the first 8")
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("concentrate", help="fully concentrate a weighted tree")
    p.add_argument("graph", help="graph spec; file: inputs may carry 'w i k' weight lines")
    p.add_argument("--root", type=int, default=0, help="root fixing the anchor order (default 0)")
    p.add_argument("--verify", action="store_true", help="check th_+ is unchanged by exhaustive search")
    add_cap(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_concentrate)

    p = sub.add_parser("plot-data", help="CSV of t_S and t_P against beta for fixed alpha")
    p.add_argument("alpha", type=int)
    p.add_argument("--beta-max", type=Fraction, default=Fraction(30))
    p.add_argument("--step", type=Fraction, default=Fraction(1, 2))
    p.set_defaults(func=cmd_plot_data)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cap = getattr(args, "cap", None)
    if cap is not None and cap > DEFAULT_CAP and not args.allow_large_cap:
        print(f"error: --cap {cap} exceeds {DEFAULT_CAP}; pass --allow-large-cap", file=sys.stderr)
        return EXIT_BUDGET
    if cap is None and hasattr(args, "cap"):
        args.cap = default_cap()
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetError as exc:
        print(f"budget error: {exc} (raise with --cap)", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

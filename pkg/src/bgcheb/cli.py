"""Command-line front end: ``bgcheb <command> [options]``.

Exit status is 0 on success, 1 on a domain or degenerate-node error and 2
on a usage error.  ``--config FILE`` loads a JSON object whose keys are
option names (``grid_size``, ``beta``...) used as defaults for the command.
``BGCHEB_THREADS`` caps the worker count for sweeps and figures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import figures as figs
from .errors import DegenerateNodes, DomainError
from .functions import BGChebFunction, eval_direct, eval_lobatto_fn, eval_recurrence
from .lebesgue import (
    beta_bar,
    delta_bar,
    find_optimal_beta,
    find_optimal_delta,
    lebesgue_constant,
    lebesgue_function,
    sweep_beta,
    sweep_to_csv,
)
from .ortho import QuadratureSpec, gram_matrix
from .params import make_params, make_params_float, parse_rational
from .points import (
    PointKind,
    cheb_points,
    equispaced_first_kind,
    equispaced_lobatto,
    extrema_points,
    lobatto_points,
    map_pointset,
)
from .polycases import classify


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("BGCHEB_THREADS", "1")))
    except ValueError:
        return 1


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _fmt_scalar(v: float) -> str:
    # 15 significant digits: the decimal precision a double guarantees
    return f"{v:.15g}"


def _params(args):
    if args.beta_float is not None or args.gamma_float is not None:
        b = args.beta_float if args.beta_float is not None else float(parse_rational(args.beta))
        g = args.gamma_float if args.gamma_float is not None else float(parse_rational(args.gamma))
        return make_params_float(b, g)
    return make_params(parse_rational(args.beta), parse_rational(args.gamma))


def _emit(args, text: str):
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _build_pointset(args, p):
    kind = PointKind(args.kind)
    size = args.count if args.count is not None else args.n
    if size is None:
        raise DomainError("give --count (or --n)")
    if kind is PointKind.FIRST_KIND:
        return cheb_points(size, p)
    if kind is PointKind.LOBATTO:
        return lobatto_points(size, p)
    if kind is PointKind.EXTREMA:
        if args.n is None:
            raise DomainError("extrema points take the degree --n")
        return extrema_points(args.n, p)
    if kind is PointKind.EQUISPACED_FIRST_KIND:
        return equispaced_first_kind(size, p)
    return equispaced_lobatto(size, p)


def cmd_points(args):
    ps = _build_pointset(args, _params(args))
    if args.map_alpha is not None:
        ps = map_pointset(ps, args.map_alpha)
    _emit(args, ps.to_json() + "\n" if args.format == "json" else ps.to_csv())


def cmd_eval(args):
    p = _params(args)
    xs = [float(v) for v in args.x.split(",")]
    f = BGChebFunction(args.n, p)
    if args.method == "direct":
        vals = [eval_direct(f, x) for x in xs]
    elif args.method == "recurrence":
        vals = [eval_recurrence(f, x) for x in xs]
    else:
        vals = [eval_lobatto_fn(args.n, p, x) for x in xs]
    if args.format == "json":
        _emit(args, json.dumps({"n": args.n, "method": args.method, "x": xs, "values": vals}) + "\n")
    else:
        _emit(args, "x,value\n" + "".join(f"{_fmt(x)},{_fmt(v)}\n" for x, v in zip(xs, vals)))


def cmd_classify(args):
    cls = classify(args.n, _params(args))
    _emit(args, cls.to_json() + "\n")


def cmd_ortho(args):
    p = _params(args)
    q = QuadratureSpec(args.nodes) if args.nodes else None
    g = gram_matrix(args.max_index, p, q)
    if args.format == "json":
        _emit(args, json.dumps({"max_index": g.max_index, "entries": g.entries.tolist()}) + "\n")
    else:
        _emit(args, g.to_csv())


def _family_nodes(args):
    if args.family == "custom":
        return _build_pointset(args, _params(args))
    if args.n is None:
        raise DomainError(f"--family {args.family} needs --n (number of nodes)")
    n = args.n
    if args.family == "beta-bar":
        p = make_params(beta_bar(n), 0)
    elif args.family == "delta-bar":
        p = make_params(delta_bar(n), delta_bar(n))
    else:
        p = make_params(0, 0)
    return lobatto_points(n, p)


def cmd_lebesgue(args):
    nodes = _family_nodes(args)
    if args.at is not None:
        _emit(args, _fmt_scalar(lebesgue_function(nodes, args.at)) + "\n")
        return
    rep = lebesgue_constant(nodes, args.grid_size)
    if args.format == "json":
        _emit(args, json.dumps(rep.to_dict()) + "\n")
    else:
        _emit(args, f"lebesgue_constant,argmax\n{_fmt(rep.constant)},{_fmt(rep.argmax)}\n")


def cmd_sweep(args):
    rows = sweep_beta(
        range(args.n_min, args.n_max + 1),
        range(args.j_min, args.j_max + 1),
        rule=args.rule,
        grid_size=args.grid_size,
        workers=_workers(),
    )
    if args.format == "json":
        data = [
            {
                "n": r.n,
                "j": r.j,
                "param_value": f"{r.param_value.numerator}/{r.param_value.denominator}",
                "lebesgue_constant": r.report.constant,
                "argmax": r.report.argmax,
            }
            for r in rows
        ]
        _emit(args, json.dumps(data) + "\n")
    else:
        _emit(args, sweep_to_csv(rows))


def cmd_optimal(args):
    finder = find_optimal_beta if args.rule == "beta" else find_optimal_delta
    res = finder(args.n, args.tol)
    _emit(
        args,
        json.dumps(
            {
                "rule": args.rule,
                "n": args.n,
                "argmin": res.argmin,
                "lebesgue_constant": res.value,
                "scan_argmin": res.scan_argmin,
                "scan_value": res.scan_value,
                "used_fallback": res.used_fallback,
            }
        )
        + "\n",
    )


def conjecture_rows(n_min: int, n_max: int, argmax_tol: float = 1e-8, rel_tol: float = 1e-6):
    rows = []
    for n in range(n_min, n_max + 1):
        nodes = lobatto_points(n, make_params(beta_bar(n), 0))
        at_minus_one = lebesgue_function(nodes, -1.0)
        rep = lebesgue_constant(nodes)
        ok = abs(rep.argmax + 1.0) <= argmax_tol and abs(rep.constant - (2 * n - 1)) <= rel_tol * (2 * n - 1)
        rows.append((n, at_minus_one, rep.constant, rep.argmax, ok))
    return rows


def cmd_conjecture(args):
    rows = conjecture_rows(args.n_min, args.n_max)
    lines = ["n,lambda_at_minus_one,lebesgue_constant,argmax,pass\n"]
    for n, lam, c, a, ok in rows:
        lines.append(f"{n},{_fmt(lam)},{_fmt(c)},{_fmt(a)},{'pass' if ok else 'fail'}\n")
    _emit(args, "".join(lines))


def cmd_figures(args):
    tables = figs.figure_tables(args.id, workers=_workers())
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for t in tables:
            (out / f"{t.name}.csv").write_text(t.to_csv(), encoding="utf-8", newline="\n")
        return
    if len(tables) == 1:
        sys.stdout.write(tables[0].to_csv())
        return
    for t in tables:
        sys.stdout.write(f"# {t.name}\n")
        sys.stdout.write(t.to_csv())


def _add_params(sp):
    sp.add_argument("--beta", default="0", help="rational 'p/q' (default 0)")
    sp.add_argument("--gamma", default="0", help="rational 'p/q' (default 0)")
    sp.add_argument("--beta-float", type=float, default=None, help="real-valued beta (disables classify)")
    sp.add_argument("--gamma-float", type=float, default=None, help="real-valued gamma")


def _add_common(sp, formats=True):
    sp.add_argument("--output", "-o", default=None, help="write to this path instead of stdout")
    if formats:
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--config", default=None, help="JSON file of option defaults")


def _add_kind(sp, default="lobatto"):
    sp.add_argument("--kind", choices=[k.value for k in PointKind], default=default)
    sp.add_argument("--count", type=int, default=None, help="number of points")
    sp.add_argument("--n", type=int, default=None, help="degree index (extrema) or number of points")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bgcheb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    parser.set_defaults(_subparsers=sub.choices)

    sp = sub.add_parser("points", help="generate a point set")
    _add_kind(sp)
    _add_params(sp)
    sp.add_argument("--map-alpha", type=float, default=None, help="apply the KTE map M_alpha")
    _add_common(sp)
    sp.set_defaults(func=cmd_points)

    sp = sub.add_parser("eval", help="evaluate T_n or its Lobatto companion")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--x", required=True, help="comma-separated abscissae")
    sp.add_argument("--method", choices=("direct", "recurrence", "lobatto"), default="direct")
    _add_params(sp)
    _add_common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("classify", help="polynomial-case classification (JSON)")
    sp.add_argument("--n", type=int, required=True)
    _add_params(sp)
    _add_common(sp, formats=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("ortho", help="Gram matrix of weighted inner products")
    sp.add_argument("--max-index", type=int, required=True)
    sp.add_argument("--nodes", type=int, default=None, help="quadrature node count")
    _add_params(sp)
    _add_common(sp)
    sp.set_defaults(func=cmd_ortho)

    sp = sub.add_parser("lebesgue", help="Lebesgue function value or constant")
    sp.add_argument("--family", choices=("beta-bar", "delta-bar", "classical", "custom"), default="custom")
    _add_kind(sp)
    sp.add_argument("--at", type=float, default=None, help="evaluate the Lebesgue function here")
    sp.add_argument("--grid-size", type=int, default=None)
    _add_params(sp)
    _add_common(sp)
    sp.set_defaults(func=cmd_lebesgue)

    sp = sub.add_parser("sweep", help="Lebesgue constants over (n, j) parameter cells")
    sp.add_argument("--rule", choices=("beta", "delta"), default="beta")
    sp.add_argument("--n-min", type=int, default=5)
    sp.add_argument("--n-max", type=int, default=40)
    sp.add_argument("--j-min", type=int, default=0)
    sp.add_argument("--j-max", type=int, default=40)
    sp.add_argument("--grid-size", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("optimal", help="Lebesgue-optimal beta or delta for fixed n")
    sp.add_argument("--rule", choices=("beta", "delta"), default="beta")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--tol", type=float, default=1e-6)
    _add_common(sp, formats=False)
    sp.set_defaults(func=cmd_optimal)

    sp = sub.add_parser("conjecture", help="check where the beta-bar Lebesgue function peaks")
    sp.add_argument("--n-min", type=int, default=2)
    sp.add_argument("--n-max", type=int, default=30)
    _add_common(sp, formats=False)
    sp.set_defaults(func=cmd_conjecture)

    sp = sub.add_parser("figures", help="emit the data behind a figure")
    sp.add_argument("--id", required=True, choices=list(figs.FIGURES))
    sp.add_argument("--output", "-o", default=None, help="directory for the CSV files")
    sp.add_argument("--config", default=None, help="JSON file of option defaults")
    sp.set_defaults(func=cmd_figures)

    return parser


def _apply_config(parser, argv):
    args = parser.parse_args(argv)
    if not getattr(args, "config", None):
        return args
    try:
        with open(args.config, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"cannot read config {args.config}: {exc}")
    if not isinstance(cfg, dict):
        parser.error("config must be a JSON object")
    subparser = args._subparsers[args.command]
    known = {a.dest for a in subparser._actions} - {"help", "func", "config"}
    unknown = set(cfg) - known
    if unknown:
        parser.error(f"unknown config keys: {', '.join(sorted(unknown))}")
    subparser.set_defaults(**{k: (str(v) if k in ("beta", "gamma") else v) for k, v in cfg.items()})
    return parser.parse_args(argv)


def main(argv=None) -> int:
    parser = build_parser()
    args = _apply_config(parser, argv)
    try:
        args.func(args)
    except (DomainError, DegenerateNodes) as exc:
        print(f"bgcheb: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

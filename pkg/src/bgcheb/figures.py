"""Data tables behind each figure (no plotting)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import DomainError
from .functions import BGChebFunction, eval_direct, eval_lobatto_fn
from .lebesgue import (
    beta_bar,
    delta_bar,
    family_nodes,
    lebesgue_constant,
    lebesgue_function,
    sweep_beta,
)
from .params import ParamPair, make_params, omega_interval
from .points import cheb_points, lobatto_points

CURVE_SAMPLES = 1001
SCAN_SAMPLES = 401
FIG_N = 40


@dataclass(frozen=True)
class Table:
    name: str
    header: tuple
    rows: list

    def to_csv(self) -> str:
        lines = [",".join(self.header) + "\n"]
        for row in self.rows:
            lines.append(",".join(_fmt(v) for v in row) + "\n")
        return "".join(lines)


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.17g}"


def function_panel(tag: str, n: int, p: ParamPair) -> list[Table]:
    """Curves of ``T_n`` and its Lobatto companion, plus the two point sets."""
    x = np.linspace(-1.0, 1.0, CURVE_SAMPLES)
    t = eval_direct(BGChebFunction(n, p), x)
    tb = eval_lobatto_fn(n, p, x)
    curves = Table(f"{tag}_curves", ("x", "T", "T_bar"), [(a, b, c) for a, b, c in zip(x, t, tb)])
    om = omega_interval(p)
    markers = [("cheb", v) for v in cheb_points(n, p)]
    markers += [("lobatto", v) for v in lobatto_points(n + 1, p)]
    markers += [("omega_lo", om.lo), ("omega_hi", om.hi)]
    return [curves, Table(f"{tag}_points", ("set", "x"), markers)]


def lebesgue_curves(tag: str, rule: str) -> list[Table]:
    x = np.linspace(-1.0, 1.0, CURVE_SAMPLES)
    ns = (5, 6, 7)
    cols = []
    for n in ns:
        value = beta_bar(n) if rule == "beta" else delta_bar(n)
        cols.append(lebesgue_function(family_nodes(rule, n, value), x))
    rows = [(x[i],) + tuple(c[i] for c in cols) for i in range(x.size)]
    return [Table(tag, ("x",) + tuple(f"n{n}" for n in ns), rows)]


def lebesgue_table(tag: str, rule: str, workers: int = 1) -> list[Table]:
    rows = sweep_beta(range(5, 41), range(0, 41), rule=rule, workers=workers)
    out = [(r.n, r.j, float(r.param_value), r.report.constant, r.report.argmax) for r in rows]
    return [Table(tag, ("n", "j", "param_value", "lebesgue_constant", "argmax"), out)]


def lebesgue_scan(tag: str, rule: str, lo_mult: int, hi_mult: int) -> list[Table]:
    """Lambda over ``[lo_mult, hi_mult] / N`` (N = n or n+1) at fixed n = 40."""
    n = FIG_N
    unit = Fraction(1, n) if rule == "beta" else Fraction(1, n + 1)
    steps = SCAN_SAMPLES - 1
    rows = []
    for k in range(SCAN_SAMPLES):
        value = unit * (lo_mult + Fraction((hi_mult - lo_mult) * k, steps))
        rep = lebesgue_constant(family_nodes(rule, n, value))
        rows.append((float(value), rep.constant, rep.argmax))
    return [Table(tag, ("param_value", "lebesgue_constant", "argmax"), rows)]


def _panels(*specs):
    def build(workers=1):
        tables = []
        for tag, n, b, g in specs:
            tables += function_panel(tag, n, make_params(b, g))
        return tables

    return build


FIGURES: dict[str, Callable[..., list[Table]]] = {
    "1": _panels(("fig1_left", 4, "1/3", "1/3"), ("fig1_right", 5, "3/4", "1/5")),
    "2": _panels(("fig2_left", 5, "1/2", "0"), ("fig2_right", 5, "0", "1/2")),
    # the right panel shows the mirrored pair (0, 4/5)
    "3": _panels(("fig3_left", 6, "4/5", "0"), ("fig3_right", 6, "0", "4/5")),
    "4-left": lambda workers=1: lebesgue_curves("fig4_left", "beta"),
    "4-right": lambda workers=1: lebesgue_table("fig4_right", "beta", workers),
    "5-left": lambda workers=1: lebesgue_scan("fig5_left", "beta", 0, 1),
    "5-right": lambda workers=1: lebesgue_scan("fig5_right", "beta", 1, 4),
    "6-left": lambda workers=1: lebesgue_curves("fig6_left", "delta"),
    "6-right": lambda workers=1: lebesgue_table("fig6_right", "delta", workers),
    "7-left": lambda workers=1: lebesgue_scan("fig7_left", "delta", 0, 1),
    "7-right": lambda workers=1: lebesgue_scan("fig7_right", "delta", 1, 4),
}


def figure_tables(fig_id: str, workers: int = 1) -> list[Table]:
    try:
        build = FIGURES[fig_id]
    except KeyError:
        raise DomainError(f"unknown figure id {fig_id!r}; choose from {', '.join(FIGURES)}") from None
    return build(workers=workers)

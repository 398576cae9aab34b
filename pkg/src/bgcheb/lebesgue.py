"""Barycentric Lebesgue functions and constants on [-1, 1], parameter sweeps
and the search for Lebesgue-optimal parameters.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import DegenerateNodes, DomainError
from .params import ParamPair, make_params, make_params_float
from .points import PointKind, PointSet, lobatto_points

log = logging.getLogger(__name__)

COINCIDE_TOL = 1e-15
REFINE_XTOL = 1e-10

Nodes = Union[PointSet, Sequence[float], np.ndarray]


def _node_array(nodes: Nodes) -> np.ndarray:
    if isinstance(nodes, PointSet):
        return nodes.array
    return np.asarray(nodes, dtype=float).ravel()


@dataclass(frozen=True)
class BarycentricWeights:
    """Nodes with barycentric weights scaled so that ``max |w| = 1``."""

    nodes: np.ndarray
    weights: np.ndarray
    source: Optional[PointSet] = field(default=None, compare=False)


def bary_weights(nodes: Nodes) -> BarycentricWeights:
    """``w_i = 1 / prod_{j != i} (x_i - x_j)``, rescaled.

    Products are accumulated as sums of logarithms so that large node
    counts neither overflow nor underflow.
    """
    x = _node_array(nodes)
    if x.size == 0:
        raise DomainError("no nodes")
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    if np.any(np.abs(diff) < COINCIDE_TOL):
        raise DegenerateNodes("two nodes coincide within 1e-15")
    logmag = -np.sum(np.log(np.abs(diff)), axis=1)
    sign = np.prod(np.sign(diff), axis=1)
    w = sign * np.exp(logmag - logmag.max())
    return BarycentricWeights(x, w, nodes if isinstance(nodes, PointSet) else None)


def _as_bary(nodes) -> BarycentricWeights:
    return nodes if isinstance(nodes, BarycentricWeights) else bary_weights(nodes)


def _lebesgue_values(bw: BarycentricWeights, x: np.ndarray) -> np.ndarray:
    d = x[:, None] - bw.nodes[None, :]
    hit = np.abs(d) < COINCIDE_TOL * np.maximum(1.0, np.abs(x))[:, None]
    on_node = hit.any(axis=1)
    d[hit] = 1.0
    terms = bw.weights[None, :] / d
    with np.errstate(invalid="ignore", divide="ignore"):
        vals = np.abs(terms).sum(axis=1) / np.abs(terms.sum(axis=1))
    vals[on_node] = 1.0
    return vals


def lebesgue_function(nodes, x):
    """``sum_i |l_i(x)|`` in barycentric form; exactly 1 at a node."""
    bw = _as_bary(nodes)
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > 1.0):
        raise DomainError("x must lie in [-1, 1]")
    vals = _lebesgue_values(bw, np.atleast_1d(arr).ravel()).reshape(arr.shape)
    return float(vals) if vals.ndim == 0 else vals


@dataclass(frozen=True)
class LebesgueReport:
    constant: float
    argmax: float
    grid_size: int
    refined: bool
    grid_constant: float
    grid_argmax: float
    node_count: int
    kind: Optional[str] = None
    params: Optional[tuple] = None

    def to_dict(self) -> dict:
        return {
            "constant": self.constant,
            "argmax": self.argmax,
            "grid_size": self.grid_size,
            "refined": self.refined,
            "grid_constant": self.grid_constant,
            "grid_argmax": self.grid_argmax,
            "node_count": self.node_count,
            "kind": self.kind,
            "params": list(self.params) if self.params else None,
        }


def default_grid_size(count: int) -> int:
    return 100 * count + 1


def lebesgue_constant(nodes, grid_size: Optional[int] = None, refine: bool = True) -> LebesgueReport:
    """Maximise the Lebesgue function over [-1, 1].

    A uniform grid (which includes both endpoints) locates the maximising
    cell; a bounded scalar search over the two cells adjacent to the grid
    argmax then refines it to ``1e-10`` in abscissa.
    """
    bw = _as_bary(nodes)
    count = bw.nodes.size
    if grid_size is None:
        grid_size = default_grid_size(count)
    if grid_size < 10 * count:
        raise DomainError(f"grid_size must be >= 10 * count = {10 * count}")
    grid = np.linspace(-1.0, 1.0, grid_size)
    vals = _lebesgue_values(bw, grid)
    k = int(np.argmax(vals))
    best_x, best_v = float(grid[k]), float(vals[k])
    grid_x, grid_v = best_x, best_v
    if refine and count > 1:
        lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, grid_size - 1)]
        res = minimize_scalar(
            lambda t: -_lebesgue_values(bw, np.array([t]))[0],
            bounds=(lo, hi),
            method="bounded",
            options={"xatol": REFINE_XTOL},
        )
        if -res.fun > best_v:
            best_x, best_v = float(res.x), float(-res.fun)
    src = bw.source
    return LebesgueReport(
        constant=best_v,
        argmax=best_x,
        grid_size=grid_size,
        refined=refine,
        grid_constant=grid_v,
        grid_argmax=grid_x,
        node_count=count,
        kind=src.kind.value if src is not None else None,
        params=src.params.to_strings() if src is not None else None,
    )


def lambda_minus_one_closed(n: int) -> float:
    """Value of the Lebesgue function at -1 for ``U^{2/n,0}_n``: ``2n - 1``."""
    if n < 1:
        raise DomainError("n must be positive")
    return float(2 * n - 1)


def log_growth_threshold(n: int) -> float:
    """``4 / (pi n^2 (2 + pi ln(n+1)))``.

    Parameters below this keep the Lebesgue constant of the perturbed CL
    set logarithmic.
    """
    if n < 1:
        raise DomainError("n must be positive")
    return 4.0 / (math.pi * n * n * (2.0 + math.pi * math.log(n + 1)))


# families --------------------------------------------------------------


def beta_bar(n: int) -> Fraction:
    return Fraction(2, n)


def delta_bar(n: int) -> Fraction:
    return Fraction(2, n + 1)


def family_params(rule: str, value) -> ParamPair:
    """``(value, 0)`` for the beta rule, ``(value, value)`` for the delta rule."""
    exact = isinstance(value, (Fraction, int)) and not isinstance(value, bool)
    if rule == "beta":
        return make_params(value, 0) if exact else make_params_float(value, 0.0)
    if rule == "delta":
        return make_params(value, value) if exact else make_params_float(value, value)
    raise DomainError(f"unknown rule {rule!r} (expected 'beta' or 'delta')")


def family_nodes(rule: str, n: int, value) -> PointSet:
    return lobatto_points(n, family_params(rule, value))


def family_constant(rule: str, n: int, value, grid_size: Optional[int] = None) -> float:
    return lebesgue_constant(family_nodes(rule, n, value), grid_size).constant


# sweeps ---------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    n: int
    j: int
    param_value: Fraction
    report: LebesgueReport

    @property
    def constant(self) -> float:
        return self.report.constant


def sweep_param(rule: str, n: int, j: int) -> Fraction:
    """``j/(10n)`` for the beta rule, ``j/(10(n+1))`` for the delta rule."""
    if rule == "beta":
        return Fraction(j, 10 * n)
    if rule == "delta":
        return Fraction(j, 10 * (n + 1))
    raise DomainError(f"unknown rule {rule!r} (expected 'beta' or 'delta')")


def sweep_beta(
    n_range: Iterable[int],
    j_range: Iterable[int],
    rule: str = "beta",
    grid_size: Optional[int] = None,
    workers: int = 1,
) -> list[SweepRow]:
    """Lebesgue constants of ``U_n`` over a grid of (n, j) cells.

    Rows come back sorted by (n, j) whatever the evaluation order.
    """
    cells = [(n, j) for n in n_range for j in j_range]

    def run(cell):
        n, j = cell
        value = sweep_param(rule, n, j)
        report = lebesgue_constant(family_nodes(rule, n, value), grid_size)
        return SweepRow(n, j, value, report)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, cells))
    else:
        rows = [run(c) for c in cells]
    return sorted(rows, key=lambda r: (r.n, r.j))


def sweep_to_csv(rows: Sequence[SweepRow]) -> str:
    out = ["n,param_value,lebesgue_constant,argmax\n"]
    for r in rows:
        out.append(
            f"{r.n},{float(r.param_value):.17g},{r.report.constant:.17g},{r.report.argmax:.17g}\n"
        )
    return "".join(out)


# optimal parameters ---------------------------------------------------


@dataclass(frozen=True)
class OptimumResult:
    argmin: float
    value: float
    scan_argmin: float
    scan_value: float
    used_fallback: bool

    def __iter__(self):
        return iter((self.argmin, self.value))


def _find_optimal(rule: str, n: int, upper: float, tol: float, prescan: int = 50) -> OptimumResult:
    if n < 2:
        raise DomainError("n must be >= 2")
    if tol <= 0:
        raise DomainError("tol must be positive")

    def objective(v):
        return family_constant(rule, n, float(v))

    scan = np.linspace(0.0, upper, prescan)
    scan_vals = np.array([objective(v) for v in scan])
    k = int(np.argmin(scan_vals))
    lo, hi = scan[max(k - 1, 0)], scan[min(k + 1, prescan - 1)]
    res = minimize_scalar(objective, bounds=(lo, hi), method="bounded", options={"xatol": tol})
    cand = [(float(res.fun), float(res.x)), (float(scan_vals[k]), float(scan[k]))]
    # the bounded search never samples the bracket ends
    for edge in (lo, hi):
        cand.append((objective(edge), float(edge)))
    value, argmin = min(cand)
    fallback = argmin != float(res.x)
    if fallback:
        log.info("optimal %s search for n=%d fell back to a sampled point", rule, n)
    return OptimumResult(argmin, value, float(scan[k]), float(scan_vals[k]), fallback)


def find_optimal_beta(n: int, tol: float = 1e-6) -> OptimumResult:
    """Minimise ``beta -> Lambda(U^{beta,0}_n)`` over ``[0, 1/n]``."""
    return _find_optimal("beta", n, 1.0 / n, tol)


def find_optimal_delta(n: int, tol: float = 1e-6) -> OptimumResult:
    """Minimise ``delta -> Lambda(U^{delta,delta}_n)`` over ``[0, 1/(n+1)]``."""
    return _find_optimal("delta", n, 1.0 / (n + 1), tol)


def count_local_minima(values: Sequence[float], rel_tol: float = 1e-9) -> int:
    """Number of strict local minima after merging near-equal neighbours."""
    v = np.asarray(values, dtype=float)
    # collapse plateaus that are flat up to rel_tol
    keep = [v[0]]
    for a in v[1:]:
        if abs(a - keep[-1]) > rel_tol * max(1.0, abs(a)):
            keep.append(a)
    keep = np.array(keep)
    if keep.size < 2:
        return 1
    count = 0
    for i in range(keep.size):
        left = keep[i - 1] if i > 0 else np.inf
        right = keep[i + 1] if i < keep.size - 1 else np.inf
        if keep[i] < left and keep[i] < right:
            count += 1
    return count

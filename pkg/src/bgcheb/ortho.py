"""Weighted inner products of (beta, gamma)-Chebyshev functions over Omega.

The integral over ``Omega_{beta,gamma}`` is taken in the variable ``t`` with
``x = cos(rho*t/2 + gamma*pi/2)``, ``t in [0, pi]``.  The weight times the
Jacobian is then identically 1 and the integrand is smooth, so plain
Gauss-Legendre on ``[0, pi]`` converges spectrally.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import integrate

from .errors import DomainError
from .functions import BGChebFunction, eval_direct
from .params import ParamPair, omega_interval


class QuadratureRule(str, enum.Enum):
    SUBSTITUTED_GAUSS_LEGENDRE = "substituted-gauss-legendre"


@dataclass(frozen=True)
class QuadratureSpec:
    node_count: int
    rule: QuadratureRule = QuadratureRule.SUBSTITUTED_GAUSS_LEGENDRE

    def __post_init__(self):
        if self.node_count < 1:
            raise DomainError("node_count must be positive")


def default_quadrature(r: int, s: int) -> QuadratureSpec:
    return QuadratureSpec(max(64, r + s + 16))


@dataclass(frozen=True)
class GramMatrix:
    max_index: int
    entries: np.ndarray
    params: ParamPair

    def to_csv(self) -> str:
        return "".join(",".join(f"{v:.17g}" for v in row) + "\n" for row in self.entries)


def exact_inner_product(r: int, s: int) -> float:
    if r != s:
        return 0.0
    return math.pi if r == 0 else math.pi / 2


def weight(p: ParamPair, x):
    """``2 / (rho * sqrt(1 - x^2))`` on the open interval (-1, 1)."""
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) >= 1.0):
        raise DomainError("the weight is singular at x = +-1")
    out = 2.0 / (float(p.rho) * np.sqrt((1.0 - arr) * (1.0 + arr)))
    return float(out) if out.ndim == 0 else out


_GL_CACHE: dict = {}


def _gauss_legendre_0_pi(count: int):
    if count not in _GL_CACHE:
        t, w = leggauss(count)
        _GL_CACHE[count] = ((t + 1.0) * (np.pi / 2), w * (np.pi / 2))
    return _GL_CACHE[count]


def _substituted_nodes(p: ParamPair, count: int):
    """Nodes in x and the combined factor ``w(x) |dx/dt|`` times the GL weight."""
    t, wq = _gauss_legendre_0_pi(count)
    rho, gamma = float(p.rho), float(p.gamma)
    x = np.cos(rho * t / 2.0 + gamma * np.pi / 2.0)
    jac = (rho / 2.0) * np.sqrt((1.0 - x) * (1.0 + x))
    return x, wq * weight(p, x) * jac


def inner_product(r: int, s: int, p: ParamPair, q: Optional[QuadratureSpec] = None) -> float:
    """``int_Omega T_r T_s w dx`` by substituted Gauss-Legendre quadrature."""
    if r < 0 or s < 0:
        raise DomainError("indices must be non-negative")
    q = q or default_quadrature(r, s)
    if q.node_count < r + s + 1:
        raise DomainError(f"node_count {q.node_count} < r + s + 1 = {r + s + 1}")
    x, factor = _substituted_nodes(p, q.node_count)
    tr = eval_direct(BGChebFunction(r, p), x)
    ts = eval_direct(BGChebFunction(s, p), x)
    return float(np.sum(tr * ts * factor))


def inner_product_xspace(r: int, s: int, p: ParamPair, clip: float = 1e-10) -> float:
    """Cross-check: adaptive quadrature directly in x (accurate to ~1e-4).

    Endpoints at +-1, where the weight is singular, are pulled in by ``clip``.
    """
    om = omega_interval(p)
    lo = max(om.lo, -1.0 + clip)
    hi = min(om.hi, 1.0 - clip)
    fr, fs = BGChebFunction(r, p), BGChebFunction(s, p)

    def integrand(x):
        return eval_direct(fr, x) * eval_direct(fs, x) * weight(p, x)

    val, _ = integrate.quad(integrand, lo, hi, limit=500)
    return float(val)


def gram_matrix(max_index: int, p: ParamPair, q: Optional[QuadratureSpec] = None) -> GramMatrix:
    """All inner products for ``0 <= r, s <= max_index`` (symmetric by construction)."""
    if max_index < 0:
        raise DomainError("max_index must be non-negative")
    q = q or default_quadrature(max_index, max_index)
    if q.node_count < 2 * max_index + 1:
        raise DomainError(f"node_count {q.node_count} < {2 * max_index + 1}")
    x, factor = _substituted_nodes(p, q.node_count)
    rows = np.array([eval_direct(BGChebFunction(k, p), x) for k in range(max_index + 1)])
    rows = np.atleast_2d(rows)
    g = (rows * factor) @ rows.T
    g = 0.5 * (g + g.T)
    return GramMatrix(max_index, g, p)

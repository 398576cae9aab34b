"""Pointwise evaluation of (beta, gamma)-Chebyshev functions.

``T_n(x) = cos(f * (arccos x - gamma*pi/2))`` with frequency ``f = 2n/rho``.
All evaluators accept a scalar or an array and return the same shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .params import Number, ParamPair, make_params, make_params_float

CLAMP_BAND = 1e-14


def _as_unit_interval(x):
    """Validate ``|x| <= 1`` (with a round-off band) and clamp."""
    arr = np.asarray(x, dtype=float)
    if np.any(np.isnan(arr)) or np.any(np.abs(arr) > 1.0 + CLAMP_BAND):
        raise DomainError("x must lie in [-1, 1]")
    return np.clip(arr, -1.0, 1.0)


def _unwrap(arr):
    return float(arr) if arr.ndim == 0 else arr


def frequency_and_phase(n: int, p: ParamPair) -> tuple[float, float]:
    """Return ``(2n/rho, 2n/rho * gamma*pi/2)`` as doubles.

    For exact parameters both are formed as rationals first; the phase is
    reduced modulo ``2*pi`` before the single rounding step.
    """
    if p.exact:
        freq = Fraction(2 * n) / p.rho
        phase_over_pi = (freq * p.gamma / 2) % 2
        return float(freq), float(phase_over_pi) * np.pi
    freq = 2.0 * n / float(p.rho)
    return freq, freq * float(p.gamma) * np.pi / 2.0


def _angle(n, p, x):
    xc = _as_unit_interval(x)
    freq, phase = frequency_and_phase(n, p)
    if phase == 0.0:
        return xc, freq * np.arccos(xc)
    return xc, freq * np.arccos(xc) - phase


def _check_degree(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"degree index must be a non-negative integer, got {n!r}")


@dataclass(frozen=True)
class BGChebFunction:
    """The function ``T_n^{beta,gamma}`` as a callable object."""

    n: int
    params: ParamPair

    def __post_init__(self):
        _check_degree(self.n)

    def __call__(self, x):
        return eval_direct(self, x)

    def recurrence(self, x):
        return eval_recurrence(self, x)

    def lobatto(self, x):
        return eval_lobatto_fn(self.n, self.params, x)


def eval_direct(f: BGChebFunction, x):
    """Evaluate from the closed form."""
    if f.n == 0:
        xc = _as_unit_interval(x)
        return _unwrap(np.ones_like(xc))
    _, arg = _angle(f.n, f.params, x)
    return _unwrap(np.cos(arg))


def eval_recurrence(f: BGChebFunction, x):
    """Evaluate by forward three-term recurrence from ``T_0 = 1`` and ``T_1``.

    ``T_{k+1} = 2 T_1 T_k - T_{k-1}``; O(n) time and O(1) extra space.
    """
    xc = _as_unit_interval(x)
    prev = np.ones_like(xc)
    if f.n == 0:
        return _unwrap(prev)
    t1 = np.asarray(eval_direct(BGChebFunction(1, f.params), xc), dtype=float)
    cur = t1
    two_t1 = 2.0 * t1
    for _ in range(f.n - 1):
        prev, cur = cur, two_t1 * cur - prev
    return _unwrap(cur)


def eval_lobatto_fn(n: int, p: ParamPair, x):
    """Evaluate the Lobatto companion ``(rho/2n) (1-x^2) d/dx T_n``.

    Carrying out the derivative gives ``sqrt(1-x^2) * sin(f*(arccos x - gamma*pi/2))``,
    which is what is computed; the value at ``x = +-1`` is exactly 0.
    """
    _check_degree(n)
    if n == 0:
        raise DomainError("the Lobatto companion is defined for n >= 1")
    xc, arg = _angle(n, p, x)
    s = np.sqrt((1.0 - xc) * (1.0 + xc))
    return _unwrap(s * np.sin(arg))


def symmetry_reflect(n: int, nu: Number, x):
    """Return both sides of ``T_n^{nu,0}(x) = (-1)^n T_n^{0,nu}(-x)``."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError("n must be a positive integer")
    if isinstance(nu, float):
        left_p, right_p = make_params_float(nu, 0.0), make_params_float(0.0, nu)
    else:
        left_p, right_p = make_params(nu, 0), make_params(0, nu)
    xc = _as_unit_interval(x)
    lhs = eval_direct(BGChebFunction(n, left_p), xc)
    rhs = (-1) ** n * np.asarray(eval_direct(BGChebFunction(n, right_p), -xc))
    return lhs, _unwrap(np.asarray(rhs))

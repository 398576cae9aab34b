"""Exact detection of parameter choices for which ``T_n^{beta,gamma}`` is a
classical Chebyshev polynomial (up to sign) or ``+-sin(d arccos x)``.

Writing ``c = 2n/rho`` and ``T_n(x) = cos(c*arccos x - c*gamma*pi/2)``:
when ``c`` is an integer and ``c*gamma`` is an integer ``k``, the phase is
``k*pi/2`` and the four residues of ``k`` mod 4 give ``T_c``, ``sin``,
``-T_c`` and ``-sin`` respectively.  Everything is decided in rational
arithmetic.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DomainError
from .functions import BGChebFunction, eval_direct
from .params import ParamPair, make_params
from .points import cheb_points, lobatto_points


class PolyStatus(str, enum.Enum):
    NOT_POLYNOMIAL = "NotPolynomial"
    COSINE = "Cosine"
    SINE = "Sine"


@dataclass(frozen=True)
class PolyClassification:
    status: PolyStatus
    degree: Optional[int] = None
    sign: Optional[int] = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "degree": self.degree,
            "sign": self.sign,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class SubsetParams:
    n: int
    kappa1: int
    kappa2: int

    @property
    def total(self) -> int:
        return self.n + self.kappa1 + self.kappa2

    @property
    def beta(self) -> Fraction:
        return Fraction(2 * self.kappa1, self.total)

    @property
    def gamma(self) -> Fraction:
        return Fraction(2 * self.kappa2, self.total)

    @property
    def params(self) -> ParamPair:
        return make_params(self.beta, self.gamma)


def _check_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {value!r}")


def beta_m(m: int) -> Fraction:
    """``2 - 2/m``: with gamma = 0 this turns ``T_n`` into ``T_{mn}``."""
    _check_int("m", m, 2)
    return 2 - Fraction(2, m)


def beta_mn(m: int, n: int) -> Fraction:
    """``2 - 2n/m`` for ``0 < n < m``: with gamma = 0, ``T_n`` becomes ``T_m``."""
    _check_int("n", n, 1)
    if n >= m:
        raise DomainError(f"beta_mn needs n < m, got m={m}, n={n}")
    return 2 - Fraction(2 * n, m)


_RESIDUE_TABLE = {
    0: (PolyStatus.COSINE, 1),
    1: (PolyStatus.SINE, 1),
    2: (PolyStatus.COSINE, -1),
    3: (PolyStatus.SINE, -1),
}


def classify(n: int, p: ParamPair) -> PolyClassification:
    """Decide whether ``T_n^{beta,gamma}`` is ``+-T_d`` or ``+-sin(d arccos x)``."""
    _check_int("n", n, 1)
    if not p.exact:
        raise DomainError("classification requires exact rational parameters")
    c = Fraction(2 * n) / p.rho
    if c.denominator != 1:
        return PolyClassification(PolyStatus.NOT_POLYNOMIAL, note="non-integer frequency")
    k = c * p.gamma
    if k.denominator != 1:
        return PolyClassification(
            PolyStatus.NOT_POLYNOMIAL, note="integer-frequency, non-axis phase"
        )
    status, sign = _RESIDUE_TABLE[k.numerator % 4]
    return PolyClassification(status, int(c), sign)


def verify_classification(
    n: int, p: ParamPair, cls: PolyClassification, grid_size: int = 1001
) -> float:
    """Max deviation between ``T_n^{beta,gamma}`` and the classified target on a grid."""
    if cls.status is PolyStatus.NOT_POLYNOMIAL:
        raise DomainError("nothing to verify for a NotPolynomial classification")
    x = np.linspace(-1.0, 1.0, grid_size)
    theta = np.arccos(x)
    if cls.status is PolyStatus.COSINE:
        target = cls.sign * np.cos(cls.degree * theta)
    else:
        target = cls.sign * np.sin(cls.degree * theta)
    values = eval_direct(BGChebFunction(n, p), x)
    return float(np.max(np.abs(values - target)))


def subset_params(n: int, kappa1: int, kappa2: int) -> SubsetParams:
    """Parameters for which the point sets are slices of classical ones."""
    _check_int("n", n, 1)
    _check_int("kappa1", kappa1, 0)
    _check_int("kappa2", kappa2, 0)
    if kappa1 == 0 and kappa2 == 0:
        raise DomainError("kappa1 = kappa2 = 0 is the classical (identity) case")
    return SubsetParams(n, kappa1, kappa2)


def subset_slices(sp: SubsetParams) -> tuple[np.ndarray, np.ndarray]:
    """The classical Chebyshev and CL points that should remain.

    With ``N = n + kappa1 + kappa2``, the Lobatto set keeps ``u_l``,
    ``l = kappa2..n+kappa2`` of the N+1 CL points, and the first-kind set
    keeps ``t_l``, ``l = kappa2+1..kappa2+n`` of the N Chebyshev points
    (1-based, as in ``t_l = cos((2l-1)pi/(2N))``).
    """
    classical = make_params(0, 0)
    big_cheb = cheb_points(sp.total, classical).array
    big_cl = lobatto_points(sp.total + 1, classical).array
    k2 = sp.kappa2
    return big_cheb[k2 : k2 + sp.n], big_cl[k2 : k2 + sp.n + 1]


def verify_subset(n: int, kappa1: int, kappa2: int, tol: float = 1e-14) -> bool:
    sp = subset_params(n, kappa1, kappa2)
    want_cheb, want_cl = subset_slices(sp)
    got_cheb = cheb_points(n, sp.params).array
    got_cl = lobatto_points(n + 1, sp.params).array
    if got_cheb.shape != want_cheb.shape or got_cl.shape != want_cl.shape:
        return False
    return bool(
        np.max(np.abs(got_cheb - want_cheb)) <= tol and np.max(np.abs(got_cl - want_cl)) <= tol
    )

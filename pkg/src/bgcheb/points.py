"""(beta, gamma)-Chebyshev point sets, the Kosloff Tal-Ezer map and the
mapped-equispaced characterisation.

Constructors take the number of points.  For Lobatto-type sets with
``count`` points the angular step is ``rho*pi / (2*(count-1))``.  Points are
listed for increasing angle, so abscissae are strictly decreasing.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import DomainError
from .params import (
    ParamPair,
    cospi,
    format_rational,
    make_params,
    make_params_float,
    parse_rational,
)


class PointKind(str, enum.Enum):
    FIRST_KIND = "first-kind"
    LOBATTO = "lobatto"
    EXTREMA = "extrema"
    EQUISPACED_FIRST_KIND = "equispaced-first-kind"
    EQUISPACED_LOBATTO = "equispaced-lobatto"


_MAPPED_KIND = {
    PointKind.EQUISPACED_FIRST_KIND: PointKind.FIRST_KIND,
    PointKind.EQUISPACED_LOBATTO: PointKind.LOBATTO,
}


@dataclass(frozen=True)
class PointSet:
    """An ordered, immutable set of abscissae with its provenance."""

    abscissae: tuple
    kind: PointKind
    params: ParamPair
    alpha: Optional[float] = None  # set when produced by map_pointset
    exact: Optional[tuple] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        xs = tuple(float(v) for v in self.abscissae)
        object.__setattr__(self, "abscissae", xs)
        if not xs:
            raise DomainError("a point set needs at least one point")
        if any(not (-1.0 <= v <= 1.0) for v in xs):
            raise DomainError("abscissae must lie in [-1, 1]")
        if any(a <= b for a, b in zip(xs, xs[1:])):
            raise DomainError("abscissae must be strictly decreasing")

    @property
    def count(self) -> int:
        return len(self.abscissae)

    def __len__(self):
        return len(self.abscissae)

    def __iter__(self):
        return iter(self.abscissae)

    def __getitem__(self, i):
        return self.abscissae[i]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.abscissae)

    def to_csv(self) -> str:
        return "".join(f"{v:.17g}\n" for v in self.abscissae)

    def to_dict(self) -> dict:
        beta, gamma = self.params.to_strings()
        return {
            "kind": self.kind.value,
            "count": self.count,
            "params": {"beta": beta, "gamma": gamma, "exact": self.params.exact},
            "alpha": self.alpha,
            "abscissae": list(self.abscissae),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "PointSet":
        pd = d["params"]
        if pd.get("exact", True):
            params = make_params(parse_rational(pd["beta"]), parse_rational(pd["gamma"]))
        else:
            params = make_params_float(float(pd["beta"]), float(pd["gamma"]))
        ps = cls(tuple(d["abscissae"]), PointKind(d["kind"]), params, d.get("alpha"))
        if "count" in d and d["count"] != ps.count:
            raise DomainError("count does not match the number of abscissae")
        return ps

    @classmethod
    def from_json(cls, text: str) -> "PointSet":
        return cls.from_dict(json.loads(text))


def _check_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {value!r}")


def _half(p: ParamPair):
    return p.gamma / 2 if p.exact else float(p.gamma) / 2.0


def _cos_angles(coeffs, p: ParamPair):
    """``cos(pi*(c + gamma/2))`` for each angular coefficient ``c``."""
    g = _half(p)
    return tuple(cospi(c + g) for c in coeffs)


def cheb_points(n: int, p: ParamPair) -> PointSet:
    """Zeros of ``T_n^{beta,gamma}``: ``cos(rho(2j-1)pi/(4n) + gamma*pi/2)``, j = 1..n."""
    _check_int("n", n, 1)
    rho = p.rho
    if p.exact:
        coeffs = [rho * (2 * j - 1) / (4 * n) for j in range(1, n + 1)]
    else:
        coeffs = [float(rho) * (2 * j - 1) / (4 * n) for j in range(1, n + 1)]
    return PointSet(_cos_angles(coeffs, p), PointKind.FIRST_KIND, p)


def lobatto_points(count: int, p: ParamPair) -> PointSet:
    """(beta, gamma)-Chebyshev-Lobatto points; endpoints are those of Omega."""
    _check_int("count", count, 2)
    m = count - 1
    if p.exact:
        coeffs = [p.rho * j / (2 * m) for j in range(count)]
    else:
        coeffs = [float(p.rho) * j / (2 * m) for j in range(count)]
    return PointSet(_cos_angles(coeffs, p), PointKind.LOBATTO, p)


def extrema_points(n: int, p: ParamPair) -> PointSet:
    """Interior extrema of ``T_n^{beta,gamma}`` (n - 1 points)."""
    _check_int("n", n, 2)
    if p.exact:
        coeffs = [p.rho * j / (2 * n) for j in range(1, n)]
    else:
        coeffs = [float(p.rho) * j / (2 * n) for j in range(1, n)]
    return PointSet(_cos_angles(coeffs, p), PointKind.EXTREMA, p)


def kte_map(alpha: float, x):
    """Kosloff Tal-Ezer map ``sin(alpha*pi*x/2) / sin(alpha*pi/2)``."""
    if not (0.0 < float(alpha) <= 1.0):
        raise DomainError(f"alpha must lie in (0, 1], got {alpha!r}")
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        if abs(x) > 1:
            raise DomainError("x must lie in [-1, 1]")
        if alpha == 1:
            # sin(pi*x/2) = cos(pi*(1-x)/2), reduced exactly
            return cospi(Fraction(1 - x) / 2)
        x = float(x)
    arr = np.asarray(x, dtype=float)
    if np.any(np.abs(arr) > 1.0):
        raise DomainError("x must lie in [-1, 1]")
    if alpha == 1:
        out = np.sin(np.pi * arr / 2.0)
    else:
        out = np.sin(alpha * np.pi * arr / 2.0) / math.sin(alpha * np.pi / 2.0)
    return float(out) if out.ndim == 0 else out


def _equispaced(values, kind, p):
    return PointSet(tuple(values), kind, p, exact=tuple(values) if p.exact else None)


def equispaced_first_kind(n: int, p: ParamPair) -> PointSet:
    """``1 - gamma - rho(2j-1)/(2n)``, j = 1..n, midpoints of n cells of Omega-bar."""
    _check_int("n", n, 1)
    if p.exact:
        vals = [1 - p.gamma - p.rho * (2 * j - 1) / (2 * n) for j in range(1, n + 1)]
    else:
        g, r = float(p.gamma), float(p.rho)
        vals = [1.0 - g - r * (2 * j - 1) / (2 * n) for j in range(1, n + 1)]
    return _equispaced(vals, PointKind.EQUISPACED_FIRST_KIND, p)


def equispaced_lobatto(count: int, p: ParamPair) -> PointSet:
    """``1 - gamma - rho*j/(count-1)``, j = 0..count-1, spanning Omega-bar."""
    _check_int("count", count, 2)
    m = count - 1
    if p.exact:
        vals = [1 - p.gamma - p.rho * j / m for j in range(count)]
    else:
        g, r = float(p.gamma), float(p.rho)
        vals = [1.0 - g - r * j / m for j in range(count)]
    return _equispaced(vals, PointKind.EQUISPACED_LOBATTO, p)


def map_pointset(ps: PointSet, alpha: float) -> PointSet:
    """Apply ``kte_map(alpha, .)`` elementwise, preserving order.

    Exact equispaced sets are mapped from their rational abscissae.
    """
    src = ps.exact if ps.exact is not None else ps.abscissae
    mapped = tuple(float(kte_map(alpha, v)) for v in src)
    kind = _MAPPED_KIND.get(ps.kind, ps.kind) if alpha == 1 else ps.kind
    return PointSet(mapped, kind, ps.params, float(alpha))


def cheb_as_lobatto(n: int, p: ParamPair) -> tuple[ParamPair, PointSet]:
    """Express ``cheb_points(n, p)`` as a Lobatto set with shifted parameters.

    Both parameters move up by ``rho/(2n)``; the shifted pair is invalid
    (beta + gamma = 2) for n = 1, which raises DomainError.
    """
    _check_int("n", n, 1)
    if n == 1:
        raise DomainError("cheb_as_lobatto is undefined for n = 1 (shifted beta + gamma = 2)")
    if p.exact:
        shift = p.rho / (2 * n)
        shifted = make_params(p.beta + shift, p.gamma + shift)
    else:
        shift = float(p.rho) / (2 * n)
        shifted = make_params_float(float(p.beta) + shift, float(p.gamma) + shift)
    return shifted, lobatto_points(n, shifted)

"""Exact (beta, gamma) parameter pairs and the intervals they induce.

Parameters are kept as :class:`fractions.Fraction` so that questions such as
"is ``2n / (2 - beta - gamma)`` an integer" can be answered exactly.  A
float-backed pair can be built with :func:`make_params_float`; every
numerical routine accepts it, but exact classification refuses it.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError

Rational = Fraction
RationalLike = Union[Fraction, int, str]
Number = Union[Fraction, float]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Decimal strings such as ``"0.5"`` are rejected on purpose: they usually
    come from a rounded float and would silently lose exactness.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise DomainError(f"not a rational literal (expected 'p/q' or 'p'): {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction) -> str:
    """Inverse of :func:`parse_rational`."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(
        f"expected an exact rational (Fraction, int or 'p/q' string), got {type(value).__name__}; "
        "use make_params_float for real-valued parameters"
    )


def cospi(t: Number) -> float:
    """Return ``cos(pi * t)`` with exact values at multiples of 1/2.

    The argument is reduced to ``[0, 1/2]`` (exactly, when ``t`` is a
    Fraction) before calling the libm routines, so symmetric angles give
    bitwise-antisymmetric results and ``cospi(1/2) == 0``.
    """
    if isinstance(t, Fraction):
        r = t % 2
        if r > 1:
            r = 2 - r
        sign = 1.0
        if r > Fraction(1, 2):
            r = 1 - r
            sign = -1.0
        if r == Fraction(1, 2):
            return 0.0
        if r <= Fraction(1, 4):
            return sign * math.cos(math.pi * float(r))
        return sign * math.sin(math.pi * float(Fraction(1, 2) - r))
    r = math.fmod(abs(float(t)), 2.0)
    if r > 1.0:
        r = 2.0 - r
    sign = 1.0
    if r > 0.5:
        r = 1.0 - r
        sign = -1.0
    if r == 0.5:
        return 0.0
    if r <= 0.25:
        return sign * math.cos(math.pi * r)
    return sign * math.sin(math.pi * (0.5 - r))


@dataclass(frozen=True)
class Interval:
    """Closed sub-interval ``[lo, hi]`` of ``[-1, 1]``."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (-1.0 <= self.lo <= self.hi <= 1.0):
            raise DomainError(f"invalid interval [{self.lo}, {self.hi}]")

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return self.lo - slack <= x <= self.hi + slack

    @property
    def length(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class ParamPair:
    """A validated ``(beta, gamma)`` pair.

    Build instances with :func:`make_params` (exact) or
    :func:`make_params_float`; the constructor itself also validates.
    """

    beta: Number
    gamma: Number

    def __post_init__(self):
        b, g = self.beta, self.gamma
        if isinstance(b, Fraction) != isinstance(g, Fraction):
            raise TypeError("beta and gamma must both be exact or both be float")
        if isinstance(b, float) and not (math.isfinite(b) and math.isfinite(g)):
            raise DomainError("parameters must be finite")
        if b < 0 or g < 0:
            raise DomainError(f"parameters must be non-negative, got beta={b}, gamma={g}")
        if b >= 2 or g >= 2:
            raise DomainError(f"parameters must be < 2, got beta={b}, gamma={g}")
        if b + g >= 2:
            raise DomainError(f"beta + gamma must be < 2, got {b + g}")

    @property
    def exact(self) -> bool:
        """True when both parameters are exact rationals (classifiable)."""
        return isinstance(self.beta, Fraction)

    @property
    def rho(self) -> Number:
        """``2 - beta - gamma``, exact for rational pairs."""
        return 2 - self.beta - self.gamma

    def to_strings(self) -> tuple[str, str]:
        if self.exact:
            return format_rational(self.beta), format_rational(self.gamma)
        return repr(float(self.beta)), repr(float(self.gamma))

    def __str__(self):
        b, g = self.to_strings()
        return f"(beta={b}, gamma={g})"


def make_params(beta: RationalLike, gamma: RationalLike) -> ParamPair:
    """Validated exact pair; raises DomainError outside the admissible set."""
    return ParamPair(as_rational(beta), as_rational(gamma))


def make_params_float(beta: float, gamma: float) -> ParamPair:
    """Float-backed pair for real-valued (e.g. optimised) parameters."""
    return ParamPair(float(beta), float(gamma))


def omega_interval(p: ParamPair) -> Interval:
    """``[-cos(beta*pi/2), cos(gamma*pi/2)]``; endpoints rounded to double."""
    return Interval(-cospi(p.beta / 2), cospi(p.gamma / 2))


def omega_bar_interval(p: ParamPair) -> Interval:
    """``[-1 + beta, 1 - gamma]``, the equispaced pre-image interval."""
    return Interval(float(p.beta - 1), float(1 - p.gamma))

"""Closed intervals certifying that a real quantity lies inside them.

An :class:`Enclosure` is the unit of certified computation: every derived
quantity in this library is reported as an interval guaranteed to contain
the true real value.  Arithmetic between enclosures rounds outward by one
ulp per endpoint, so combining valid enclosures yields a valid enclosure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Enclosure"]

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _sum_error(x: float, y: float, s: float) -> float:
    # Knuth two-sum: the exact rounding error of s = fl(x + y).
    t = s - x
    return (x - (s - t)) + (y - t)


def _sum_down(x: float, y: float) -> float:
    s = x + y
    e = _sum_error(x, y, s)
    if e == 0.0:  # error-free sum, no outward rounding needed
        return s
    return s if e > 0.0 else _down(s)


def _sum_up(x: float, y: float) -> float:
    s = x + y
    e = _sum_error(x, y, s)
    if e == 0.0:
        return s
    return s if e < 0.0 else _up(s)


@dataclass(frozen=True, slots=True)
class Enclosure:
    """Interval [lo, hi] with lo <= hi."""

    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:  # also rejects NaN endpoints
            raise ValueError(f"enclosure endpoints out of order: [{self.lo}, {self.hi}]")

    @staticmethod
    def point(value: float) -> "Enclosure":
        """Degenerate enclosure of an exactly representable value."""
        return Enclosure(value, value)

    @staticmethod
    def around(value: float, pad: float) -> "Enclosure":
        """Enclosure [value - pad, value + pad]."""
        return Enclosure(value - pad, value + pad)

    @staticmethod
    def product(x: float, y: float) -> "Enclosure":
        """Enclosure of the exact real product of two floats."""
        if x == 0.0 or y == 0.0:
            return Enclosure(0.0, 0.0)
        p = x * y
        return Enclosure(_down(p), _up(p))

    def width(self) -> float:
        return self.hi - self.lo

    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def encloses(self, other: "Enclosure") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def overlaps(self, other: "Enclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def within_band(self, tol: float) -> bool:
        """True when the whole interval sits inside [-tol, tol]."""
        return -tol <= self.lo and self.hi <= tol

    def pad(self, eps: float) -> "Enclosure":
        """Widen both endpoints outward by eps (eps >= 0)."""
        if eps < 0:
            raise ValueError("pad amount must be nonnegative")
        return Enclosure(self.lo - eps, self.hi + eps)

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __add__(self, other) -> "Enclosure":
        o = _coerce(other)
        return Enclosure(_sum_down(self.lo, o.lo), _sum_up(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Enclosure":
        o = _coerce(other)
        return Enclosure(_sum_down(self.lo, -o.hi), _sum_up(self.hi, -o.lo))

    def __rsub__(self, other) -> "Enclosure":
        return _coerce(other) - self

    def __mul__(self, other) -> "Enclosure":
        o = _coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Enclosure(_down(min(products)), _up(max(products)))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Enclosure({self.lo!r}, {self.hi!r})"


def _coerce(value) -> Enclosure:
    if isinstance(value, Enclosure):
        return value
    if isinstance(value, (int, float)):
        return Enclosure.point(float(value))
    raise TypeError(f"cannot combine Enclosure with {type(value).__name__}")

"""Independent closed-form references used to validate enclosures.

Nothing here touches the quadrature or inversion machinery, so containment
failures genuinely indicate enclosure bugs rather than shared mistakes.
The power-family values are plain floating-point arithmetic; the fine-grid
midpoint value is a reference, not a bound.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import DomainError
from .legendre import PowerFamily
from .monotone import MonotoneFn

__all__ = [
    "ClosedFormCase",
    "power_remainder",
    "power_upper_bound",
    "power_merkle",
    "fine_riemann_reference",
    "REFERENCE_PANELS",
]

REFERENCE_PANELS = 2**22


def _check_nonnegative(a: float, b: float) -> None:
    if a < 0 or b < 0:
        raise DomainError(f"power-family points must be nonnegative, got ({a!r}, {b!r})")


def power_remainder(fam: PowerFamily, a: float, b: float) -> float:
    """a**alpha/alpha + b**beta/beta - a*b."""
    _check_nonnegative(a, b)
    return a**fam.alpha / fam.alpha + b**fam.beta / fam.beta - a * b


def power_upper_bound(fam: PowerFamily, a: float, b: float) -> float:
    """-(a**(alpha-1) - b) * (b**(beta-1) - a)."""
    _check_nonnegative(a, b)
    return -((a ** (fam.alpha - 1.0) - b) * (b ** (fam.beta - 1.0) - a))


def power_merkle(fam: PowerFamily, a: float, b: float) -> float:
    """max(a**alpha, b**beta) - a*b (both power domains start at 0)."""
    _check_nonnegative(a, b)
    return max(a**fam.alpha, b**fam.beta) - a * b


@dataclass(frozen=True, slots=True)
class ClosedFormCase:
    """Frozen reference values for one power-family point."""

    family: PowerFamily
    a: float
    b: float
    remainder_exact: float
    upper_bound_exact: float
    merkle_exact: float | None

    @classmethod
    def at_point(cls, fam: PowerFamily, a: float, b: float) -> "ClosedFormCase":
        return cls(
            family=fam,
            a=a,
            b=b,
            remainder_exact=power_remainder(fam, a, b),
            upper_bound_exact=power_upper_bound(fam, a, b),
            merkle_exact=power_merkle(fam, a, b),
        )


def fine_riemann_reference(f: MonotoneFn, lo: float, hi: float) -> float:
    """Midpoint-rule value on a fixed 2**22-panel grid.

    A reference for containment tests, not a bound.
    """
    if not lo <= hi:
        raise DomainError(f"integration range reversed: [{lo}, {hi}]")
    if not f.domain.contains_range(lo, hi):
        raise DomainError(
            f"range [{lo}, {hi}] not contained in [{f.domain.lo}, {f.domain.hi}]"
        )
    if lo == hi:
        return 0.0
    code, a0, a1, xs, ys = f.kernel_args()
    total = _kernels.midpoint_sum(code, a0, a1, xs, ys, lo, hi, REFERENCE_PANELS)
    return total * ((hi - lo) / REFERENCE_PANELS)

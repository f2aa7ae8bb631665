"""Convex potentials built from increasing derivatives, and their conjugates.

A potential is represented by its derivative (a :class:`MonotoneFn`) plus an
anchor value at the left domain endpoint; values are integral enclosures
computed on demand.  Conjugate pairs satisfy the anchor relation
Phi(alpha1) + Psi(beta1) = alpha1 * beta1 by construction, and the conjugate
is realized through the integral of the inverse derivative.  The pointwise
formula b * psi(b) - Phi(psi(b)) serves as a cross-check only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .enclosure import Enclosure
from .errors import ConsistencyError, DomainError, ValidationError
from .gap import GapReport, upper_bound_enclosure
from .monotone import ConjugatePair, MonotoneFn, power_fn
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integral_enclosure

__all__ = [
    "Potential",
    "LegendrePair",
    "PowerFamily",
    "potential_from_derivative",
    "conjugate_value",
    "legendre_gap_report",
    "holder_gap",
]

_EPS = math.ulp(1.0)


@dataclass(frozen=True, eq=False)
class Potential:
    """Convex C1 potential given by an increasing derivative and the value
    at the left endpoint of the derivative's domain."""

    derivative: MonotoneFn
    anchor: float

    def value(
        self, x: float, cfg: QuadratureConfig = DEFAULT_CONFIG, method: str = "auto"
    ) -> Enclosure:
        enc, _ = integral_enclosure(self.derivative, self.derivative.domain.lo, x, cfg, method)
        return enc + Enclosure.point(self.anchor)


def potential_from_derivative(
    phi: MonotoneFn,
    anchor_value: float,
    x: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> Enclosure:
    """Enclosure of anchor_value + integral of phi from its domain start to x."""
    return Potential(phi, anchor_value).value(x, cfg, method)


@dataclass(frozen=True, eq=False)
class LegendrePair:
    """A potential and its conjugate, tied together by a shared derivative.

    The conjugate anchor is alpha1*beta1 - phi_anchor, which pins the anchor
    identity Phi(alpha1) + Psi(beta1) = alpha1*beta1 to within one rounding.
    """

    phi: MonotoneFn
    phi_anchor: float = 0.0
    inverse_tol: float = 1e-12

    @cached_property
    def conjugates(self) -> ConjugatePair:
        return ConjugatePair(self.phi, inverse_tol=self.inverse_tol)

    @cached_property
    def Phi(self) -> Potential:
        return Potential(self.phi, self.phi_anchor)

    @cached_property
    def Psi(self) -> Potential:
        alpha1 = self.phi.domain.lo
        beta1 = self.phi.codomain.lo
        return Potential(self.conjugates.inverse_fn, alpha1 * beta1 - self.phi_anchor)


def conjugate_value(
    pair: LegendrePair,
    b: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> Enclosure:
    """Enclosure of the conjugate potential at b, via the integral of the
    inverse derivative from the conjugate anchor.

    The pointwise formula b*psi(b) - Phi(psi(b)) must agree within the
    propagated inversion error; a violation is raised as ConsistencyError
    (it indicates a broken function object, not a tight tolerance).
    """
    if not pair.phi.codomain.contains(b):
        raise DomainError(
            f"b={b!r} outside [{pair.phi.codomain.lo}, {pair.phi.codomain.hi}]"
        )
    enc = pair.Psi.value(b, cfg, method)

    psi_b = pair.conjugates.invert(b)
    x = min(max(psi_b.mid(), pair.phi.domain.lo), pair.phi.domain.hi)
    phi_val = pair.Phi.value(x, cfg, method)
    cross = b * x - phi_val.mid()
    beta_mag = max(abs(pair.phi.codomain.lo), abs(pair.phi.codomain.hi))
    slack = (
        (abs(b) + beta_mag) * 0.5 * psi_b.width()
        + phi_val.width()
        + 64.0 * _EPS * (abs(cross) + 1.0)
    )
    if not enc.pad(slack).contains(cross):
        raise ConsistencyError(
            f"pointwise conjugate value {cross!r} escapes integral enclosure "
            f"[{enc.lo!r}, {enc.hi!r}] widened by {slack!r}"
        )
    return enc


def legendre_gap_report(
    pair: LegendrePair,
    a: float,
    b: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    cert_tol: float = 1e-8,
    method: str = "auto",
) -> GapReport:
    """Gap report for the potential form: the enclosed quantity is
    Phi(a) + Psi(b) - a*b with upper bound -(phi(a) - b) * (psi(b) - a).

    By the integral representation this equals the remainder of the
    derivative pair, so the enclosures must overlap those of
    :func:`younggap.gap.remainder_enclosure` on the same pair.
    """
    if not pair.phi.domain.contains(a):
        raise DomainError(f"a={a!r} outside [{pair.phi.domain.lo}, {pair.phi.domain.hi}]")
    if not pair.phi.codomain.contains(b):
        raise DomainError(f"b={b!r} outside [{pair.phi.codomain.lo}, {pair.phi.codomain.hi}]")
    conj = pair.conjugates
    gap_enc = (
        pair.Phi.value(a, cfg, method)
        + pair.Psi.value(b, cfg, method)
        - Enclosure.product(a, b)
    )
    upper = upper_bound_enclosure(conj, a, b)
    psi_b = conj.invert(b)
    phi_a = pair.phi.eval(a)
    merkle = None
    if conj.alpha.lo == 0.0 and conj.beta.lo == 0.0:
        merkle = max(a * phi_a, b * psi_b.mid()) - a * b
    return GapReport(
        a=a,
        b=b,
        remainder=gap_enc,
        upper_bound=upper,
        merkle_bound=merkle,
        psi_b=psi_b,
        phi_a=phi_a,
        equality_detected=gap_enc.within_band(cert_tol) and upper.within_band(cert_tol),
    )


@dataclass(frozen=True)
class PowerFamily:
    """Conjugate power potentials a**alpha/alpha and b**beta/beta with
    1/alpha + 1/beta = 1, restricted to the compact domain [0, cap]."""

    alpha: float
    beta: float | None = None
    cap: float = 2.0

    def __post_init__(self):
        if not self.alpha > 1:
            raise ValidationError(f"alpha must be > 1, got {self.alpha}")
        beta = self.alpha / (self.alpha - 1.0) if self.beta is None else float(self.beta)
        if abs(1.0 / self.alpha + 1.0 / beta - 1.0) > 1e-12:
            raise ValidationError(
                f"exponents are not conjugate: 1/{self.alpha} + 1/{beta} != 1"
            )
        object.__setattr__(self, "beta", beta)
        if not self.cap > 0:
            raise ValidationError(f"cap must be > 0, got {self.cap}")

    @property
    def b_cap(self) -> float:
        return self.cap ** (self.alpha - 1.0)

    def phi(self) -> MonotoneFn:
        return power_fn(self.alpha - 1.0, (0.0, self.cap))

    def legendre_pair(self) -> LegendrePair:
        return LegendrePair(self.phi(), 0.0)

    def conjugate_pair(self) -> ConjugatePair:
        return ConjugatePair(self.phi())


def holder_gap(fam: PowerFamily, a: float, b: float) -> float:
    """Slack of the rearranged product-bound inequality for power
    potentials:

        b**(beta-1) * a**(alpha-1) <= (1/alpha) * b**beta + (1/beta) * a**alpha

    Returns the right side minus the left side, which is nonnegative and
    vanishes exactly when b = a**(alpha-1).
    """
    if not 0.0 <= a <= fam.cap:
        raise DomainError(f"a={a!r} outside [0, {fam.cap}]")
    if not 0.0 <= b <= fam.b_cap:
        raise DomainError(f"b={b!r} outside [0, {fam.b_cap}]")
    alpha, beta = fam.alpha, fam.beta
    return (
        b**beta / alpha
        + a**alpha / beta
        - b ** (beta - 1.0) * a ** (alpha - 1.0)
    )

"""Two-sided certification of the Young remainder.

For an increasing function phi on [alpha1, alpha2] with inverse psi, the
remainder

    F(a, b) = integral(phi, alpha1..a) + integral(psi, beta1..b) - a*b
              + alpha1*beta1

is nonnegative, vanishes exactly when b = phi(a), and is bounded above by
the product -(psi(b) - a) * (phi(a) - b).  This module evaluates all of
these as enclosures and issues certificates: a verdict is Certified only
when the recorded enclosures force the inequality at the stated tolerance,
and equality versus strict inequality is decided from the same enclosures.

The two remainders at a point and at its swapped partner (psi(b), phi(a))
always sum to exactly minus the product bound; the residual of that
identity is exposed as a quadrature diagnostic whose width tracks the
panel count.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .enclosure import Enclosure
from .errors import BudgetExceeded, DomainError, UnsupportedOrigin, ValidationError
from .monotone import ConjugatePair
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    integral_enclosure,
    refine_inverse_to_width,
)

__all__ = [
    "Verdict",
    "EqualityVerdict",
    "Effort",
    "GapReport",
    "Certificate",
    "remainder_enclosure",
    "upper_bound_enclosure",
    "pair_inequality_gap",
    "complement_identity_residual",
    "merkle_bound",
    "certify",
    "sweep",
]

_EPS = math.ulp(1.0)
_TINY = 1e-300


class Verdict(Enum):
    CERTIFIED = "certified"
    INCONCLUSIVE = "inconclusive"


class EqualityVerdict(Enum):
    EQUALITY = "equality"
    STRICT_INEQUALITY = "strict_inequality"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, slots=True)
class Effort:
    """Refinement effort backing a certificate."""

    phi_panels: int
    psi_panels: int
    target_width: float
    cert_tol: float
    inverse_tol: float
    method: str
    budget_exhausted: bool = False

    def to_dict(self) -> dict:
        return {
            "phi_panels": self.phi_panels,
            "psi_panels": self.psi_panels,
            "target_width": self.target_width,
            "cert_tol": self.cert_tol,
            "inverse_tol": self.inverse_tol,
            "method": self.method,
            "budget_exhausted": self.budget_exhausted,
        }


@dataclass(frozen=True, slots=True)
class GapReport:
    """Enclosures of the remainder and its bounds at one point (a, b)."""

    a: float
    b: float
    remainder: Enclosure
    upper_bound: Enclosure
    merkle_bound: float | None
    psi_b: Enclosure
    phi_a: float
    equality_detected: bool


@dataclass(frozen=True, slots=True)
class Certificate:
    """Machine-checked verdicts at one point, backed by a GapReport.

    lower_holds is Certified iff remainder.lo >= -cert_tol; upper_holds is
    Certified iff remainder.hi <= upper_bound.hi + cert_tol, with the
    conservative cross-check against upper_bound.lo recorded in
    cross_checked when it also succeeds.
    """

    a: float
    b: float
    lower_holds: Verdict
    upper_holds: Verdict
    equality_case: EqualityVerdict
    cross_checked: bool
    effort: Effort

    @property
    def conclusive(self) -> bool:
        return (
            self.lower_holds is Verdict.CERTIFIED
            and self.upper_holds is Verdict.CERTIFIED
            and self.equality_case is not EqualityVerdict.INCONCLUSIVE
        )


def _check_point(pair: ConjugatePair, a: float, b: float) -> None:
    if not pair.alpha.contains(a):
        raise DomainError(f"a={a!r} outside [{pair.alpha.lo}, {pair.alpha.hi}]")
    if not pair.beta.contains(b):
        raise DomainError(f"b={b!r} outside [{pair.beta.lo}, {pair.beta.hi}]")


def _phi_integral(pair, a, cfg, method):
    try:
        enc, panels = integral_enclosure(pair.phi, pair.alpha.lo, a, cfg, method)
        return enc, panels, False
    except BudgetExceeded as err:
        return err.best, err.panels, True


def _psi_integral(pair, b, cfg, method):
    # "auto" integrates the exact inverse family; "riemann" integrates
    # bisection-sampled inverse values, needing no closed form at all.
    if method == "auto":
        enc, panels = integral_enclosure(pair.inverse_fn, pair.beta.lo, b, cfg, "auto")
        return enc, panels, False
    try:
        enc, panels = refine_inverse_to_width(pair, pair.beta.lo, b, cfg)
        return enc, panels, False
    except BudgetExceeded as err:
        return err.best, err.panels, True


def _assemble(pair, a, b, enc_phi, enc_psi) -> Enclosure:
    rect = Enclosure.product(a, b)
    anchor = Enclosure.product(pair.alpha.lo, pair.beta.lo)
    return enc_phi + enc_psi - rect + anchor


def remainder_enclosure(
    pair: ConjugatePair,
    a: float,
    b: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> Enclosure:
    """Enclosure of the remainder F(a, b).

    The two integral enclosures, the exact rectangle term and the origin
    anchor are combined with outward rounding.  Raises BudgetExceeded
    (carrying the best enclosure) if either integral ran out of panels.
    """
    _check_point(pair, a, b)
    enc_phi, p_phi, ex_phi = _phi_integral(pair, a, cfg, method)
    enc_psi, p_psi, ex_psi = _psi_integral(pair, b, cfg, method)
    enc = _assemble(pair, a, b, enc_phi, enc_psi)
    if ex_phi or ex_psi:
        raise BudgetExceeded(
            "remainder quadrature budget exhausted", best=enc, panels=max(p_phi, p_psi)
        )
    return enc


def _phi_value_enclosure(pair: ConjugatePair, a: float) -> tuple[float, Enclosure]:
    phi_a = pair.phi.eval(a)
    return phi_a, Enclosure.around(phi_a, 8.0 * _EPS * abs(phi_a) + _TINY)


def upper_bound_enclosure(pair: ConjugatePair, a: float, b: float) -> Enclosure:
    """Enclosure of -(psi(b) - a) * (phi(a) - b) by interval arithmetic over
    the bisection enclosure of psi(b)."""
    _check_point(pair, a, b)
    psi_b = pair.invert(b)
    _, phi_enc = _phi_value_enclosure(pair, a)
    return -((psi_b - a) * (phi_enc - b))


def pair_inequality_gap(
    pair: ConjugatePair,
    a: float,
    b: float,
    a2: float,
    b2: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> Enclosure:
    """Enclosure of the slack F(a, b) + F(a2, b2) + (a2 - a) * (b2 - b),
    which is nonnegative, with equality exactly at a2 = psi(b), b2 = phi(a)."""
    _check_point(pair, a, b)
    _check_point(pair, a2, b2)
    enc1_phi, p1, ex1 = _phi_integral(pair, a, cfg, method)
    enc1_psi, p2, ex2 = _psi_integral(pair, b, cfg, method)
    enc2_phi, p3, ex3 = _phi_integral(pair, a2, cfg, method)
    enc2_psi, p4, ex4 = _psi_integral(pair, b2, cfg, method)
    cross = (Enclosure.point(a2) - a) * (Enclosure.point(b2) - b)
    slack = (
        _assemble(pair, a, b, enc1_phi, enc1_psi)
        + _assemble(pair, a2, b2, enc2_phi, enc2_psi)
        + cross
    )
    if ex1 or ex2 or ex3 or ex4:
        raise BudgetExceeded(
            "pair-inequality quadrature budget exhausted",
            best=slack,
            panels=max(p1, p2, p3, p4),
        )
    return slack


def complement_identity_residual(
    pair: ConjugatePair,
    a: float,
    b: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    method: str = "riemann",
) -> Enclosure:
    """Enclosure of F(a, b) + F(psi(b), phi(a)) + (psi(b) - a) * (phi(a) - b).

    This quantity is identically zero, so the enclosure must contain 0; its
    width is dominated by the quadrature panel width, which is why the
    default method is the generic Riemann path (the residual then shrinks
    in direct proportion to panel doubling, a useful self-test).
    """
    _check_point(pair, a, b)
    psi_b = pair.invert(b)
    phi_a, phi_enc = _phi_value_enclosure(pair, a)
    phi_a = min(max(phi_a, pair.beta.lo), pair.beta.hi)
    a_swap = min(max(psi_b.mid(), pair.alpha.lo), pair.alpha.hi)

    enc1_phi, p1, ex1 = _phi_integral(pair, a, cfg, method)
    enc1_psi, p2, ex2 = _psi_integral(pair, b, cfg, method)
    enc2_phi, p3, ex3 = _phi_integral(pair, a_swap, cfg, method)
    enc2_psi, p4, ex4 = _psi_integral(pair, phi_a, cfg, method)

    # The swapped remainder is evaluated at the midpoint of the psi(b)
    # bracket and at the rounded phi(a); pad by the worst drift over the
    # bracket (slope bounded by the codomain/domain spans).
    drift = (
        pair.beta.span() * 0.5 * psi_b.width()
        + pair.alpha.span() * 8.0 * _EPS * (abs(phi_a) + 1.0)
    )
    f2 = _assemble(pair, a_swap, phi_a, enc2_phi, enc2_psi).pad(drift)
    f1 = _assemble(pair, a, b, enc1_phi, enc1_psi)
    product = (psi_b - a) * (phi_enc - b)
    residual = f1 + f2 + product
    if ex1 or ex2 or ex3 or ex4:
        raise BudgetExceeded(
            "identity-residual quadrature budget exhausted",
            best=residual,
            panels=max(p1, p2, p3, p4),
        )
    return residual


def merkle_bound(pair: ConjugatePair, a: float, b: float) -> float:
    """Merkle's upper bound max(a*phi(a), b*psi(b)) - a*b, defined only when
    both domains start at 0.

    This is a comparison diagnostic computed from the psi midpoint, not a
    certified quantity.
    """
    if pair.alpha.lo != 0.0 or pair.beta.lo != 0.0:
        raise UnsupportedOrigin(
            f"Merkle bound needs alpha1 = beta1 = 0, got {pair.alpha.lo} and {pair.beta.lo}"
        )
    _check_point(pair, a, b)
    return max(a * pair.phi.eval(a), b * pair.invert(b).mid()) - a * b


def certify(
    pair: ConjugatePair,
    a: float,
    b: float,
    cert_tol: float = 1e-8,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> tuple[Certificate, GapReport]:
    """Certify the two-sided bound 0 <= F(a, b) <= -(psi(b)-a)(phi(a)-b).

    Inconclusiveness is a verdict, not an error: panel-budget exhaustion is
    absorbed into the report (effort.budget_exhausted) and typically yields
    Inconclusive verdicts.  For conclusive equality detection keep cert_tol
    well above the achievable enclosure widths (the defaults leave two
    orders of magnitude).
    """
    if cert_tol <= 0:
        raise ValidationError(f"cert_tol must be > 0, got {cert_tol}")
    _check_point(pair, a, b)
    enc_phi, p_phi, ex_phi = _phi_integral(pair, a, cfg, method)
    enc_psi, p_psi, ex_psi = _psi_integral(pair, b, cfg, method)
    remainder = _assemble(pair, a, b, enc_phi, enc_psi)

    psi_b = pair.invert(b)
    phi_a, phi_enc = _phi_value_enclosure(pair, a)
    upper = -((psi_b - a) * (phi_enc - b))
    merkle = None
    if pair.alpha.lo == 0.0 and pair.beta.lo == 0.0:
        merkle = max(a * phi_a, b * psi_b.mid()) - a * b

    lower_holds = Verdict.CERTIFIED if remainder.lo >= -cert_tol else Verdict.INCONCLUSIVE
    cross_checked = upper.width() <= cert_tol and remainder.hi <= upper.lo + cert_tol
    upper_holds = (
        Verdict.CERTIFIED
        if cross_checked or remainder.hi <= upper.hi + cert_tol
        else Verdict.INCONCLUSIVE
    )
    if remainder.within_band(cert_tol) and upper.within_band(cert_tol):
        equality = EqualityVerdict.EQUALITY
    elif remainder.lo > cert_tol and upper.lo > cert_tol:
        equality = EqualityVerdict.STRICT_INEQUALITY
    else:
        equality = EqualityVerdict.INCONCLUSIVE

    effort = Effort(
        phi_panels=p_phi,
        psi_panels=p_psi,
        target_width=cfg.target_width,
        cert_tol=cert_tol,
        inverse_tol=pair.inverse_tol,
        method=method,
        budget_exhausted=ex_phi or ex_psi,
    )
    report = GapReport(
        a=a,
        b=b,
        remainder=remainder,
        upper_bound=upper,
        merkle_bound=merkle,
        psi_b=psi_b,
        phi_a=phi_a,
        equality_detected=equality is EqualityVerdict.EQUALITY,
    )
    certificate = Certificate(
        a=a,
        b=b,
        lower_holds=lower_holds,
        upper_holds=upper_holds,
        equality_case=equality,
        cross_checked=cross_checked,
        effort=effort,
    )
    return certificate, report


def sweep(
    pair: ConjugatePair,
    grid_a,
    grid_b,
    cert_tol: float = 1e-8,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    method: str = "auto",
) -> list[GapReport]:
    """One GapReport per (a, b) in row-major order over grid_a x grid_b.

    The whole grid is validated first; the first out-of-range point is
    reported with its index.  Output order is deterministic.
    """
    grid_a = [float(a) for a in grid_a]
    grid_b = [float(b) for b in grid_b]
    for i, a in enumerate(grid_a):
        if not pair.alpha.contains(a):
            raise DomainError(f"grid a[{i}]={a!r} outside [{pair.alpha.lo}, {pair.alpha.hi}]")
    for j, b in enumerate(grid_b):
        if not pair.beta.contains(b):
            raise DomainError(f"grid b[{j}]={b!r} outside [{pair.beta.lo}, {pair.beta.hi}]")
    return [certify(pair, a, b, cert_tol, cfg, method)[1] for a in grid_a for b in grid_b]

"""Certified enclosures for the remainder in Young's integral inequality.

For a continuous strictly increasing function phi with inverse psi, the
library evaluates the remainder

    F(a, b) = integral(phi, alpha1..a) + integral(psi, beta1..b)
              - a*b + alpha1*beta1

with rigorous interval enclosures and certifies 0 <= F(a, b) as well as the
product upper bound F(a, b) <= -(psi(b) - a) * (phi(a) - b), including the
shared equality case b = phi(a).  A Legendre-transform layer exposes the
same bound for conjugate convex potentials, and a CLI drives certification,
grid sweeps and conjugate evaluation from JSON function specs.
"""

from .enclosure import Enclosure
from .errors import (
    BudgetExceeded,
    ConsistencyError,
    ConvergenceError,
    DomainError,
    ParseError,
    UnsupportedOrigin,
    ValidationError,
    YoungGapError,
)
from .monotone import (
    ConjugatePair,
    Interval,
    MonotoneAudit,
    MonotoneFn,
    affine_fn,
    exp_fn,
    log_fn,
    power_fn,
    table_fn,
    verify_monotone,
)
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureResult,
    exact_integral_enclosure,
    integral_enclosure,
    inverse_riemann_enclosure,
    refine_inverse_to_width,
    refine_to_width,
    riemann_enclosure,
)
from .gap import (
    Certificate,
    Effort,
    EqualityVerdict,
    GapReport,
    Verdict,
    certify,
    complement_identity_residual,
    merkle_bound,
    pair_inequality_gap,
    remainder_enclosure,
    sweep,
    upper_bound_enclosure,
)
from .legendre import (
    LegendrePair,
    Potential,
    PowerFamily,
    conjugate_value,
    holder_gap,
    legendre_gap_report,
    potential_from_derivative,
)
from .oracle import (
    ClosedFormCase,
    fine_riemann_reference,
    power_merkle,
    power_remainder,
    power_upper_bound,
)
from .cli import FunctionSpec, parse_spec

__version__ = "0.1.0"

__all__ = [
    "Enclosure",
    "YoungGapError",
    "ValidationError",
    "DomainError",
    "ConvergenceError",
    "ConsistencyError",
    "UnsupportedOrigin",
    "ParseError",
    "BudgetExceeded",
    "Interval",
    "MonotoneFn",
    "MonotoneAudit",
    "ConjugatePair",
    "power_fn",
    "affine_fn",
    "exp_fn",
    "log_fn",
    "table_fn",
    "verify_monotone",
    "QuadratureConfig",
    "QuadratureResult",
    "DEFAULT_CONFIG",
    "riemann_enclosure",
    "refine_to_width",
    "exact_integral_enclosure",
    "integral_enclosure",
    "inverse_riemann_enclosure",
    "refine_inverse_to_width",
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
    "Potential",
    "LegendrePair",
    "PowerFamily",
    "potential_from_derivative",
    "conjugate_value",
    "legendre_gap_report",
    "holder_gap",
    "ClosedFormCase",
    "power_remainder",
    "power_upper_bound",
    "power_merkle",
    "fine_riemann_reference",
    "FunctionSpec",
    "parse_spec",
]

"""Continuous strictly increasing functions on closed intervals.

A :class:`MonotoneFn` is one of four closed-form families (power, affine,
exponential shift, logarithmic shift) or a sampled table interpolated
piecewise-linearly.  Strict increase is enforced at construction: the
inverse used throughout the library is otherwise undefined.  Every function
knows its exact inverse family and its exact antiderivative, which the
quadrature layer uses as a fast path; the generic path never relies on
either.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels
from .enclosure import Enclosure
from .errors import ConvergenceError, DomainError, ValidationError

__all__ = [
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
]

_KIND_CODES = {
    "power": _kernels.POWER,
    "affine": _kernels.AFFINE,
    "exp": _kernels.EXP,
    "log": _kernels.LOG,
    "table": _kernels.TABLE,
}


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] with lo < hi (degenerate intervals rejected)."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValidationError(f"interval endpoints must be finite, got [{self.lo}, {self.hi}]")
        if not self.lo < self.hi:
            raise ValidationError(f"interval must satisfy lo < hi, got [{self.lo}, {self.hi}]")

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_range(self, lo: float, hi: float) -> bool:
        return self.lo <= lo and hi <= self.hi

    def span(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True, eq=False)
class MonotoneFn:
    """A strictly increasing function, evaluable pointwise on its domain.

    Instances are immutable after construction and safe to share between
    threads.  Use the module factories (:func:`power_fn` and friends) rather
    than the raw constructor; they validate the strict-increase constraints.
    """

    kind: str
    domain: Interval
    codomain: Interval
    a0: float = 0.0
    a1: float = 0.0
    xs: np.ndarray = field(default=_kernels.EMPTY, repr=False)
    ys: np.ndarray = field(default=_kernels.EMPTY, repr=False)
    cum: np.ndarray = field(default=_kernels.EMPTY, repr=False)

    @property
    def code(self) -> int:
        return _KIND_CODES[self.kind]

    def kernel_args(self):
        """(code, a0, a1, xs, ys) tuple in kernel calling convention order."""
        return self.code, self.a0, self.a1, self.xs, self.ys

    def eval(self, x: float) -> float:
        """Value at x; raises DomainError outside the domain."""
        if not self.domain.contains(x):
            raise DomainError(f"x={x!r} outside domain [{self.domain.lo}, {self.domain.hi}]")
        return self._eval_unchecked(x)

    __call__ = eval

    def _eval_unchecked(self, x: float) -> float:
        kind = self.kind
        if kind == "power":
            return self.a0 * x**self.a1
        if kind == "affine":
            return self.a0 * x + self.a1
        if kind == "exp":
            return math.exp(x) - self.a0
        if kind == "log":
            return math.log(x + self.a0)
        return float(np.interp(x, self.xs, self.ys))

    def eval_many(self, x) -> np.ndarray:
        """Vectorized evaluation on an array of in-domain points."""
        x = np.asarray(x, dtype=np.float64)
        if x.size and (x.min() < self.domain.lo or x.max() > self.domain.hi):
            raise DomainError("evaluation grid leaves the function domain")
        return _kernels.eval_array(*self.kernel_args(), x)

    def inverse(self) -> "MonotoneFn":
        """The exact inverse, as a function of the same family catalogue.

        power <-> power, affine <-> affine, exp <-> log, table <-> table
        with swapped columns.  Coefficients are rounded once; downstream
        enclosures budget for that rounding.
        """
        kind = self.kind
        c = self.codomain
        if kind == "power":
            return power_fn(1.0 / self.a1, (c.lo, c.hi), coefficient=self.a0 ** (-1.0 / self.a1))
        if kind == "affine":
            return affine_fn(1.0 / self.a0, (c.lo, c.hi), intercept=-self.a1 / self.a0)
        if kind == "exp":
            return log_fn(self.a0, (c.lo, c.hi))
        if kind == "log":
            return exp_fn(self.a0, (c.lo, c.hi))
        return table_fn(np.column_stack([self.ys, self.xs]))

    def antiderivative(self, x: float) -> float:
        """Exact antiderivative A with A' = f, evaluated at an in-domain x.

        For tables, A(x) is the cumulative trapezoid area from the first
        sample plus the partial-panel quadratic term.
        """
        if not self.domain.contains(x):
            raise DomainError(f"x={x!r} outside domain [{self.domain.lo}, {self.domain.hi}]")
        kind = self.kind
        if kind == "power":
            q = self.a1 + 1.0
            return self.a0 * x**q / q
        if kind == "affine":
            return 0.5 * self.a0 * x * x + self.a1 * x
        if kind == "exp":
            return math.exp(x) - self.a0 * x
        if kind == "log":
            t = x + self.a0
            return t * (math.log(t) - 1.0)
        j = int(np.searchsorted(self.xs, x, side="right")) - 1
        j = min(max(j, 0), len(self.xs) - 2)
        dx = x - self.xs[j]
        slope = (self.ys[j + 1] - self.ys[j]) / (self.xs[j + 1] - self.xs[j])
        return float(self.cum[j] + self.ys[j] * dx + 0.5 * slope * dx * dx)

    def max_slope(self) -> float:
        """Upper bound on f' over the domain (inf when unbounded)."""
        kind = self.kind
        lo, hi = self.domain.lo, self.domain.hi
        if kind == "power":
            c, p = self.a0, self.a1
            if p == 1.0:
                return c
            if p > 1.0:
                return c * p * hi ** (p - 1.0)
            return math.inf if lo == 0.0 else c * p * lo ** (p - 1.0)
        if kind == "affine":
            return self.a0
        if kind == "exp":
            return math.exp(hi)
        if kind == "log":
            return 1.0 / (lo + self.a0)
        return float(np.max(np.diff(self.ys) / np.diff(self.xs)))

    def min_slope(self) -> float:
        """Lower bound on f' over the domain."""
        kind = self.kind
        lo, hi = self.domain.lo, self.domain.hi
        if kind == "power":
            c, p = self.a0, self.a1
            if p == 1.0:
                return c
            if p > 1.0:
                return 0.0 if lo == 0.0 else c * p * lo ** (p - 1.0)
            return c * p * hi ** (p - 1.0)
        if kind == "affine":
            return self.a0
        if kind == "exp":
            return math.exp(lo)
        if kind == "log":
            return 1.0 / (hi + self.a0)
        return float(np.min(np.diff(self.ys) / np.diff(self.xs)))


def _finish(kind, domain, a0=0.0, a1=0.0, xs=_kernels.EMPTY, ys=_kernels.EMPTY, cum=_kernels.EMPTY):
    # Codomain anchored to the endpoint values, exactly, by construction.
    probe = MonotoneFn(kind, domain, Interval(0.0, 1.0), a0, a1, xs, ys, cum)
    lo_val = probe._eval_unchecked(domain.lo)
    hi_val = probe._eval_unchecked(domain.hi)
    if not lo_val < hi_val:
        raise ValidationError(f"{kind} function is not strictly increasing on its domain")
    return MonotoneFn(kind, domain, Interval(lo_val, hi_val), a0, a1, xs, ys, cum)


def _as_interval(domain) -> Interval:
    if isinstance(domain, Interval):
        return domain
    lo, hi = domain
    return Interval(float(lo), float(hi))


def power_fn(exponent: float, domain, coefficient: float = 1.0) -> MonotoneFn:
    """f(x) = coefficient * x**exponent with exponent > 0, coefficient > 0,
    domain contained in [0, inf)."""
    dom = _as_interval(domain)
    if exponent <= 0:
        raise ValidationError(f"power exponent must be > 0, got {exponent}")
    if coefficient <= 0:
        raise ValidationError(f"power coefficient must be > 0, got {coefficient}")
    if dom.lo < 0:
        raise ValidationError(f"power domain must lie in [0, inf), got lo={dom.lo}")
    return _finish("power", dom, float(coefficient), float(exponent))


def affine_fn(slope: float, domain, intercept: float = 0.0) -> MonotoneFn:
    """f(x) = slope * x + intercept with slope > 0."""
    dom = _as_interval(domain)
    if slope <= 0:
        raise ValidationError(f"affine slope must be > 0, got {slope}")
    return _finish("affine", dom, float(slope), float(intercept))


def exp_fn(shift: float, domain) -> MonotoneFn:
    """f(x) = exp(x) - shift."""
    return _finish("exp", _as_interval(domain), float(shift))


def log_fn(shift: float, domain) -> MonotoneFn:
    """f(x) = log(x + shift), requiring domain.lo + shift > 0."""
    dom = _as_interval(domain)
    if dom.lo + shift <= 0:
        raise ValidationError(f"log requires domain.lo + shift > 0, got {dom.lo + shift}")
    return _finish("log", dom, float(shift))


def table_fn(points) -> MonotoneFn:
    """Piecewise-linear interpolant of strictly increasing (x, y) samples.

    The domain is [x_first, x_last].  Piecewise-linear interpolation
    preserves strict monotonicity exactly and keeps panel integrals exact.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 2:
        raise ValidationError("table needs at least two (x, y) sample pairs")
    xs = np.ascontiguousarray(pts[:, 0])
    ys = np.ascontiguousarray(pts[:, 1])
    if not np.all(np.isfinite(xs)) or not np.all(np.isfinite(ys)):
        raise ValidationError("table samples must be finite")
    bad = np.nonzero(np.diff(xs) <= 0)[0]
    if bad.size:
        raise ValidationError(f"table x values not strictly increasing at index {bad[0] + 1}")
    bad = np.nonzero(np.diff(ys) <= 0)[0]
    if bad.size:
        raise ValidationError(f"table y values not strictly increasing at index {bad[0] + 1}")
    # compensated prefix areas: each entry stays within ulps of the true
    # prefix regardless of table length
    areas = 0.5 * (ys[1:] + ys[:-1]) * np.diff(xs)
    cum = np.empty(len(xs))
    cum[0] = 0.0
    acc = 0.0
    comp = 0.0
    for i, v in enumerate(areas):
        t = acc + v
        if abs(acc) >= abs(v):
            comp += (acc - t) + v
        else:
            comp += (v - t) + acc
        acc = t
        cum[i + 1] = acc + comp
    for arr in (xs, ys, cum):
        arr.setflags(write=False)
    return _finish("table", Interval(float(xs[0]), float(xs[-1])), xs=xs, ys=ys, cum=cum)


@dataclass(frozen=True, slots=True)
class MonotoneAudit:
    """Result of a finite-difference monotonicity audit."""

    passed: bool
    min_slope: float
    at_x: float
    n_probe: int
    threshold: float


def verify_monotone(f: MonotoneFn, n_probe: int, min_slope: float) -> MonotoneAudit:
    """Probe f on n_probe+1 uniform points and check every difference
    quotient against min_slope.  Failure is reported, not raised."""
    if n_probe < 2:
        raise ValidationError(f"n_probe must be >= 2, got {n_probe}")
    grid = np.linspace(f.domain.lo, f.domain.hi, n_probe + 1)
    vals = f.eval_many(grid)
    quotients = np.diff(vals) / np.diff(grid)
    worst = int(np.argmin(quotients))
    observed = float(quotients[worst])
    return MonotoneAudit(
        passed=bool(observed >= min_slope),
        min_slope=observed,
        at_x=float(grid[worst]),
        n_probe=n_probe,
        threshold=min_slope,
    )


@dataclass(frozen=True, eq=False)
class ConjugatePair:
    """An increasing function together with its numerically realized inverse.

    ``invert`` brackets the preimage by bisection regardless of whether a
    closed-form inverse exists, so the returned enclosure is honest for any
    constructible function.  ``inverse_fn`` is the exact inverse family,
    used by the quadrature fast path.
    """

    phi: MonotoneFn
    inverse_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if self.inverse_tol <= 0:
            raise ValidationError(f"inverse_tol must be > 0, got {self.inverse_tol}")
        if self.max_iter < 1:
            raise ValidationError(f"max_iter must be >= 1, got {self.max_iter}")

    @cached_property
    def inverse_fn(self) -> MonotoneFn:
        return self.phi.inverse()

    @property
    def alpha(self) -> Interval:
        return self.phi.domain

    @property
    def beta(self) -> Interval:
        return self.phi.codomain

    def invert(self, y: float, trace: list | None = None) -> Enclosure:
        """Enclosure [x_lo, x_hi] of the preimage of y, of width at most
        inverse_tol, with phi(x_lo) <= y <= phi(x_hi).

        Successive brackets are nested; pass a list as ``trace`` to record
        them.  Raises DomainError for y outside the codomain and
        ConvergenceError if the budget runs out (a broken function object).
        """
        cod = self.phi.codomain
        if not cod.contains(y):
            raise DomainError(f"y={y!r} outside codomain [{cod.lo}, {cod.hi}]")
        a, b = self.phi.domain.lo, self.phi.domain.hi
        if trace is not None:
            trace.append((a, b))
        it = 0
        while b - a > self.inverse_tol:
            if it >= self.max_iter:
                raise ConvergenceError(
                    f"bisection stuck at width {b - a!r} after {self.max_iter} iterations"
                )
            m = 0.5 * (a + b)
            if not a < m < b:
                break
            if self.phi._eval_unchecked(m) < y:
                a = m
            else:
                b = m
            if trace is not None:
                trace.append((a, b))
            it += 1
        return Enclosure(a, b)

    def psi_mid(self, y: float) -> float:
        """Midpoint of the bisection enclosure of the preimage of y."""
        return self.invert(y).mid()

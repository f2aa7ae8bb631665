import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from younggap import (
    ConjugatePair,
    ConvergenceError,
    DomainError,
    Interval,
    ValidationError,
    affine_fn,
    exp_fn,
    log_fn,
    power_fn,
    table_fn,
    verify_monotone,
)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def test_interval_rejects_degenerate():
    with pytest.raises(ValidationError):
        Interval(1.0, 1.0)
    with pytest.raises(ValidationError):
        Interval(2.0, 1.0)
    with pytest.raises(ValidationError):
        Interval(0.0, math.inf)


@pytest.mark.parametrize(
    "build",
    [
        lambda: power_fn(0.0, (0, 2)),
        lambda: power_fn(2.0, (0, 2), coefficient=-1.0),
        lambda: power_fn(2.0, (-1, 2)),
        lambda: affine_fn(0.0, (0, 2)),
        lambda: affine_fn(-1.0, (0, 2)),
        lambda: log_fn(0.0, (0, 2)),
        lambda: table_fn([(0, 0), (1, 1), (2, 1)]),
        lambda: table_fn([(0, 0), (0, 1), (2, 2)]),
        lambda: table_fn([(0, 0)]),
    ],
)
def test_invalid_constructions_rejected(build):
    with pytest.raises(ValidationError):
        build()


def test_table_rejection_names_offending_index():
    with pytest.raises(ValidationError, match="index 2"):
        table_fn([(0, 0), (1, 1), (2, 1)])


def test_endpoint_anchoring_is_exact():
    for fn in (
        power_fn(2, (0, 2)),
        power_fn(0.5, (0.25, 2), coefficient=3.0),
        affine_fn(1.5, (-1, 1), intercept=0.3),
        exp_fn(1.0, (0, 2)),
        log_fn(2.0, (-1, 1)),
        table_fn([(0, 0), (1, 1), (2, 4)]),
    ):
        assert fn.eval(fn.domain.lo) == fn.codomain.lo
        assert fn.eval(fn.domain.hi) == fn.codomain.hi


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def test_eval_identity_and_endpoints():
    ident = power_fn(1, (0, 2))
    assert ident.eval(1.0) == 1.0
    square = power_fn(2, (0, 2))
    assert square.eval(0.0) == 0.0
    assert square.eval(2.0) == 4.0


def test_eval_table_linear_interpolation():
    fn = table_fn([(0, 0), (1, 1), (2, 4)])
    # hand interpolation between (1, 1) and (2, 4): 1 + 0.5 * 3
    assert fn.eval(1.5) == pytest.approx(2.5, abs=1e-15)


def test_eval_outside_domain_raises():
    fn = power_fn(2, (0, 2))
    with pytest.raises(DomainError):
        fn.eval(2.5)
    with pytest.raises(DomainError):
        fn.eval(-0.1)
    with pytest.raises(DomainError):
        fn.eval_many([0.5, 3.0])


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------


def test_invert_square_root_of_two():
    pair = ConjugatePair(power_fn(2, (0, 2)))
    enc = pair.invert(2.0)
    assert enc.width() <= 1e-12
    assert enc.contains(math.sqrt(2.0))
    assert pair.phi.eval(enc.lo) <= 2.0 <= pair.phi.eval(enc.hi)


def test_invert_trivial_cases():
    pair = ConjugatePair(power_fn(2, (0, 2)))
    assert pair.invert(1.0).contains(1.0)
    ident = ConjugatePair(power_fn(1, (0, 2)))
    assert ident.invert(0.0).contains(0.0)


def test_invert_domain_error():
    pair = ConjugatePair(power_fn(2, (0, 2)))
    with pytest.raises(DomainError):
        pair.invert(4.5)


def test_invert_brackets_are_nested():
    pair = ConjugatePair(power_fn(2, (0, 2)))
    trace = []
    pair.invert(2.0, trace=trace)
    for (lo1, hi1), (lo2, hi2) in zip(trace, trace[1:]):
        assert lo1 <= lo2 <= hi2 <= hi1


def test_invert_budget_exhaustion_signals_broken_function():
    pair = ConjugatePair(power_fn(2, (0, 2)), max_iter=5)
    with pytest.raises(ConvergenceError):
        pair.invert(2.0)


def test_inverse_families_round_trip():
    for fn in (
        power_fn(2, (0, 2)),
        power_fn(0.5, (0.25, 2), coefficient=3.0),
        affine_fn(1.5, (-1, 1), intercept=0.3),
        exp_fn(1.0, (0, 2)),
        log_fn(2.0, (-1, 1)),
        table_fn([(0, 0), (1, 1), (2, 4)]),
    ):
        inv = fn.inverse()
        assert inv.domain.lo == fn.codomain.lo and inv.domain.hi == fn.codomain.hi
        for t in np.linspace(fn.domain.lo, fn.domain.hi, 7):
            assert inv.eval(fn.eval(float(t))) == pytest.approx(float(t), abs=1e-12)


# ---------------------------------------------------------------------------
# monotonicity audit
# ---------------------------------------------------------------------------


def test_audit_square_passes_with_min_at_leftmost_panel():
    audit = verify_monotone(power_fn(2, (0, 2)), 100, 0.0)
    assert audit.passed
    assert audit.at_x == 0.0


def test_audit_identity_reports_unit_slope():
    audit = verify_monotone(power_fn(1, (0, 2)), 10, 0.0)
    assert audit.passed
    assert audit.min_slope == pytest.approx(1.0, abs=1e-12)


def test_audit_flags_nearly_flat_table():
    fn = table_fn([(0, 0), (1, 1), (2, 1.000001)])
    audit = verify_monotone(fn, 100, 1e-3)
    assert not audit.passed
    assert audit.min_slope == pytest.approx(1e-6, rel=1e-6)
    assert audit.at_x >= 1.0


def test_audit_requires_two_probes():
    with pytest.raises(ValidationError):
        verify_monotone(power_fn(1, (0, 2)), 1, 0.0)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


@st.composite
def bounded_slope_fns(draw):
    kind = draw(st.sampled_from(["power", "affine", "exp", "log", "table"]))
    if kind == "power":
        p = draw(st.floats(0.5, 3.0))
        lo = draw(st.floats(0.05, 0.5))
        return power_fn(p, (lo, lo + draw(st.floats(0.5, 2.0))),
                        coefficient=draw(st.floats(0.5, 2.0)))
    if kind == "affine":
        lo = draw(st.floats(-1.0, 0.5))
        return affine_fn(draw(st.floats(0.2, 3.0)), (lo, lo + draw(st.floats(0.5, 2.0))),
                         intercept=draw(st.floats(-1.0, 1.0)))
    if kind == "exp":
        lo = draw(st.floats(-1.0, 0.5))
        return exp_fn(draw(st.floats(-1.0, 1.0)), (lo, lo + draw(st.floats(0.5, 2.0))))
    if kind == "log":
        lo = draw(st.floats(-0.5, 0.5))
        shift = draw(st.floats(0.6, 3.0))
        return log_fn(shift, (lo, lo + draw(st.floats(0.5, 2.0))))
    gaps_x = draw(st.lists(st.floats(0.1, 0.6), min_size=3, max_size=7))
    gaps_y = draw(st.lists(st.floats(0.1, 0.6), min_size=len(gaps_x), max_size=len(gaps_x)))
    xs = np.concatenate([[0.0], np.cumsum(gaps_x)])
    ys = np.concatenate([[0.0], np.cumsum(gaps_y)])
    return table_fn(np.column_stack([xs, ys]))


@settings(max_examples=60, deadline=None)
@given(fn=bounded_slope_fns(), t=st.floats(0.0, 1.0))
def test_inversion_round_trip_within_lipschitz_bound(fn, t):
    pair = ConjugatePair(fn)
    y = fn.codomain.lo + t * (fn.codomain.hi - fn.codomain.lo)
    y = min(max(y, fn.codomain.lo), fn.codomain.hi)
    mid = pair.invert(y).mid()
    assert abs(fn.eval(mid) - y) <= fn.max_slope() * 1e-12 + 1e-12


@settings(max_examples=60, deadline=None)
@given(fn=bounded_slope_fns(), t1=st.floats(0.0, 1.0), t2=st.floats(0.0, 1.0))
def test_order_preservation(fn, t1, t2):
    span = fn.domain.hi - fn.domain.lo
    x1, x2 = sorted((fn.domain.lo + t1 * span, fn.domain.lo + t2 * span))
    if x2 - x1 < 1e-6 * span:
        return
    assert fn.eval(x1) < fn.eval(x2)

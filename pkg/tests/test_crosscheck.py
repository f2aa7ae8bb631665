"""Cross-validation against scipy's adaptive quadrature.

Fully independent of the library's quadrature and inversion machinery:
the inverse integrands below are written out by hand.
"""
import math

import pytest
from scipy.integrate import quad

from younggap import (
    ConjugatePair,
    exp_fn,
    log_fn,
    power_fn,
    remainder_enclosure,
    table_fn,
)


def _scipy_remainder(pair, phi, psi, a, b):
    alpha1 = pair.alpha.lo
    beta1 = pair.beta.lo
    phi_part, phi_err = quad(phi, alpha1, a)
    psi_part, psi_err = quad(psi, beta1, b)
    value = phi_part + psi_part - a * b + alpha1 * beta1
    return value, phi_err + psi_err


CASES = [
    (
        exp_fn(1.0, (0, 2)),
        lambda x: math.exp(x) - 1.0,
        lambda y: math.log(y + 1.0),
        [(0.3, 2.1), (1.7, 0.2), (2.0, math.exp(2.0) - 1.0)],
    ),
    (
        log_fn(2.0, (-1, 1)),
        lambda x: math.log(x + 2.0),
        lambda y: math.exp(y) - 2.0,
        [(-0.4, 0.7), (0.9, 0.1), (0.0, math.log(2.0))],
    ),
    (
        power_fn(1.5, (0, 2), coefficient=0.7),
        lambda x: 0.7 * x**1.5,
        lambda y: (y / 0.7) ** (2.0 / 3.0),
        [(0.5, 1.5), (2.0, 0.0), (1.0, 0.7)],
    ),
]


@pytest.mark.parametrize("fn,phi,psi,points", CASES)
def test_remainder_contains_scipy_value(fn, phi, psi, points):
    pair = ConjugatePair(fn)
    for a, b in points:
        enc = remainder_enclosure(pair, a, b)
        value, err = _scipy_remainder(pair, phi, psi, a, b)
        assert enc.pad(err + 1e-11).contains(value)


def test_table_remainder_contains_scipy_value():
    fn = table_fn([(0, 0), (0.6, 0.4), (1.3, 1.2), (2, 4)])
    pair = ConjugatePair(fn)

    def phi(x):
        return fn.eval(x)

    def psi(y):
        return pair.invert(y).mid()

    for a, b in ((0.9, 2.5), (1.8, 0.3)):
        enc = remainder_enclosure(pair, a, b)
        value, err = _scipy_remainder(pair, phi, psi, a, b)
        # psi sampling noise is bounded by the bisection tolerance
        assert enc.pad(err + 1e-8).contains(value)

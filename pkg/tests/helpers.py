"""Randomized instance generators shared by the gap and acceptance tests."""
import numpy as np

from younggap import ConjugatePair, affine_fn, exp_fn, power_fn, table_fn


def random_fn(rng):
    """A random built-in family member or a strictly increasing 8-point table."""
    kind = int(rng.integers(0, 4))
    if kind == 0:
        lo = float(rng.uniform(0.0, 0.3))
        return power_fn(
            float(rng.uniform(0.5, 3.0)),
            (lo, lo + float(rng.uniform(0.6, 2.2))),
            coefficient=float(rng.uniform(0.3, 3.0)),
        )
    if kind == 1:
        lo = float(rng.uniform(-1.5, 0.5))
        return affine_fn(
            float(rng.uniform(0.2, 3.0)),
            (lo, lo + float(rng.uniform(0.8, 2.0))),
            intercept=float(rng.uniform(-1.0, 1.0)),
        )
    if kind == 2:
        lo = float(rng.uniform(-1.0, 0.5))
        return exp_fn(float(rng.uniform(-1.0, 1.0)), (lo, lo + float(rng.uniform(0.8, 2.0))))
    xs = np.concatenate([[0.0], np.cumsum(rng.uniform(0.1, 0.5, size=7))])
    xs = xs + rng.uniform(-0.5, 0.5)
    ys = np.concatenate([[0.0], np.cumsum(rng.uniform(0.1, 0.5, size=7))])
    ys = ys + rng.uniform(-0.5, 0.5)
    return table_fn(np.column_stack([xs, ys]))


def random_point(rng, fn):
    a = float(rng.uniform(fn.domain.lo, fn.domain.hi))
    b = float(rng.uniform(fn.codomain.lo, fn.codomain.hi))
    return a, b


def random_instance(rng):
    fn = random_fn(rng)
    a, b = random_point(rng, fn)
    return ConjugatePair(fn), a, b


def min_slope_between(fn, x1, x2, probes=33):
    grid = np.linspace(min(x1, x2), max(x1, x2), probes)
    vals = fn.eval_many(grid)
    return float(np.min(np.diff(vals) / np.diff(grid)))


def strict_instance(rng, separation=0.1, slope_floor=0.1):
    """Instance with |phi(a) - b| >= separation and slope >= slope_floor on
    the stretch between a and psi(b), found by rejection sampling."""
    while True:
        fn = random_fn(rng)
        pair = ConjugatePair(fn)
        a = float(rng.uniform(fn.domain.lo, fn.domain.hi))
        phi_a = fn.eval(a)
        cod = fn.codomain
        sides = []
        if phi_a - separation >= cod.lo:
            sides.append((cod.lo, phi_a - separation))
        if phi_a + separation <= cod.hi:
            sides.append((phi_a + separation, cod.hi))
        if not sides:
            continue
        lo, hi = sides[int(rng.integers(0, len(sides)))]
        b = float(rng.uniform(lo, hi))
        x2 = pair.invert(b).mid()
        if abs(x2 - a) < 1e-9:
            continue
        if min_slope_between(fn, a, x2) < slope_floor:
            continue
        return pair, a, b

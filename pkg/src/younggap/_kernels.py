"""Hot numeric kernels: numba-compiled loops with a pure-numpy fallback.

The panel sums behind every quadrature enclosure and the per-node bisection
behind inverse-function quadrature dominate runtime, so they live here as
scalar loops compiled with ``numba.njit``.  Setting the environment variable
``YOUNGGAP_PURE_NUMPY=1`` (or running without numba installed) selects a
vectorized numpy implementation of the same operations instead.  The active
backend is fixed at import time and recorded in ``BACKEND``.

Both backends accumulate panel sums in compensated style (Neumaier for the
compiled loops, exact ``math.fsum`` for numpy), keeping the documented
rounding slack of at most a few ulps per returned sum.

Kernel calling convention: a function body is identified by an integer kind
code plus two scalar parameters and two float64 arrays (empty except for
sampled tables):

=====  ========  ===========================  =========================
code   kind      scalars (a0, a1)             arrays (xs, ys)
=====  ========  ===========================  =========================
0      power     coefficient, exponent        unused
1      affine    slope, intercept             unused
2      exp       shift k in e**x - k          unused
3      log       shift k in log(x + k)        unused
4      table     unused                       sample abscissas/ordinates
=====  ========  ===========================  =========================
"""
from __future__ import annotations

import math
import os

import numpy as np

PURE_NUMPY_ENV = "YOUNGGAP_PURE_NUMPY"

POWER, AFFINE, EXP, LOG, TABLE = 0, 1, 2, 3, 4

EMPTY = np.empty(0, dtype=np.float64)
EMPTY.setflags(write=False)


def _pure_numpy_requested() -> bool:
    return os.environ.get(PURE_NUMPY_ENV, "").strip().lower() in ("1", "true", "yes", "on")


# ---------------------------------------------------------------------------
# scalar loop bodies (compiled as-is under numba; plain python otherwise)
# ---------------------------------------------------------------------------


def _eval_one(kind, a0, a1, xs, ys, x):
    if kind == 0:
        return a0 * x ** a1
    if kind == 1:
        return a0 * x + a1
    if kind == 2:
        return math.exp(x) - a0
    if kind == 3:
        return math.log(x + a0)
    n = xs.shape[0]
    if x <= xs[0]:
        return ys[0]
    if x >= xs[n - 1]:
        return ys[n - 1]
    j = np.searchsorted(xs, x, side="right") - 1
    if j > n - 2:
        j = n - 2
    slope = (ys[j + 1] - ys[j]) / (xs[j + 1] - xs[j])
    return ys[j] + slope * (x - xs[j])


def _node_sum(kind, a0, a1, xs, ys, lo, hi, n):
    # Compensated sum of f over the n+1 uniform nodes of [lo, hi]; the last
    # node is pinned to hi so the endpoint values are exact.
    dx = (hi - lo) / n
    s = 0.0
    comp = 0.0
    f0 = 0.0
    fn = 0.0
    for i in range(n + 1):
        x = lo + dx * i if i < n else hi
        v = _eval_one(kind, a0, a1, xs, ys, x)
        if i == 0:
            f0 = v
        if i == n:
            fn = v
        t = s + v
        if abs(s) >= abs(v):
            comp += (s - t) + v
        else:
            comp += (v - t) + s
        s = t
    return s + comp, f0, fn


def _midpoint_sum(kind, a0, a1, xs, ys, lo, hi, n):
    dx = (hi - lo) / n
    s = 0.0
    comp = 0.0
    for i in range(n):
        x = lo + dx * (i + 0.5)
        v = _eval_one(kind, a0, a1, xs, ys, x)
        t = s + v
        if abs(s) >= abs(v):
            comp += (s - t) + v
        else:
            comp += (v - t) + s
        s = t
    return s + comp


def _invert_node_sums(kind, a0, a1, xs, ys, dlo, dhi, ylo, yhi, n, tol, maxit):
    # Bisection bracket [a, b] for the preimage of each uniform node of
    # [ylo, yhi], plus compensated sums of both bracket ends.  The bracket
    # invariant f(a) <= y <= f(b) holds throughout because the function is
    # increasing and maps dlo/dhi to the codomain endpoints.
    dy = (yhi - ylo) / n
    s_lo = 0.0
    c_lo = 0.0
    s_hi = 0.0
    c_hi = 0.0
    xlo_first = 0.0
    xlo_last = 0.0
    xhi_first = 0.0
    xhi_last = 0.0
    for i in range(n + 1):
        y = ylo + dy * i if i < n else yhi
        a = dlo
        b = dhi
        it = 0
        while b - a > tol and it < maxit:
            m = 0.5 * (a + b)
            if m <= a or m >= b:
                break
            if _eval_one(kind, a0, a1, xs, ys, m) < y:
                a = m
            else:
                b = m
            it += 1
        if i == 0:
            xlo_first = a
            xhi_first = b
        if i == n:
            xlo_last = a
            xhi_last = b
        t = s_lo + a
        if abs(s_lo) >= abs(a):
            c_lo += (s_lo - t) + a
        else:
            c_lo += (a - t) + s_lo
        s_lo = t
        t = s_hi + b
        if abs(s_hi) >= abs(b):
            c_hi += (s_hi - t) + b
        else:
            c_hi += (b - t) + s_hi
        s_hi = t
    return s_lo + c_lo, s_hi + c_hi, xlo_first, xlo_last, xhi_first, xhi_last


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------


def eval_array(kind, a0, a1, xs, ys, x):
    """Vectorized function evaluation (always numpy, used by both backends
    for grid work outside the hot loops)."""
    x = np.asarray(x, dtype=np.float64)
    if kind == POWER:
        return a0 * np.power(x, a1)
    if kind == AFFINE:
        return a0 * x + a1
    if kind == EXP:
        return np.exp(x) - a0
    if kind == LOG:
        return np.log(x + a0)
    return np.interp(x, xs, ys)


def _nodes(lo, hi, n):
    out = lo + ((hi - lo) / n) * np.arange(n + 1)
    out[n] = hi
    return out


def _node_sum_np(kind, a0, a1, xs, ys, lo, hi, n):
    vals = eval_array(kind, a0, a1, xs, ys, _nodes(lo, hi, n))
    return math.fsum(vals), float(vals[0]), float(vals[n])


def _midpoint_sum_np(kind, a0, a1, xs, ys, lo, hi, n):
    dx = (hi - lo) / n
    mids = lo + dx * (np.arange(n) + 0.5)
    return math.fsum(eval_array(kind, a0, a1, xs, ys, mids))


def _invert_node_sums_np(kind, a0, a1, xs, ys, dlo, dhi, ylo, yhi, n, tol, maxit):
    y = _nodes(ylo, yhi, n)
    lo = np.full(n + 1, float(dlo))
    hi = np.full(n + 1, float(dhi))
    for _ in range(maxit):
        open_mask = (hi - lo) > tol
        if not open_mask.any():
            break
        mid = 0.5 * (lo + hi)
        below = eval_array(kind, a0, a1, xs, ys, mid) < y
        lo = np.where(open_mask & below, mid, lo)
        hi = np.where(open_mask & ~below, mid, hi)
    return (
        math.fsum(lo),
        math.fsum(hi),
        float(lo[0]),
        float(lo[n]),
        float(hi[0]),
        float(hi[n]),
    )


IMPLEMENTATIONS = {
    "numpy": {
        "node_sum": _node_sum_np,
        "midpoint_sum": _midpoint_sum_np,
        "invert_node_sums": _invert_node_sums_np,
    }
}

# ---------------------------------------------------------------------------
# numba backend and selection
# ---------------------------------------------------------------------------

BACKEND = "numpy"

if not _pure_numpy_requested():
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        _njit = None
    if _njit is not None:
        # Rebinding the module global makes the loops below resolve the
        # compiled scalar body when numba compiles them on first call.
        _eval_one = _njit(cache=True)(_eval_one)
        IMPLEMENTATIONS["numba"] = {
            "node_sum": _njit(cache=True)(_node_sum),
            "midpoint_sum": _njit(cache=True)(_midpoint_sum),
            "invert_node_sums": _njit(cache=True)(_invert_node_sums),
        }
        BACKEND = "numba"

_active = IMPLEMENTATIONS[BACKEND]
node_sum = _active["node_sum"]
midpoint_sum = _active["midpoint_sum"]
invert_node_sums = _active["invert_node_sums"]


def warmup() -> None:
    """Trigger JIT compilation of every kernel (no-op on the numpy backend)."""
    xs = np.array([0.0, 1.0])
    ys = np.array([0.0, 1.0])
    node_sum(TABLE, 0.0, 0.0, xs, ys, 0.0, 1.0, 2)
    node_sum(POWER, 1.0, 2.0, EMPTY, EMPTY, 0.0, 1.0, 2)
    midpoint_sum(POWER, 1.0, 2.0, EMPTY, EMPTY, 0.0, 1.0, 2)
    invert_node_sums(POWER, 1.0, 2.0, EMPTY, EMPTY, 0.0, 1.0, 0.0, 1.0, 2, 1e-12, 200)

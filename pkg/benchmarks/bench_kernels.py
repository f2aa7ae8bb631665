#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Both implementations are always importable (the active one is selected by
the YOUNGGAP_PURE_NUMPY environment variable at package import), so this
script times every backend registered in younggap._kernels.IMPLEMENTATIONS
on the three hot operations and prints the speedups.

Usage:  python benchmarks/bench_kernels.py [--repeats N]
"""
import argparse
import time

import numpy as np

from younggap import _kernels as k

TABLE_XS = np.linspace(0.0, 2.0, 9)
TABLE_YS = np.cumsum(np.linspace(0.1, 0.9, 9))

CASES = [
    (
        "node_sum: power x^3, 2^20 panels",
        "node_sum",
        (k.POWER, 1.0, 3.0, k.EMPTY, k.EMPTY, 0.0, 2.0, 2**20),
    ),
    (
        "node_sum: 9-point table, 2^20 panels",
        "node_sum",
        (k.TABLE, 0.0, 0.0, TABLE_XS, TABLE_YS, 0.0, 2.0, 2**20),
    ),
    (
        "midpoint_sum: exp shift, 2^22 panels",
        "midpoint_sum",
        (k.EXP, 1.0, 0.0, k.EMPTY, k.EMPTY, 0.0, 2.0, 2**22),
    ),
    (
        "invert_node_sums: x^2 inverse, 4096 nodes",
        "invert_node_sums",
        (k.POWER, 1.0, 2.0, k.EMPTY, k.EMPTY, 0.0, 2.0, 0.0, 4.0, 4096, 1e-12, 200),
    ),
]


def best_of(fn, args, repeats):
    fn(*args)  # warmup (JIT compile on the numba backend)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    backends = sorted(k.IMPLEMENTATIONS)
    print(f"backends available: {', '.join(backends)} (active: {k.BACKEND})")
    print()
    header = f"{'case':<45}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, op, op_args in CASES:
        times = {b: best_of(k.IMPLEMENTATIONS[b][op], op_args, args.repeats) for b in backends}
        row = f"{label:<45}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if "numba" in times and "numpy" in times:
            row += f"{times['numpy'] / times['numba']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()

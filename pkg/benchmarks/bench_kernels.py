#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the pure-Python twins.

Times the two hot paths on identical inputs with both backends:
  * triangle construction (the three recurrences), and
  * the exact multiply-accumulate kernels (dot2/dot3) on workloads shaped
    like the verification grids (filtered Stirling sums with power weights).

Usage:
    python benchmarks/bench_kernels.py [--max-n 160] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

from congruence_lab import _pykernels

try:
    from congruence_lab import _speedups
except ImportError:
    _speedups = None


def best_of(repeat: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_triangles(impl, max_n: int, repeat: int) -> float:
    def run() -> None:
        impl.stirling1_rows(max_n)
        impl.stirling2_rows(max_n)
        impl.eulerian_rows(max_n)

    return best_of(repeat, run)


def bench_dots(impl, max_n: int, repeat: int) -> float:
    # Workload shaped like a Stirling product-sum sweep: for each n, one dot3
    # over every second entry of row n with power weights.
    s1 = _pykernels.stirling1_rows(max_n)
    s2 = _pykernels.stirling2_rows(max_n)

    def run() -> None:
        for n in range(1, max_n + 1):
            ks = range(0, n + 1, 2)
            xs = [s1[n][k] for k in ks]
            ys = [s2[k][min(k, 3)] for k in ks]
            ws = impl.power_steps(3, 0, 2, len(xs))
            impl.dot3(xs, ys, ws)
            impl.dot2(xs, ws)

    return best_of(repeat, run)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=160)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rows = []
    for name, bench in (("triangles", bench_triangles), ("dot kernels", bench_dots)):
        pure = bench(_pykernels, args.max_n, args.repeat)
        if _speedups is not None:
            fast = bench(_speedups, args.max_n, args.repeat)
            rows.append((name, pure, fast, pure / fast))
        else:
            rows.append((name, pure, None, None))

    print(f"max_n={args.max_n}, best of {args.repeat} runs")
    print(f"{'benchmark':<14} {'pure [ms]':>10} {'compiled [ms]':>14} {'speedup':>8}")
    for name, pure, fast, speedup in rows:
        if fast is None:
            print(f"{name:<14} {pure * 1e3:>10.2f} {'n/a':>14} {'n/a':>8}")
        else:
            print(f"{name:<14} {pure * 1e3:>10.2f} {fast * 1e3:>14.2f} {speedup:>7.2f}x")
    if _speedups is None:
        print("compiled kernels not built; only the pure backend was timed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

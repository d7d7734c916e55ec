#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot loops on realistic inputs (partition-style series
whose coefficients grow the way the catalog's series do) and prints a
table with the speedup per kernel and order.

    python benchmarks/bench_kernels.py [--orders 256,512,1024,2048] [--repeat 5]
"""

import argparse
import statistics
import time

from rrseries import _kernels_py

try:
    from rrseries import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def partition_style_coeffs(order):
    """Coefficients of 1/(q;q)_inf: realistic big-int growth."""
    dp = [1] + [0] * (order - 1)
    for part in range(1, order):
        for total in range(part, order):
            dp[total] += dp[total - part]
    return dp


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def bench_backend(backend, order, repeat):
    a = partition_style_coeffs(order)
    b = [(-1) ** n * c for n, c in enumerate(a)]
    results = {}
    results["mul"] = best_of(repeat, backend.mul_trunc, a, b, order)

    unit = list(b)
    unit[0] = 1
    results["invert"] = best_of(repeat, backend.invert_trunc, unit, order)

    def poch_product():
        c = [1] + [0] * (order - 1)
        for e in range(1, order):
            backend.binomial_update(c, e, -1, order)
        return c

    results["poch"] = best_of(repeat, poch_product)
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--orders", default="256,512,1024,2048")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    orders = [int(x) for x in args.orders.split(",")]

    if _kernels_c is None:
        print("compiled kernels not built; timing the pure backend only")

    header = f"{'kernel':<8} {'order':>6} {'python':>12} {'cython':>12} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for order in orders:
        py = bench_backend(_kernels_py, order, args.repeat)
        cy = bench_backend(_kernels_c, order, args.repeat) if _kernels_c else None
        for kernel in ("mul", "invert", "poch"):
            py_ms = py[kernel] * 1000
            if cy is None:
                print(f"{kernel:<8} {order:>6} {py_ms:>10.2f}ms {'-':>12} {'-':>8}")
            else:
                cy_ms = cy[kernel] * 1000
                print(f"{kernel:<8} {order:>6} {py_ms:>10.2f}ms {cy_ms:>10.2f}ms "
                      f"{py[kernel] / cy[kernel]:>7.1f}x")


if __name__ == "__main__":
    main()

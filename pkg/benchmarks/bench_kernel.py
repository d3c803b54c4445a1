#!/usr/bin/env python3
"""Benchmark the compiled rational kernel against the pure-Python fallback.

Both backends run the same two exact-arithmetic workloads that dominate the
audit engine:

* norm-scan  -- quadratic-form norms of Fibonacci quaternions over a grid of
                rational algebra parameters (the invertibility scan kernel);
* quat-mul   -- chains of full quaternion products (the fuzz-test kernel).

Usage: python benchmarks/bench_kernel.py [--scale N]
"""

import argparse
import random
import time

from fibquat._kernel import _pyrational

try:
    from fibquat._kernel import _crational
except ImportError:
    _crational = None

_FIB = [0, 1]
while len(_FIB) < 160:
    _FIB.append(_FIB[-1] + _FIB[-2])


def norm_scan(R, scale):
    half = R(1, 2)
    total = 0
    for _ in range(scale):
        for i in range(-20, 21):
            for j in range(-20, 21):
                b1 = i * half
                b2 = j * half
                b12 = b1 * b2
                for n in range(0, 51):
                    f0, f1, f2, f3 = _FIB[n : n + 4]
                    value = (
                        R(f0 * f0)
                        + b1 * (f1 * f1)
                        + b2 * (f2 * f2)
                        + b12 * (f3 * f3)
                    )
                    total += value.sign()
    return total


def quat_mul(R, scale):
    rng = random.Random(99)
    b1 = R(rng.randint(-8, 8), rng.randint(1, 4))
    b2 = R(rng.randint(-8, 8), rng.randint(1, 4))

    def mul(a, c):
        a1, a2, a3, a4 = a
        c1, c2, c3, c4 = c
        return (
            a1 * c1 - b1 * (a2 * c2) - b2 * (a3 * c3) - b1 * (b2 * (a4 * c4)),
            a1 * c2 + a2 * c1 + b2 * (a3 * c4 - a4 * c3),
            a1 * c3 + a3 * c1 + b1 * (a4 * c2 - a2 * c4),
            a1 * c4 + a4 * c1 + a2 * c3 - a3 * c2,
        )

    acc = (R(1), R(0), R(0), R(0))
    for _ in range(4000 * scale):
        other = tuple(R(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4))
        acc = mul(acc, other)
        # keep coefficients small so the workload measures dispatch, not bigints
        acc = tuple(x - x + o for x, o in zip(acc, other))
    return acc


def timed(fn, R, scale):
    start = time.perf_counter()
    fn(R, scale)
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=int, default=1, help="workload multiplier")
    args = parser.parse_args()

    backends = [("pure-python", _pyrational.Rational)]
    if _crational is not None:
        backends.append(("compiled", _crational.Rational))
    else:
        print("note: compiled kernel not built; benchmarking pure Python only")

    print(f"{'workload':<12} {'backend':<12} {'seconds':>9}")
    results = {}
    for workload in (norm_scan, quat_mul):
        for name, R in backends:
            took = timed(workload, R, args.scale)
            results[(workload.__name__, name)] = took
            print(f"{workload.__name__:<12} {name:<12} {took:9.3f}")
        if len(backends) == 2:
            slow = results[(workload.__name__, "pure-python")]
            fast = results[(workload.__name__, "compiled")]
            print(f"{'':<12} speedup: {slow / fast:.2f}x")


if __name__ == "__main__":
    main()

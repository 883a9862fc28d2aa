#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Runs the three hot paths (segmented sieve, pair counting, batch estimates)
on both backends and prints a timing table.

    python benchmarks/bench_backends.py [--limit 1000000]
"""

import argparse
import math
import time

import numpy as np

from gbcomet import primes
from gbcomet.backend import available_backends
from gbcomet.numerics import li


def time_once(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def bench_sieve(impl, limit: int) -> float:
    base = np.flatnonzero(primes._simple_sieve(math.isqrt(limit))).astype(np.int64)

    def run():
        seg_size = primes.SEGMENT_SIZE
        for lo in range(0, limit + 1, seg_size):
            seg = np.ones(min(seg_size, limit + 1 - lo), dtype=np.uint8)
            impl.mark_segment(seg, lo, base)

    return time_once(run)


def bench_gp(impl, table, evens: np.ndarray) -> float:
    ks = primes.primes_array(table, int(evens[-1]) // 2)
    flags = table.unpacked()
    return time_once(lambda: impl.gp_counts(flags, ks, evens))


def bench_estimates(impl, evens: np.ndarray) -> float:
    odd = primes.small_primes(math.isqrt(int(evens[-1])))
    odd = np.ascontiguousarray(odd[odd > 2])
    lnp = np.log(odd.astype(np.float64))
    lip = np.array([li(float(p)) for p in odd])
    return time_once(lambda: impl.pair_estimates(evens, odd, lnp, lip))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=10**6)
    ap.add_argument("--estimate-evens", type=int, default=50_000,
                    help="evens (taken from the top of the range) for the estimate benchmark")
    args = ap.parse_args()

    table = primes.build_sieve(args.limit)
    lo = max(4, args.limit - 2 * args.estimate_evens)
    if lo % 2:
        lo += 1
    evens = np.arange(lo, args.limit + 1, 2, dtype=np.int64)

    backends = available_backends()
    print(f"backends available: {', '.join(sorted(backends))}")
    print(f"{'kernel':<16}" + "".join(f"{name:>14}" for name in sorted(backends)))
    rows = [
        ("sieve", lambda impl: bench_sieve(impl, args.limit)),
        ("gp_counts", lambda impl: bench_gp(impl, table, evens)),
        ("estimates", lambda impl: bench_estimates(impl, evens)),
    ]
    for label, bench in rows:
        cells = []
        for name in sorted(backends):
            cells.append(f"{bench(backends[name]):>12.3f} s")
        print(f"{label:<16}" + "".join(cells))


if __name__ == "__main__":
    main()

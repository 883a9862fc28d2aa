"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's sieve/count code paths:
primality comes from brute modulo trial division over numpy arrays, and pair
counts from direct lookups against that table.
"""

from __future__ import annotations

import os
import time

import numpy as np
import pytest

from gbcomet import build_sieve, scan

MILLION = 10**6


def trial_division_flags(limit: int) -> np.ndarray:
    """Boolean primality over [0, limit] by brute modulo trial division."""
    x = np.arange(limit + 1, dtype=np.int64)
    composite = np.zeros(limit + 1, dtype=bool)
    d = 2
    while d * d <= limit:
        composite |= (x % d == 0) & (x >= d * d)
        d += 1
    flags = ~composite
    flags[:2] = False
    return flags


def oracle_gp_count(two_n: int, prime_flags: np.ndarray) -> int:
    """Pair count by direct double-membership lookup (k <= n)."""
    ks = np.flatnonzero(prime_flags[: two_n // 2 + 1])
    return int(prime_flags[two_n - ks].sum())


@pytest.fixture(scope="session")
def table_1m():
    return build_sieve(MILLION)


@pytest.fixture(scope="session")
def table_10k():
    return build_sieve(10**4)


@pytest.fixture(scope="session")
def records_10k(table_10k):
    return scan(4, 10**4, table_10k, None, 1)


@pytest.fixture(scope="session")
def scan_1m_timed(table_1m):
    """Full scan to 1e6 with default (machine) parallelism, plus its runtime."""
    workers = os.cpu_count() or 1
    t0 = time.monotonic()
    records = scan(4, MILLION, table_1m, None, workers)
    elapsed = time.monotonic() - t0
    return records, elapsed


@pytest.fixture(scope="session")
def records_1m(scan_1m_timed):
    return scan_1m_timed[0]

"""Exact Goldbach-pair counting, band classification, and the batch scan.

A pair of 2n is (k, 2n-k) with 1 <= k <= n; it is a Goldbach pair when both
members are prime, so (n, n) counts once.  Evens are classified into bands by
the subset of their sieving primes (p with p^2 <= 2n) that divide them; the
band is rendered as hyphen-joined primes ("2", "2-3", ...).

``scan`` produces one record per even over a range, with the estimator
fields populated.  It splits the range into fixed chunks of 2^14 evens and
may process chunks on several workers; output is identical for any worker
count because chunk boundaries and per-chunk arithmetic do not depend on it.
"""

from __future__ import annotations

import math
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import backend, estimator, primes
from .errors import OutOfRangeError
from .primes import PrimalityTable

BandSignature = tuple[int, ...]

#: Evens per scan chunk.
CHUNK_EVENS = 1 << 14


@dataclass(frozen=True, slots=True)
class GpRecord:
    """Per-even scan row: exact pair count, band, and both estimates."""

    two_n: int
    gp_count: int
    band: BandSignature
    egp: float
    igp: float


def band_to_str(band: BandSignature) -> str:
    return "-".join(str(p) for p in band)


def band_from_str(text: str) -> BandSignature:
    try:
        sig = tuple(int(part) for part in text.split("-"))
    except ValueError:
        raise ValueError(f"bad band signature {text!r}") from None
    if not sig or sorted(sig) != list(sig):
        raise ValueError(f"bad band signature {text!r}")
    return sig


def _check_even(two_n: int) -> None:
    if two_n < 4 or two_n % 2:
        raise ValueError(f"need an even integer >= 4, got {two_n}")


def sieving_primes(two_n: int) -> list[int]:
    """All primes p with p^2 <= 2n (enough to sieve every composite < 2n)."""
    _check_even(two_n)
    return [int(p) for p in primes.small_primes(math.isqrt(two_n))]


def band_signature(two_n: int) -> BandSignature:
    """The sieving primes of 2n that divide 2n, ascending (always contains 2)."""
    _check_even(two_n)
    return tuple(p for p in sieving_primes(two_n) if two_n % p == 0)


def count_gp(two_n: int, table: PrimalityTable) -> int:
    """Number of Goldbach pairs of 2n: primes k <= n with 2n-k prime."""
    _check_even(two_n)
    if two_n > table.limit:
        raise OutOfRangeError(f"2n={two_n} exceeds table limit {table.limit}")
    evens = np.array([two_n], dtype=np.int64)
    ks = primes.primes_array(table, two_n // 2)
    return int(backend.gp_counts(table.unpacked(), ks, evens)[0])


def gp_pairs(two_n: int, table: PrimalityTable) -> list[tuple[int, int]]:
    """The Goldbach pairs (k, 2n-k) of 2n, ascending by the smaller member."""
    _check_even(two_n)
    if two_n > table.limit:
        raise OutOfRangeError(f"2n={two_n} exceeds table limit {table.limit}")
    flags = table.unpacked()
    out = []
    for k in primes.primes_array(table, two_n // 2):
        k = int(k)
        if flags[two_n - k]:
            out.append((k, two_n - k))
    return out


# -- batch scan ---------------------------------------------------------------

def _band_strings(evens: np.ndarray) -> list[str]:
    """Band signature strings for an ascending array of evens."""
    parts: list[list[str]] = [["2"] for _ in range(len(evens))]
    for p in primes.small_primes(math.isqrt(int(evens[-1]))):
        p = int(p)
        if p == 2:
            continue
        mask = (evens % p == 0) & (evens >= p * p)
        for i in np.flatnonzero(mask):
            parts[i].append(str(p))
    return ["-".join(row) for row in parts]


def _chunk_payload(ctx: dict, c_lo: int, c_hi: int):
    evens = np.arange(c_lo, c_hi + 1, 2, dtype=np.int64)
    counts = backend.gp_counts(ctx["isprime"], ctx["primes"], evens)
    egp_arr, igp_arr = estimator.pair_estimates(evens, ctx["hi"])
    return evens, counts, egp_arr, igp_arr, _band_strings(evens)


def _make_ctx(table: PrimalityTable, hi: int) -> dict:
    return {
        "isprime": table.unpacked(),
        "primes": primes.primes_array(table, hi // 2),
        "hi": hi,
    }


_WORKER_CTX: dict | None = None


def _worker_init(bits: bytes, limit: int, hi: int) -> None:
    global _WORKER_CTX
    table = PrimalityTable(limit=limit, bits=np.frombuffer(bits, dtype=np.uint8).copy())
    _WORKER_CTX = _make_ctx(table, hi)


def _worker_chunk(bounds: tuple[int, int]):
    assert _WORKER_CTX is not None
    return _chunk_payload(_WORKER_CTX, *bounds)


def scan(lo: int, hi: int, table: PrimalityTable,
         band_filter: set[BandSignature] | None = None,
         workers: int = 1) -> list[GpRecord]:
    """One GpRecord per even 2n in [lo, hi], ascending, optionally filtered.

    ``workers`` > 1 fans chunks out to a process pool; the result is
    identical for any worker count.
    """
    if lo % 2 or hi % 2:
        raise ValueError(f"bounds must be even, got lo={lo} hi={hi}")
    if not 4 <= lo <= hi:
        raise OutOfRangeError(f"need 4 <= lo <= hi, got lo={lo} hi={hi}")
    if hi > table.limit:
        raise OutOfRangeError(f"hi={hi} exceeds table limit {table.limit}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    chunks = []
    step = 2 * CHUNK_EVENS
    for c_lo in range(lo, hi + 1, step):
        chunks.append((c_lo, min(c_lo + step - 2, hi)))

    if workers == 1 or len(chunks) == 1:
        ctx = _make_ctx(table, hi)
        payloads = [_chunk_payload(ctx, *c) for c in chunks]
    else:
        mp_ctx = multiprocessing.get_context("spawn")
        with ProcessPoolExecutor(
            max_workers=min(workers, len(chunks)),
            mp_context=mp_ctx,
            initializer=_worker_init,
            initargs=(table.bits.tobytes(), table.limit, hi),
        ) as pool:
            payloads = list(pool.map(_worker_chunk, chunks))

    sig_cache: dict[str, BandSignature] = {}
    records: list[GpRecord] = []
    for evens, counts, egp_arr, igp_arr, bands in payloads:
        for i in range(len(evens)):
            sig = sig_cache.get(bands[i])
            if sig is None:
                sig = band_from_str(bands[i])
                sig_cache[bands[i]] = sig
            if band_filter is not None and sig not in band_filter:
                continue
            records.append(GpRecord(int(evens[i]), int(counts[i]), sig,
                                    float(egp_arr[i]), float(igp_arr[i])))
    return records

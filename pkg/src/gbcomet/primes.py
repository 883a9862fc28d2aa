"""Prime tables, primorials, rough-number queries, and the simulated sequence.

The central object is :class:`PrimalityTable`, a bit-packed primality table
built with a segmented sieve.  It is immutable after construction and safe to
share across threads and processes.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import backend
from .errors import FormatError, OutOfRangeError

#: Numbers per sieve segment; keeps the working set cache-resident.
SEGMENT_SIZE = 1 << 18

#: Practical sieve ceiling (one bit per integer; ~125 MB of bits at 1e9).
PRACTICAL_LIMIT = 10**9

CACHE_MAGIC = b"GBSV"
CACHE_VERSION = 1

# product of all primes <= 47 is the largest primorial below 2^63
_MAX_EXACT_PRIMORIAL_P = 47


@dataclass(frozen=True)
class PrimalityTable:
    """Bit-indexed primality of all integers in [0, limit].

    ``bits`` packs one bit per integer, LSB-first within each byte (bit i of
    byte j corresponds to the integer 8j+i), matching the on-disk cache
    layout exactly.
    """

    limit: int
    bits: np.ndarray  # uint8, ceil((limit+1)/8) bytes
    _unpacked: list = field(default_factory=list, repr=False, compare=False)

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise OutOfRangeError(f"{n} outside table range [0, {self.limit}]")
        return bool((self.bits[n >> 3] >> (n & 7)) & 1)

    def unpacked(self) -> np.ndarray:
        """Byte-per-integer view (0/1), built lazily and cached."""
        if not self._unpacked:
            arr = np.unpackbits(self.bits, bitorder="little")[: self.limit + 1]
            self._unpacked.append(arr)
        return self._unpacked[0]

    def count(self) -> int:
        """Number of primes <= limit."""
        return int(self.unpacked().sum(dtype=np.int64))


def _simple_sieve(limit: int) -> np.ndarray:
    """Plain boolean sieve for small limits (used for base primes)."""
    flags = np.ones(limit + 1, dtype=np.uint8)
    flags[:2] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = 0
    return flags


@lru_cache(maxsize=8)
def _cached_flags(size: int) -> np.ndarray:
    return _simple_sieve(size)


def small_primes(bound: float) -> np.ndarray:
    """Primes <= bound as an int64 array, backed by a power-of-two cache.

    Meant for the sieving-prime sets of the estimators (bounds around
    sqrt(2n)); large bounds allocate proportionally.
    """
    b = max(int(bound), 4)
    size = 1 << (b - 1).bit_length()
    arr = np.flatnonzero(_cached_flags(size)).astype(np.int64)
    return arr[: int(np.searchsorted(arr, bound, side="right"))]


def build_sieve(limit: int, segment_size: int = SEGMENT_SIZE) -> PrimalityTable:
    """Sieve primality for all integers up to ``limit`` (inclusive).

    Construction is segmented: beyond the output bits, peak working memory is
    one byte per integer of a single segment.
    """
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    if limit > PRACTICAL_LIMIT:
        raise ValueError(f"sieve limit {limit} exceeds practical ceiling {PRACTICAL_LIMIT}")
    if segment_size < 8 or segment_size % 8:
        raise ValueError("segment size must be a positive multiple of 8")

    base_flags = _simple_sieve(math.isqrt(limit))
    base_primes = np.flatnonzero(base_flags).astype(np.int64)

    bits = np.zeros((limit + 8) // 8, dtype=np.uint8)
    for lo in range(0, limit + 1, segment_size):
        hi = min(lo + segment_size, limit + 1)  # exclusive
        seg = np.ones(hi - lo, dtype=np.uint8)
        if lo == 0:
            seg[:2] = 0
        backend.mark_segment(seg, lo, base_primes)
        # segment starts are byte-aligned because segment_size is a multiple of 8
        packed = np.packbits(seg, bitorder="little")
        bits[lo // 8 : lo // 8 + len(packed)] = packed
    return PrimalityTable(limit=limit, bits=bits)


def save_cache(table: PrimalityTable, path) -> None:
    """Write the table in the binary cache format (magic GBSV, version 1)."""
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<I", CACHE_VERSION))
        fh.write(struct.pack("<Q", table.limit))
        fh.write(table.bits.tobytes())


def load_cache(path) -> PrimalityTable:
    """Read a table written by :func:`save_cache`; bit-identical to a fresh build."""
    with open(path, "rb") as fh:
        head = fh.read(4)
        if head != CACHE_MAGIC:
            raise FormatError(f"bad sieve cache magic {head!r}")
        (version,) = struct.unpack("<I", fh.read(4))
        if version != CACHE_VERSION:
            raise FormatError(f"unsupported sieve cache version {version}")
        (limit,) = struct.unpack("<Q", fh.read(8))
        nbytes = (limit + 1 + 7) // 8
        raw = fh.read()
    if len(raw) != nbytes:
        raise FormatError(f"sieve cache payload is {len(raw)} bytes, expected {nbytes}")
    bits = np.frombuffer(raw, dtype=np.uint8).copy()
    return PrimalityTable(limit=int(limit), bits=bits)


def primes_in(table: PrimalityTable, lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending."""
    if not 0 <= lo <= hi:
        raise ValueError(f"need 0 <= lo <= hi, got lo={lo} hi={hi}")
    if hi > table.limit:
        raise OutOfRangeError(f"hi={hi} exceeds table limit {table.limit}")
    arr = table.unpacked()
    return [int(p) for p in np.flatnonzero(arr[lo : hi + 1]) + lo]


def primes_array(table: PrimalityTable, hi: int | None = None) -> np.ndarray:
    """Primes up to ``hi`` (default: table limit) as an int64 array."""
    if hi is None:
        hi = table.limit
    if hi > table.limit:
        raise OutOfRangeError(f"hi={hi} exceeds table limit {table.limit}")
    return np.flatnonzero(table.unpacked()[: hi + 1]).astype(np.int64)


def primorial(p: int) -> int:
    """Product of all primes <= p, exact.

    Limited to p <= 47 so the result fits a 64-bit magnitude; use
    :func:`log_primorial` for larger p.
    """
    if p < 2 or not _is_small_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > _MAX_EXACT_PRIMORIAL_P:
        raise OverflowError(
            f"primorial({p}) exceeds 64-bit range; use log_primorial for p > 47"
        )
    out = 1
    for q in range(2, p + 1):
        if _is_small_prime(q):
            out *= q
    return out


def log_primorial(p: int) -> float:
    """Natural log of the primorial of p (sum of ln q over primes q <= p)."""
    if p < 2:
        raise ValueError(f"{p} is not prime")
    flags = _simple_sieve(p)
    if not flags[p]:
        raise ValueError(f"{p} is not prime")
    return float(np.log(np.flatnonzero(flags).astype(np.float64)).sum())


def _is_small_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def is_rough(x: int, p: int, table: PrimalityTable) -> bool:
    """True iff x = 1 or every prime factor of x is >= p (x is "p-rough").

    Checked by trial division against the primes below p; no factor table is
    stored.
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if x > table.limit:
        raise OutOfRangeError(f"x={x} exceeds table limit {table.limit}")
    if not table.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if x == 1:
        return True
    for q in primes_in(table, 2, p - 1):
        if x % q == 0:
            return False
    return True


@dataclass(frozen=True)
class SimulatedPrimeSeq:
    """Ascending reals with gap ln(value): value[i+1] = value[i] + ln(value[i])."""

    start: float
    values: np.ndarray

    def __len__(self) -> int:
        return len(self.values)


def simulated_primes(start: float, count: int) -> SimulatedPrimeSeq:
    """First ``count`` values of the simulated prime sequence from ``start``."""
    if not start > 2:
        raise ValueError(f"start must exceed 2, got {start}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    vals = np.empty(count, dtype=np.float64)
    v = float(start)
    for i in range(count):
        vals[i] = v
        v += math.log(v)
    return SimulatedPrimeSeq(start=float(start), values=vals)

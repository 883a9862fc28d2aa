"""Goldbach-pair estimators: first-order (EGP) and integral-corrected (IGP).

The correction pipeline follows the elimination-probability model:

* ``rpf_2f`` / ``trpf`` - relative probability that a p-rough number is a
  k-factor multiple of p, relative to the 1/p baseline (k = 2..5; chain
  values drawn from real primes or from the simulated sequence).
* ``integral_2f`` / ``integral_3f`` - closed-form integrals of those
  factors from p^k up to 2n, expressed through the logarithmic integral.
* ``alpha`` - average relative factor up to 2n, piecewise on log_p(2n).
* ``igp`` - the EGP product with each odd prime's elimination rate scaled
  by alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from . import backend, primes
from .errors import DomainError, OutOfRangeError
from .numerics import E_GAMMA, GAMMA, li

PrimeSource = Literal["real", "simulated"]

_FACTOR_COUNTS = (2, 3, 4, 5)


def _primes_upto(bound: float) -> np.ndarray:
    """Primes <= bound as float64."""
    return primes.small_primes(bound).astype(np.float64)


def _odd_sieving_primes(two_n: int) -> list[int]:
    """Odd primes p with p*p <= two_n (the sieving set minus 2)."""
    return [int(p) for p in primes.small_primes(math.isqrt(two_n)) if p > 2]


def _check_even(two_n: int) -> None:
    if two_n < 4 or two_n % 2:
        raise ValueError(f"need an even integer >= 4, got {two_n}")


def rough_density(p: int) -> float:
    """Asymptotic density of p-rough numbers: prod over primes k < p of (k-1)/k."""
    if not primes._is_small_prime(p):
        raise ValueError(f"{p} is not prime")
    out = 1.0
    for k in _primes_upto(p - 1):
        out *= (k - 1.0) / k
    return out


def egp(two_n: int) -> float:
    """First-order pair-count estimate: (n/2) prod f(2n,p)/p over odd sieving
    primes, with f = p-1 for divisors of 2n and p-2 otherwise."""
    _check_even(two_n)
    out = two_n / 4.0
    for p in _odd_sieving_primes(two_n):
        f = p - 1.0 if two_n % p == 0 else p - 2.0
        out *= f / p
    return out


def rpf_2f(x: float, p: float) -> float:
    """Relative probability factor for two-factor multiples of p.

    Zero below p^2, then e^gamma / log_p(x/p).
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if not p > 2:
        raise ValueError(f"p must exceed 2, got {p}")
    if x < p * p:
        return 0.0
    return E_GAMMA * math.log(p) / math.log(x / p)


def _source_values(p: float, bound: float, source: PrimeSource) -> np.ndarray:
    """Chain values in [p, bound]: actual primes or the simulated sequence."""
    if source == "simulated":
        return backend.simulated_fill(float(p), float(bound))
    arr = _primes_upto(bound)
    return arr[int(np.searchsorted(arr, p)):]


def _chain_sum(x: float, p: float, k: int, src: np.ndarray) -> float:
    """Total relative factor for k-factor multiples, summed over nondecreasing
    chains (r_1 <= ... <= r_{k-2}) drawn from ``src``."""
    if x < float(p) ** k:
        return 0.0
    lnp = math.log(p)
    if k == 2:
        return E_GAMMA * lnp / math.log(x / p)

    def rec(prod: float, last: float, remaining: int) -> float:
        rem = x / (p * prod)
        if remaining == 1:
            lo = int(np.searchsorted(src, last))
            hi = int(np.searchsorted(src, math.sqrt(rem), side="right"))
            t = src[lo:hi]
            if not len(t):
                return 0.0
            return float(np.sum((E_GAMMA / (prod * t)) * (lnp / np.log(x / (p * prod * t)))))
        # the j-th chain variable is bounded by the (k-j)-th root of what remains
        bound = rem ** (1.0 / (remaining + 1))
        lo = int(np.searchsorted(src, last))
        hi = int(np.searchsorted(src, bound, side="right"))
        total = 0.0
        for s in src[lo:hi]:
            total += rec(prod * float(s), float(s), remaining - 1)
        return total

    return rec(1.0, float(p), k - 2)


def trpf(x: float, p: float, k: int, source: PrimeSource = "real") -> float:
    """Total relative probability factor for k-factor multiples of p at x.

    Chain values are drawn ascending from the source starting at p; the
    result is 0 for x < p^k.  With the real source the prime cache grows to
    sqrt(x/p).
    """
    if k not in _FACTOR_COUNTS:
        raise ValueError(f"factor count must be in 2..5, got {k}")
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if not p > 2:
        raise ValueError(f"p must exceed 2, got {p}")
    if k == 2 or x < float(p) ** k:
        return _chain_sum(x, p, k, np.empty(0))
    src = _source_values(p, math.sqrt(x / p), source)
    return _chain_sum(x, p, k, src)


@dataclass(frozen=True)
class TrpfCurve:
    """Sampled total relative probability factors on a log_p(x) grid."""

    p: float
    grid: np.ndarray
    per_factor: dict[int, np.ndarray]
    total: np.ndarray


def trpf_curve(p: float, grid_spec: tuple[float, float, int],
               source: PrimeSource = "real",
               factors: tuple[int, ...] = _FACTOR_COUNTS) -> TrpfCurve:
    """Sample trpf for each factor count over a log_p(x) grid.

    ``grid_spec`` is (lo, hi, steps) in log_p(x) units with 1 <= lo < hi and
    steps >= 2.
    """
    lo, hi, steps = grid_spec
    if not (1 <= lo < hi):
        raise ValueError(f"need 1 <= lo < hi, got lo={lo} hi={hi}")
    if steps < 2:
        raise ValueError(f"need steps >= 2, got {steps}")
    if any(k not in _FACTOR_COUNTS for k in factors):
        raise ValueError(f"factor counts must be within 2..5, got {factors}")
    if not p > 2:
        raise ValueError(f"p must exceed 2, got {p}")
    grid = np.linspace(float(lo), float(hi), int(steps))
    need_chains = any(k >= 3 for k in factors)
    src = (_source_values(p, float(p) ** ((hi - 1.0) / 2.0), source)
           if need_chains else np.empty(0))
    per_factor: dict[int, np.ndarray] = {}
    for k in factors:
        per_factor[k] = np.array([_chain_sum(float(p) ** u, p, k, src) for u in grid])
    total = np.zeros_like(grid)
    for k in factors:
        total += per_factor[k]
    return TrpfCurve(p=float(p), grid=grid, per_factor=per_factor, total=total)


def integral_2f(two_n: int, p: int) -> float:
    """Integral of the two-factor relative probability factor over [p^2, 2n].

    Closed form: e^gamma ln(p) p (li(2n/p) - li(p)); zero when 2n = p^2.
    """
    if p * p > two_n:
        raise DomainError(f"need p^2 <= 2n, got p={p} 2n={two_n}")
    if two_n == p * p:
        return 0.0
    return E_GAMMA * math.log(p) * p * (li(two_n / p) - li(float(p)))


def integral_3f(two_n: int, p: int) -> float:
    """Integral of the three-factor total relative probability factor over
    [p^3, 2n].

    Each chain prime r contributes on [p r^2, 2n], which integrates exactly
    to e^gamma ln(p) p (li(2n/(p r)) - li(r)); the result sums those terms
    over primes r with p r^2 <= 2n.
    """
    if p ** 3 > two_n:
        raise DomainError(f"need p^3 <= 2n, got p={p} 2n={two_n}")
    return _integral_3f_value(float(two_n), float(p))


def _integral_3f_value(x: float, p: float) -> float:
    src = _primes_upto(math.sqrt(x / p))
    s = 0.0
    for r in src[int(np.searchsorted(src, p)):]:
        if p * r * r > x:
            break
        s += li(x / (p * r)) - li(float(r))
    return E_GAMMA * math.log(p) * p * s


_CASE_ONE = "one"
_CASE_I2_I3 = "i2+i3"
_CASE_I2 = "i2"
_CASE_ZERO = "zero"


def _alpha_value(x: float, p: int) -> tuple[float, str]:
    """Average relative factor up to x, piecewise on u = log_p(x)."""
    lnp = math.log(p)
    u = math.log(x) / lnp
    if u >= 4.0:
        return 1.0, _CASE_ONE
    if u < 2.0:
        return 0.0, _CASE_ZERO
    i2 = E_GAMMA * lnp * p * (li(x / p) - li(float(p)))
    if u >= 3.0:
        return (i2 + _integral_3f_value(x, float(p))) / x, _CASE_I2_I3
    return i2 / x, _CASE_I2


def alpha(two_n: int, p: int) -> float:
    """Average relative elimination factor for the odd sieving prime p up to 2n."""
    _check_even(two_n)
    if p == 2:
        raise ValueError("alpha applies to odd sieving primes only")
    if not primes._is_small_prime(p):
        raise ValueError(f"{p} is not prime")
    return _alpha_value(float(two_n), p)[0]


@dataclass(frozen=True)
class AlphaProfile:
    """alpha values (and piecewise case labels) for every odd sieving prime."""

    two_n: int
    entries: dict[int, float]
    cases: dict[int, str]


def alpha_profile(two_n: int) -> AlphaProfile:
    """alpha over every odd sieving prime of 2n."""
    _check_even(two_n)
    entries: dict[int, float] = {}
    cases: dict[int, str] = {}
    for p in _odd_sieving_primes(two_n):
        entries[p], cases[p] = _alpha_value(float(two_n), p)
    return AlphaProfile(two_n=two_n, entries=entries, cases=cases)


def igp(two_n: int) -> float:
    """Integral-corrected pair-count estimate.

    Same product as :func:`egp` with f = p - alpha(n, p) for divisors of 2n
    (eliminations stop at n on the inbound half) and f = p - 2 alpha(2n, p)
    otherwise.
    """
    _check_even(two_n)
    out = two_n / 4.0
    for p in _odd_sieving_primes(two_n):
        if two_n % p == 0:
            f = p - _alpha_value(two_n / 2.0, p)[0]
        else:
            f = p - 2.0 * _alpha_value(float(two_n), p)[0]
        out *= f / p
    return out


def egp_b2_closed(two_n: int, C: float) -> float:
    """Closed-form estimate C * 2n / ln^2(2n) for evens whose only sieving
    divisor is 2."""
    if two_n < 4:
        raise ValueError(f"need 2n >= 4, got {two_n}")
    return C * two_n / math.log(two_n) ** 2


@dataclass(frozen=True)
class B2Constants:
    """Partial products for the closed-form constants c and C = 2 c e^-gamma."""

    c_partial: float
    C_partial: float
    cutoff: int


def mertens_partial(cutoff: int, table: primes.PrimalityTable) -> B2Constants:
    """Partial Mertens-style product ln(cutoff) prod (p-2)/(p-1) over odd
    primes p <= cutoff, and its rescaling 2 c e^-gamma."""
    if cutoff < 9:
        raise ValueError(f"cutoff must be >= 9, got {cutoff}")
    if cutoff > table.limit:
        raise OutOfRangeError(f"cutoff {cutoff} exceeds table limit {table.limit}")
    ps = primes.primes_array(table, cutoff)
    c = math.log(cutoff)
    for p in ps[1:]:  # skip 2
        c *= (p - 2.0) / (p - 1.0)
    C = 2.0 * c * math.exp(-GAMMA)
    return B2Constants(c_partial=float(c), C_partial=float(C), cutoff=cutoff)


def pair_estimates(evens: np.ndarray, max_even: int | None = None
                   ) -> tuple[np.ndarray, np.ndarray]:
    """Batch egp/igp for an ascending int64 array of evens (scan hot path)."""
    if max_even is None:
        max_even = int(evens[-1])
    odd, lnp, lip = _pen_tables(math.isqrt(max_even))
    return backend.pair_estimates(np.ascontiguousarray(evens, dtype=np.int64),
                                  odd, lnp, lip)


@lru_cache(maxsize=4)
def _pen_tables(bound: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    odd = primes.small_primes(bound)
    odd = np.ascontiguousarray(odd[odd > 2])
    lnp = np.log(odd.astype(np.float64))
    lip = np.array([li(float(p)) for p in odd])
    return odd, lnp, lip

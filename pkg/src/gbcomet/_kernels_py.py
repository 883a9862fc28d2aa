"""Pure-Python (numpy) implementations of the hot kernels.

This module mirrors the interface of the compiled extension ``_kernels``
and is selected automatically when the extension is unavailable (or when
``GBCOMET_FORCE_FALLBACK`` is set).  Inner loops are vectorised with numpy;
results match the compiled kernels to floating-point rounding.
"""

from __future__ import annotations

import math

import numpy as np

GAMMA = 0.5772156649015329
E_GAMMA = math.exp(GAMMA)

_LI_MAX_TERMS = 500


def mark_segment(seg: np.ndarray, seg_lo: int, base_primes: np.ndarray) -> None:
    """Zero out composites in ``seg`` (one byte per integer, starting at seg_lo).

    Only multiples m = k*p with k >= 2 are cleared, so base primes inside the
    segment survive.
    """
    hi = seg_lo + len(seg)  # exclusive
    for p in base_primes:
        p = int(p)
        start = max(p * p, ((seg_lo + p - 1) // p) * p)
        if start >= hi:
            continue
        seg[start - seg_lo :: p] = 0


def gp_counts(isprime: np.ndarray, primes: np.ndarray, evens: np.ndarray) -> np.ndarray:
    """Goldbach-pair counts for each even value.

    counts[i] = #{k prime : k <= evens[i]/2 and evens[i]-k prime}, looked up
    in the byte table ``isprime``.
    """
    out = np.empty(len(evens), dtype=np.int64)
    halves = evens >> 1
    kmax = np.searchsorted(primes, halves, side="right")
    for i in range(len(evens)):
        ks = primes[: kmax[i]]
        out[i] = int(isprime[evens[i] - ks].sum(dtype=np.int64))
    return out


def li_many(xs: np.ndarray) -> np.ndarray:
    """Logarithmic integral li(x) for an array of x > 1.

    Rapidly convergent alternating series around ln(x); summation runs in a
    fixed ascending term order until every lane has converged.
    """
    if len(xs) == 0:
        return np.empty(0, dtype=np.float64)
    lx = np.log(xs)
    s = np.zeros_like(lx)
    coef = lx.copy()  # ln(x)^n / (n! 2^(n-1)), maintained incrementally
    harm = 0.0
    sign = 1.0
    lx_max = float(lx.max())
    n = 1
    while n < _LI_MAX_TERMS:
        if n % 2 == 1:
            harm += 1.0 / n
        t = coef * harm
        if sign > 0:
            s += t
        else:
            s -= t
        if n > lx_max and float(np.max(t)) <= 1e-18 * float(np.max(np.abs(s))):
            break
        n += 1
        coef *= lx / (2.0 * n)
        sign = -sign
    return GAMMA + np.log(lx) + np.sqrt(xs) * s


def simulated_fill(start: float, bound: float) -> np.ndarray:
    """Ascending sequence v0=start, v[i+1]=v[i]+ln(v[i]), while v <= bound."""
    if start <= 1.0:
        raise ValueError("sequence start must exceed 1")
    vals = []
    v = float(start)
    while v <= bound:
        vals.append(v)
        v += math.log(v)
    return np.asarray(vals, dtype=np.float64)


def _alpha_block(x: np.ndarray, jp: int, primes: np.ndarray, lnp: np.ndarray,
                 li_p: np.ndarray) -> np.ndarray:
    """Average-eliminations factor alpha for an ascending float array x.

    Piecewise on u = log_p(x): 1 for u >= 4, integral-based on [2, 4), 0 below.
    """
    p = float(primes[jp])
    L = float(lnp[jp])
    u = np.log(x) / L
    # x is ascending, so the u-thresholds are index boundaries
    i2 = int(np.searchsorted(u, 2.0))
    i3 = int(np.searchsorted(u, 3.0))
    i4 = int(np.searchsorted(u, 4.0))
    out = np.ones_like(x)
    out[:i2] = 0.0
    if i2 == i4:
        return out
    seg = x[i2:i4]
    s = li_many(seg / p) - li_p[jp]
    if i3 < i4:
        # three-factor contribution on u in [3, 4): sum over chain primes r,
        # each active where x >= p*r^2
        seg3 = x[i3:i4]
        acc = np.zeros_like(seg3)
        rmax = math.sqrt(float(seg3[-1]) / p)
        j = jp
        while j < len(primes) and primes[j] <= rmax:
            r = float(primes[j])
            k = int(np.searchsorted(seg3, p * r * r))
            if k < len(seg3):
                acc[k:] += li_many(seg3[k:] / (p * r)) - li_p[j]
            j += 1
        s[i3 - i2 :] += acc
    out[i2:i4] = E_GAMMA * L * p * s / seg
    return out


def pair_estimates(evens: np.ndarray, primes: np.ndarray, lnp: np.ndarray,
                   li_p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """First-order (egp) and alpha-corrected (igp) pair estimates.

    ``evens`` must be ascending; ``primes`` are the odd primes up to
    sqrt(max(evens)) with their logs and li values precomputed.
    """
    x = evens.astype(np.float64)
    egp = x / 4.0
    igp = x / 4.0
    for j in range(len(primes)):
        p = int(primes[j])
        i0 = int(np.searchsorted(evens, p * p))
        if i0 >= len(evens):
            break
        sub = x[i0:]
        a2 = _alpha_block(sub, j, primes, lnp, li_p)
        div = (evens[i0:] % p) == 0
        f_e = np.where(div, p - 1.0, p - 2.0)
        f_i = p - 2.0 * a2
        if div.any():
            # divisor case: alpha is evaluated at n = 2n/2 instead
            a1 = _alpha_block(sub[div] / 2.0, j, primes, lnp, li_p)
            f_i[div] = p - a1
        egp[i0:] *= f_e / p
        igp[i0:] *= f_i / p
    return egp, igp

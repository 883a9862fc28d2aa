# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: segment sieving, pair counting, li, pair estimates.

Interface-identical to ``_kernels_py``; selected at import by ``backend``.
"""

import numpy as np

from libc.math cimport fabs, log, sqrt

cdef double GAMMA = 0.5772156649015329
cdef double E_GAMMA = 1.781072417990198
cdef int LI_MAX_TERMS = 500


cdef double _li(double x) nogil:
    """li(x) for x > 1 via the alternating series around ln(x)."""
    cdef double lx = log(x)
    cdef double s = 0.0
    cdef double coef = lx
    cdef double harm = 0.0
    cdef double sign = 1.0
    cdef double t
    cdef int n = 1
    while n < LI_MAX_TERMS:
        if n & 1:
            harm += 1.0 / n
        t = coef * harm
        s += sign * t
        if n > lx and t <= 1e-18 * fabs(s):
            break
        n += 1
        coef *= lx / (2.0 * n)
        sign = -sign
    return GAMMA + log(fabs(lx)) + sqrt(x) * s


def mark_segment(unsigned char[::1] seg, long long seg_lo, long long[::1] base_primes):
    """Zero out composites in ``seg`` (one byte per integer, starting at seg_lo)."""
    cdef long long hi = seg_lo + seg.shape[0]
    cdef long long p, start, m
    cdef Py_ssize_t j
    with nogil:
        for j in range(base_primes.shape[0]):
            p = base_primes[j]
            start = ((seg_lo + p - 1) // p) * p
            if start < p * p:
                start = p * p
            if start >= hi:
                continue
            m = start
            while m < hi:
                seg[m - seg_lo] = 0
                m += p


def gp_counts(unsigned char[::1] isprime, long long[::1] primes, long long[::1] evens):
    """Goldbach-pair counts per even value (smaller member k <= 2n/2)."""
    out_arr = np.empty(evens.shape[0], dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long t, half, c, k
    cdef Py_ssize_t i, j, np_ = primes.shape[0]
    with nogil:
        for i in range(evens.shape[0]):
            t = evens[i]
            half = t >> 1
            c = 0
            for j in range(np_):
                k = primes[j]
                if k > half:
                    break
                if isprime[t - k]:
                    c += 1
            out[i] = c
    return out_arr


def li_many(xs_in):
    """Vector li over a float64 array of x > 1."""
    xs_arr = np.ascontiguousarray(xs_in, dtype=np.float64)
    out_arr = np.empty(len(xs_arr), dtype=np.float64)
    cdef double[::1] xs = xs_arr
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(xs.shape[0]):
            out[i] = _li(xs[i])
    return out_arr


def simulated_fill(double start, double bound):
    """Ascending sequence v0=start, v[i+1]=v[i]+ln(v[i]), while v <= bound."""
    if start <= 1.0:
        raise ValueError("sequence start must exceed 1")
    cdef double v = start
    cdef Py_ssize_t n = 0
    while v <= bound:
        n += 1
        v += log(v)
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    v = start
    for i in range(n):
        out[i] = v
        v += log(v)
    return out_arr


cdef double _alpha(double x, Py_ssize_t jp, long long[::1] primes,
                   double[::1] lnp, double[::1] li_p) nogil:
    """Average-eliminations factor alpha(x, p) with p = primes[jp]."""
    cdef double p = <double> primes[jp]
    cdef double L = lnp[jp]
    cdef double u = log(x) / L
    cdef double s, r
    cdef Py_ssize_t j
    if u >= 4.0:
        return 1.0
    if u < 2.0:
        return 0.0
    s = _li(x / p) - li_p[jp]
    if u >= 3.0:
        # three-factor chains: primes r with p*r*r <= x
        j = jp
        while j < primes.shape[0]:
            r = <double> primes[j]
            if p * r * r > x:
                break
            s += _li(x / (p * r)) - li_p[j]
            j += 1
    return E_GAMMA * L * p * s / x


def pair_estimates(long long[::1] evens, long long[::1] primes,
                   double[::1] lnp, double[::1] li_p):
    """First-order (egp) and alpha-corrected (igp) pair estimates per even."""
    egp_arr = np.empty(evens.shape[0], dtype=np.float64)
    igp_arr = np.empty(evens.shape[0], dtype=np.float64)
    cdef double[::1] egp = egp_arr
    cdef double[::1] igp = igp_arr
    cdef long long t, p
    cdef double x, e, g, pd, fe, fi
    cdef Py_ssize_t i, j
    with nogil:
        for i in range(evens.shape[0]):
            t = evens[i]
            x = <double> t
            e = x / 4.0
            g = x / 4.0
            for j in range(primes.shape[0]):
                p = primes[j]
                if p * p > t:
                    break
                pd = <double> p
                if t % p == 0:
                    fe = pd - 1.0
                    fi = pd - _alpha(x / 2.0, j, primes, lnp, li_p)
                else:
                    fe = pd - 2.0
                    fi = pd - 2.0 * _alpha(x, j, primes, lnp, li_p)
                e *= fe / pd
                g *= fi / pd
            egp[i] = e
            igp[i] = g
    return egp_arr, igp_arr

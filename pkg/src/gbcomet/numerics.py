"""Special functions and adaptive quadrature.

``li`` is evaluated through a rapidly convergent alternating series around
ln(x); :func:`quadrature` is an independent adaptive-Simpson integrator used
by the test suite as an oracle for every closed-form integral in the package.
All arithmetic is 64-bit binary floating point with fixed summation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NumericError

#: Euler-Mascheroni constant (nearest float64).
GAMMA = 0.5772156649015329
E_GAMMA = math.exp(GAMMA)

_LI_MAX_TERMS = 500


def li(x: float) -> float:
    """Logarithmic integral li(x) = PV int_0^x dt/ln t, for x > 1.

    Accurate to better than 1e-10 relative over (1 + 1e-6, 1e12]; diverges to
    -inf as x -> 1+.
    """
    if x <= 1.0:
        raise DomainError(f"li requires x > 1, got {x}")
    lx = math.log(x)
    s = 0.0
    coef = lx  # ln(x)^n / (n! 2^(n-1)), updated incrementally
    harm = 0.0  # sum of 1/(2k+1) for 2k+1 <= n
    sign = 1.0
    n = 1
    while n < _LI_MAX_TERMS:
        if n % 2 == 1:
            harm += 1.0 / n
        t = coef * harm
        s += sign * t
        if n > lx and t <= 1e-18 * abs(s):
            break
        n += 1
        coef *= lx / (2.0 * n)
        sign = -sign
    return GAMMA + math.log(lx) + math.sqrt(x) * s


#: li(2), the offset subtracted by :func:`li_offset`.
LI2 = li(2.0)


def li_offset(x: float) -> float:
    """Offset logarithmic integral li(x) - li(2), for x >= 2."""
    if x < 2.0:
        raise DomainError(f"offset li requires x >= 2, got {x}")
    return li(x) - LI2


@dataclass(frozen=True)
class Constants:
    """Shared numeric constants."""

    gamma: float = GAMMA
    e_gamma: float = E_GAMMA
    li2: float = LI2


CONSTANTS = Constants()

_MAX_DEPTH = 60


def quadrature(f: Callable[[float], float], a: float, b: float,
               rel_tol: float = 1e-9) -> float:
    """Adaptive-Simpson estimate of the integral of f over [a, b].

    The local error estimate (Richardson, whole-vs-halves difference / 15)
    is driven below ``rel_tol`` relative to the running whole-interval
    magnitude.  Exact for polynomials of degree <= 3.
    """
    if not a <= b:
        raise ValueError(f"need a <= b, got a={a} b={b}")
    if not 1e-12 <= rel_tol <= 1e-3:
        raise ValueError(f"rel_tol must lie in [1e-12, 1e-3], got {rel_tol}")
    if a == b:
        return 0.0

    def eval_f(t: float) -> float:
        v = f(t)
        if not math.isfinite(v):
            raise NumericError(f"integrand is non-finite at x={t}")
        return v

    fa, fm, fb = eval_f(a), eval_f((a + b) / 2.0), eval_f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    scale = max(abs(whole), (b - a) * max(abs(fa), abs(fm), abs(fb)), 1e-300)
    return _adapt(eval_f, a, b, fa, fm, fb, whole, rel_tol * scale, _MAX_DEPTH)


def _adapt(f, a, b, fa, fm, fb, whole, tol, depth):
    m = (a + b) / 2.0
    lm = (a + m) / 2.0
    rm = (m + b) / 2.0
    flm = f(lm)
    frm = f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    err = (left + right - whole) / 15.0
    if depth <= 0 or abs(err) <= tol:
        return left + right + err
    return _adapt(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + _adapt(
        f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1
    )

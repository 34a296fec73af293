"""Chebyshev polynomials of the first kind.

Three independent evaluators are provided so they can check each other:
the forward three-term recurrence, the trigonometric form cos(k arccos t),
and Clenshaw's backward summation of the series with a single unit
coefficient.  Integer and Fraction arguments are evaluated exactly by the
recurrence and Clenshaw; anything else is carried as an mpf at the requested
precision.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import mpmath

from chebbound.numerics import DEFAULT_PRECISION
from chebbound.polynomial import IntPolynomial


def _is_exact(t) -> bool:
    return isinstance(t, (int, Fraction)) and not isinstance(t, bool)


def _check_index(k: int) -> None:
    if k < 0:
        raise ValueError(f"Chebyshev index must be nonnegative, got {k}")


def cheb_eval_all(k_max: int, t, precision: int = DEFAULT_PRECISION) -> list:
    """``[T_0(t), ..., T_{k_max}(t)]`` from the forward recurrence."""
    _check_index(k_max)
    if _is_exact(t):
        t = Fraction(t)
        vals = [Fraction(1), t]
        for _ in range(k_max - 1):
            vals.append(2 * t * vals[-1] - vals[-2])
        return vals[: k_max + 1]
    with mpmath.workdps(precision):
        t = mpmath.mpf(t)
        vals = [mpmath.mpf(1), t]
        for _ in range(k_max - 1):
            vals.append(2 * t * vals[-1] - vals[-2])
        return vals[: k_max + 1]


def cheb_eval_recurrence(k: int, t, precision: int = DEFAULT_PRECISION):
    """T_k(t) by the recurrence T_{j+1} = 2t T_j - T_{j-1}."""
    _check_index(k)
    if _is_exact(t):
        t = Fraction(t)
        prev, cur = Fraction(1), t
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, 2 * t * cur - prev
        return cur
    with mpmath.workdps(precision):
        t = mpmath.mpf(t)
        prev, cur = mpmath.mpf(1), t
        if k == 0:
            return prev
        for _ in range(k - 1):
            prev, cur = cur, 2 * t * cur - prev
        return cur


def cheb_eval_trig(k: int, t, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """T_k(t) = cos(k arccos t), defined on [-1, 1] only."""
    _check_index(k)
    with mpmath.workdps(precision):
        if isinstance(t, Fraction):
            t = mpmath.mpf(t.numerator) / t.denominator
        t = mpmath.mpf(t)
        if abs(t) > 1:
            raise ValueError(f"trigonometric form needs |t| <= 1, got {t}")
        return mpmath.cos(k * mpmath.acos(t))


def clenshaw(coeffs: Sequence, t, precision: int = DEFAULT_PRECISION):
    """Sum ``coeffs[j] * T_j(t)`` by Clenshaw's backward recurrence."""
    if _is_exact(t):
        t = Fraction(t)
        zero = Fraction(0)
        return _clenshaw(coeffs, t, zero)
    with mpmath.workdps(precision):
        return _clenshaw(coeffs, mpmath.mpf(t), mpmath.mpf(0))


def _clenshaw(coeffs, t, zero):
    b1 = b2 = zero
    for c in reversed(coeffs[1:]):
        b1, b2 = c + 2 * t * b1 - b2, b1
    c0 = coeffs[0] if len(coeffs) else zero
    return c0 + t * b1 - b2


def cheb_eval_clenshaw(k: int, t, precision: int = DEFAULT_PRECISION):
    """T_k(t) as the Chebyshev series whose only nonzero coefficient is c_k = 1."""
    _check_index(k)
    return clenshaw([0] * k + [1], t, precision)


@lru_cache(maxsize=None)
def cheb_expand(k: int) -> IntPolynomial:
    """Exact monomial coefficients of T_k in the variable t."""
    _check_index(k)
    if k == 0:
        return IntPolynomial((1,), "t")
    prev, cur = IntPolynomial((1,), "t"), IntPolynomial((0, 1), "t")
    for _ in range(k - 1):
        prev, cur = cur, 2 * cur.shift() - prev
    return cur


def odd_cheb_bound(k: int, t):
    """The bound min{1, (2k+1)t} on |T_{2k+1}(t)| for t in [0, 1]."""
    _check_index(k)
    if not _is_exact(t):
        t = mpmath.mpf(t)
    if t < 0 or t > 1:
        raise ValueError(f"bound holds on [0, 1] only, got t={t}")
    return min(1, (2 * k + 1) * t)

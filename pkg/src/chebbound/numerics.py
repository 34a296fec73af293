"""Exact rational and extended-precision real arithmetic.

Rationals are :class:`fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator.  Extended reals are :class:`mpmath.mpf`
values; functions that produce them take an explicit ``precision`` in
significant decimal digits and never touch the global mpmath context.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from numbers import Rational
from typing import Union

import mpmath

DEFAULT_PRECISION = 40

# Guard digits a working precision must carry beyond the printed digits.
GUARD_DIGITS = 8

Scalar = Union[int, Fraction, mpmath.mpf]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


class PrecisionError(ValueError):
    """The working precision is too small for the requested output."""


def to_fraction(x) -> Fraction:
    """Exact rational value of ``x``.

    Binary floating-point inputs (``float`` and ``mpf``) convert without
    rounding.  Strings are parsed as decimal literals.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, mpmath.mpf):
        if not mpmath.isfinite(x):
            raise ValueError(f"cannot convert {x} to a rational")
        man, exp = x.man_exp
        man = int(man)
        return Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2 ** (-exp))
    if isinstance(x, (float, str)):
        return Fraction(x)
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def to_mpf(x, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Round ``x`` to an mpf carrying ``precision`` decimal digits."""
    with mpmath.workdps(precision):
        if isinstance(x, Fraction):
            return mpmath.mpf(x.numerator) / x.denominator
        return mpmath.mpf(x)


def rational_arith(a: Fraction, b: Fraction, op: str) -> Fraction:
    """Apply ``op`` (one of add, sub, mul, div) to two rationals exactly."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    a, b = to_fraction(a), to_fraction(b)
    if op == "div" and b == 0:
        raise ZeroDivisionError("rational division by zero")
    return fn(a, b)


def round_decimal(x, digits: int, precision: int | None = None) -> str:
    """Render ``x`` with exactly ``digits`` fractional digits, rounding half to even.

    Rationals are rounded exactly.  For an mpf ``precision`` is the number of
    significant digits it was computed with (default: the current mpmath
    context) and must exceed ``digits`` by at least ``GUARD_DIGITS``.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if isinstance(x, mpmath.mpf):
        if precision is None:
            precision = mpmath.mp.dps
        if precision < digits + GUARD_DIGITS:
            raise PrecisionError(
                f"precision {precision} is too small for {digits} digits; "
                f"need at least {digits + GUARD_DIGITS}"
            )
    q = to_fraction(x)
    scaled = q * 10**digits
    # round() on a Fraction rounds half to even
    n = round(scaled)
    sign = "-" if n < 0 else ""
    n = abs(n)
    whole, frac = divmod(n, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def sqrt_ext(x, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Square root of a nonnegative scalar at ``precision`` digits."""
    if isinstance(x, Fraction):
        if x < 0:
            raise ValueError("square root of a negative number")
        with mpmath.workdps(precision + 5):
            r = mpmath.sqrt(mpmath.mpf(x.numerator) / x.denominator)
        return to_mpf(r, precision)
    with mpmath.workdps(precision):
        x = mpmath.mpf(x)
        if x < 0:
            raise ValueError("square root of a negative number")
        return mpmath.sqrt(x)


def rational_sqrt_bounds(q: Fraction, digits: int) -> tuple[Fraction, Fraction]:
    """Rationals ``lo <= sqrt(q) <= hi`` with ``hi - lo <= 10**-digits``."""
    q = to_fraction(q)
    if q < 0:
        raise ValueError("square root of a negative number")
    scale = 10**digits
    # floor(scale * sqrt(q)) = isqrt(floor(scale**2 * q))
    s = math.isqrt(q.numerator * scale * scale // q.denominator)
    lo = Fraction(s, scale)
    hi = lo if lo * lo == q else Fraction(s + 1, scale)
    return lo, hi

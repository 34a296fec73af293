"""Certified evaluation of C_nu/(2nu+1).

With n = 2nu+1 and the substitution sqrt(t) -> t, the ratio is the supremum
over t in (0, 1] of

    f(t) = |(-1)^nu n t - T_n(t)| / (n t)^2 = |Q_nu(t^2)| / (n^2 t)

The second form is free of cancellation and is a rational function with
integer coefficients.  Its smooth part Q_nu(t^2)/t is stationary exactly
where p(x) = 2x Q_nu'(x) - Q_nu(x) vanishes at x = t^2, so the supremum is
the largest of f(1) and the values of f at the roots of p in (0, 1).  The
roots are located in floating point through the trigonometric form, then
bracketed in exact arithmetic; the bracket count is checked against the
Descartes bound on (0, 1), which certifies that no root was missed.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import mpmath
import numpy as np

from chebbound.chebyshev import cheb_eval_recurrence
from chebbound.decomposition import triple
from chebbound.numerics import (
    DEFAULT_PRECISION,
    GUARD_DIGITS,
    PrecisionError,
    rational_sqrt_bounds,
    to_fraction,
    to_mpf,
)
from chebbound.polynomial import IntPolynomial
from chebbound.roots import descartes_bound, isolate_roots, refine_bracket, squarefree_part

# Published 12-digit values of C_nu/(2nu+1), nu = 1..30.
PUBLISHED_TABLE = {
    1: "0.444444444444", 2: "0.344265186330", 3: "0.330166016890",
    4: "0.325185126688", 5: "0.322817680242", 6: "0.321499599981",
    7: "0.320688247098", 8: "0.320152568605", 9: "0.319780050865",
    10: "0.319510389628", 11: "0.319308836395", 12: "0.319154197729",
    13: "0.319032940515", 14: "0.318936089320", 15: "0.318857498690",
    16: "0.318792844850", 17: "0.318739013405", 18: "0.318693714591",
    19: "0.318655234248", 20: "0.318622268380", 21: "0.318593810687",
    22: "0.318569074526", 23: "0.318547437753", 24: "0.318528403079",
    25: "0.318511569147", 26: "0.318496609147", 27: "0.318483254782",
    28: "0.318471284130", 29: "0.318460512343", 30: "0.318450784453",
}


def _check_nu(nu: int) -> None:
    if nu < 1:
        raise ValueError(f"nu must be a positive integer, got {nu}")


def _sign(nu: int) -> int:
    return -1 if nu % 2 else 1


def objective(nu: int, t, precision: int = DEFAULT_PRECISION):
    """f(t) = |Q_nu(t^2)| / ((2nu+1)^2 t).

    Exact for int and Fraction arguments.  Other arguments are converted to
    their exact binary value, evaluated exactly and rounded to ``precision``.
    """
    _check_nu(nu)
    exact = isinstance(t, (int, Fraction))
    q = to_fraction(t)
    if q <= 0 or q > 1:
        raise ValueError(f"objective is defined on (0, 1], got t={t}")
    n = 2 * nu + 1
    qpoly = triple(nu).Q
    a, b = q.numerator, q.denominator
    # b^(2d) Q(a^2/b^2) / (n^2 a/b) with d = deg Q, reduced once
    h = qpoly.homogeneous(a * a, b * b)
    val = Fraction(abs(h) * b, n * n * a * b ** (2 * max(qpoly.degree, 0)))
    return val if exact else to_mpf(val, precision)


def objective_direct(nu: int, t, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """f(t) by direct subtraction |(-1)^nu n t - T_n(t)| / (n t)^2 at working precision."""
    _check_nu(nu)
    n = 2 * nu + 1
    with mpmath.workdps(precision):
        t = to_mpf(t, precision) if isinstance(t, Fraction) else mpmath.mpf(t)
        if t <= 0 or t > 1:
            raise ValueError(f"objective is defined on (0, 1], got t={t}")
        tn = cheb_eval_recurrence(n, t, precision)
        return abs(_sign(nu) * n * t - tn) / (n * t) ** 2


@dataclass(frozen=True)
class CriticalPolynomial:
    nu: int
    p: IntPolynomial


@lru_cache(maxsize=None)
def critical_polynomial(nu: int) -> CriticalPolynomial:
    """p(x) = 2x Q_nu'(x) - Q_nu(x), whose roots in (0,1) are the stationary points in x = t^2."""
    _check_nu(nu)
    q = triple(nu).Q
    return CriticalPolynomial(nu, 2 * q.derivative().shift() - q)


@dataclass(frozen=True)
class Candidate:
    """A stationary point of f, or the endpoint t = 1.

    ``x_bracket`` holds the root of the critical polynomial, ``t_bracket``
    its square root; ``values`` are f at the two ends of ``t_bracket``,
    computed exactly.
    """

    x_bracket: tuple[Fraction, Fraction]
    t_bracket: tuple[Fraction, Fraction]
    values: tuple[Fraction, Fraction]

    @property
    def value(self) -> Fraction:
        return max(self.values)


@dataclass(frozen=True)
class SupResult:
    nu: int
    value: mpmath.mpf
    value_exact: Fraction
    maximizer_t: mpmath.mpf
    candidates: tuple[Candidate, ...]
    method: str = "critical-points"
    digits: int = 12
    precision: int = DEFAULT_PRECISION
    root_count: int = 0
    endpoint_is_max: bool = field(default=False)

    @property
    def maximizer(self) -> Candidate:
        return max(self.candidates, key=lambda c: c.value)


def _stationarity_trig(nu: int):
    """h(theta) proportional to d/dt [Q_nu(t^2)/t] at t = cos(theta), theta in (0, pi/2)."""
    n = 2 * nu + 1
    s = _sign(nu)

    def h(theta):
        t = mpmath.cos(theta)
        dt = n * mpmath.sin(n * theta) / mpmath.sin(theta)
        return t * dt - 2 * mpmath.cos(n * theta) + s * n * t

    return h


def approximate_critical_t(nu: int, precision: int = DEFAULT_PRECISION, per_gap: int = 8) -> list:
    """Floating-point locations t in (0, 1) where Q_nu(t^2)/t is stationary."""
    n = 2 * nu + 1
    h = _stationarity_trig(nu)
    roots = []
    with mpmath.workdps(precision):
        half_pi = mpmath.pi / 2
        m = per_gap * n
        thetas = [half_pi * j / m for j in range(1, m)]
        vals = [h(th) for th in thetas]
        for a, b, fa, fb in zip(thetas, thetas[1:], vals, vals[1:]):
            if fa == 0:
                roots.append(a)
            elif fa * fb < 0:
                roots.append(_bracketed_root(h, a, b, fa, fb))
        return sorted(mpmath.cos(th) for th in roots)


def _bracketed_root(h, a, b, fa, fb):
    try:
        r = mpmath.findroot(h, (a, b), solver="anderson")
        if a <= r <= b:
            return r
    except (ValueError, ZeroDivisionError):
        pass
    for _ in range(4 * mpmath.mp.prec):
        mid = (a + b) / 2
        fm = h(mid)
        if fm == 0 or b - a < mpmath.eps * 4:
            return mid
        if (fm < 0) == (fa < 0):
            a, fa = mid, fm
        else:
            b = mid
    return (a + b) / 2


def _candidate(nu: int, xb, tb) -> Candidate:
    vals = tuple(objective(nu, t) if t > 0 else Fraction(0) for t in tb)
    return Candidate((xb[0], xb[1]), (tb[0], tb[1]), vals)


def _certified_candidates(nu: int, digits: int, precision: int) -> tuple[list[Candidate], int]:
    crit = critical_polynomial(nu).p
    bound = descartes_bound(crit, 0, 1)
    if bound == 0:
        return [], 0
    scale_digits = digits + 12
    scale = 10**scale_digits
    halfwidth = 1000
    t_brackets = {}
    for t in approximate_critical_t(nu, precision):
        mid = round(to_fraction(t) * scale)
        lo, hi = Fraction(mid - halfwidth, scale), Fraction(mid + halfwidth, scale)
        if lo <= 0 or hi >= 1:
            continue
        t_brackets[(lo * lo, hi * hi)] = (lo, hi)
    hints = [x for xb in t_brackets for x in xb]
    brackets = isolate_roots(crit, 0, 1, hints=hints)
    target = Fraction(1, 10 ** (digits + GUARD_DIGITS))
    tol = Fraction(1, 10 ** (digits + 4))
    out = []
    sqf = None
    for xb in brackets:
        tb = t_brackets.get(xb)
        cand = _candidate(nu, xb, tb) if tb else None
        width = target
        while cand is None or abs(cand.values[0] - cand.values[1]) > tol:
            # root came from bisection, or its value is not yet pinned down
            if sqf is None:
                sqf = squarefree_part(crit)
            xb = refine_bracket(sqf, xb[0], xb[1], width)
            tb = (rational_sqrt_bounds(xb[0], scale_digits)[0], rational_sqrt_bounds(xb[1], scale_digits)[1])
            cand = _candidate(nu, xb, tb)
            width /= 10**4
            scale_digits += 4
        out.append(cand)
    return out, len(brackets)


@lru_cache(maxsize=512)
def compute_sup(nu: int, digits: int = 12, precision: int = DEFAULT_PRECISION) -> SupResult:
    """C_nu/(2nu+1) from the exact critical-point candidates and the endpoint t = 1."""
    _check_nu(nu)
    if digits > precision - GUARD_DIGITS:
        raise PrecisionError(f"digits={digits} needs precision >= {digits + GUARD_DIGITS}, got {precision}")
    cands, count = _certified_candidates(nu, digits, precision)
    one = Fraction(1)
    endpoint = Candidate((one, one), (one, one), (objective(nu, one),) * 2)
    best = max(cands + [endpoint], key=lambda c: c.value)
    with mpmath.workdps(precision):
        if best is endpoint:
            tmax = mpmath.mpf(1)
        else:
            lo, hi = best.t_bracket
            tmax = to_mpf((lo + hi) / 2, precision)
    return SupResult(
        nu=nu,
        value=to_mpf(best.value, precision),
        value_exact=best.value,
        maximizer_t=tmax,
        candidates=tuple(cands) + (endpoint,),
        digits=digits,
        precision=precision,
        root_count=count,
        endpoint_is_max=best is endpoint,
    )


def restricted_sup(nu: int, lo, hi, digits: int = 12, precision: int = DEFAULT_PRECISION) -> Fraction:
    """Supremum of f over the sub-interval (lo, hi] of (0, 1].

    The maximum is attained at ``hi``, approached at ``lo``, or sits at a
    stationary point inside; a stationary point whose bracket straddles an
    end contributes its bracket values, which can only overestimate.
    """
    lo, hi = to_fraction(lo), to_fraction(hi)
    if not 0 <= lo < hi <= 1:
        raise ValueError("need 0 <= lo < hi <= 1")
    res = compute_sup(nu, digits, precision)
    best = objective(nu, hi)
    if lo > 0:
        best = max(best, objective(nu, lo))
    for c in res.candidates:
        a, b = c.t_bracket
        if b >= lo and a <= hi and not (a == b == 1):
            best = max(best, c.value)
    return best


def sup_table(max_nu: int, digits: int = 12, precision: int = DEFAULT_PRECISION, jobs: int = 1) -> list[SupResult]:
    """compute_sup for nu = 1..max_nu, in nu order whatever ``jobs`` is."""
    nus = range(1, max_nu + 1)
    if jobs <= 1:
        return [compute_sup(nu, digits, precision) for nu in nus]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(compute_sup, nus, [digits] * max_nu, [precision] * max_nu))


def _golden_max(f, a, b, iters: int):
    invphi = (mpmath.sqrt(5) - 1) / 2
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    best = max(fc, fd)
    for _ in range(iters):
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
        best = max(best, fc, fd)
    return best


def grid_oracle(nu: int, points: int = 10_000, refine_iters: int = 60, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """Brute-force lower estimate of the supremum.

    Samples f on a uniform grid of (0, 1] in double precision through the
    trigonometric form, then refines every sampled local maximum by golden
    section on the direct-subtraction form at ``precision``.  Every returned
    value is f at an actual point, so it never exceeds the supremum.
    """
    _check_nu(nu)
    n = 2 * nu + 1
    if points < 4 * n:
        raise ValueError(f"need at least {4 * n} grid points for nu={nu}")
    t = np.arange(1, points + 1, dtype=float) / points
    vals = np.abs(_sign(nu) * n * t - np.cos(n * np.arccos(t))) / (n * t) ** 2
    peaks = [i for i in range(1, points - 1) if vals[i] >= vals[i - 1] and vals[i] >= vals[i + 1]]
    if vals[-1] >= vals[-2]:
        peaks.append(points - 1)

    def f(s):
        return objective_direct(nu, s, precision)

    with mpmath.workdps(precision):
        best = f(mpmath.mpf(1))
        for i in peaks:
            a = mpmath.mpf(i) / points  # grid point i - 1 (1-based numbering)
            b = mpmath.mpf(min(i + 2, points)) / points
            best = max(best, _golden_max(f, a, b, refine_iters))
    return best


def lower_bound_witness(nu: int) -> Fraction:
    """(2 - |T_{2nu+1}(2/(2nu+1))|) / 4, exact; f at t = 2/(2nu+1) is at least this."""
    _check_nu(nu)
    n = 2 * nu + 1
    return (2 - abs(cheb_eval_recurrence(n, Fraction(2, n)))) / 4


def matches_published(nu: int, rendered: str, ulps: int = 1) -> bool:
    """True if ``rendered`` is within ``ulps`` units of the 12th digit of the table entry."""
    ref = Fraction(PUBLISHED_TABLE[nu])
    return abs(Fraction(rendered) - ref) <= Fraction(ulps, 10**12)

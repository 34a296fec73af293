"""Exact real-root isolation for integer polynomials.

Root counts come from Descartes' rule of signs applied after the Moebius map
of the interval onto (0, inf).  The count is an upper bound with the right
parity, and it is exact on intervals that hold at most one root of a
square-free polynomial, which drives the bisection.  When the caller already
knows approximately where the roots are, sign changes at the supplied points
are a lower bound on the count and matching the Descartes bound certifies
that every root has been bracketed.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional

from chebbound.polynomial import IntPolynomial, sign_variations, taylor_shift

Bracket = tuple[Fraction, Fraction]


def _moebius_coeffs(p: IntPolynomial, lo: Fraction, hi: Fraction) -> list[int]:
    """Integer coefficients of ``(1+y)**n * p(lo + (hi-lo)/(1+y))``.

    Roots of ``p`` in the open interval (lo, hi) correspond one to one to the
    positive roots of the result.
    """
    n = p.degree
    width = hi - lo
    d = lo.denominator * width.denominator
    a = lo.numerator * width.denominator
    b = width.numerator * lo.denominator
    # g(w) = d**n p(w/d); then g(a + b z) with z = 1/(1+y)
    g = [c * d ** (n - k) for k, c in enumerate(p.coeffs)]
    g = taylor_shift(g, a)
    bk = 1
    for k in range(len(g)):
        g[k] *= bk
        bk *= b
    g.reverse()
    return taylor_shift(g, 1)


def descartes_bound(p: IntPolynomial, lo, hi) -> int:
    """Upper bound (with correct parity) on the roots of ``p`` in (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    if not lo < hi:
        raise ValueError("need lo < hi")
    if p.degree == 0:
        return 0
    return sign_variations(_moebius_coeffs(p, lo, hi))


def _rational_gcd(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    def trim(a):
        while a and a[-1] == 0:
            a.pop()
        return a

    f, g = trim(list(f)), trim(list(g))
    while g:
        r = list(f)
        while len(r) >= len(g) and r:
            q = r[-1] / g[-1]
            shift = len(r) - len(g)
            for i, c in enumerate(g):
                r[shift + i] -= q * c
            trim(r)
        f, g = g, r
    lead = f[-1]
    return [c / lead for c in f]


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')`` scaled back to a primitive integer polynomial."""
    if p.degree <= 1:
        return p
    f = [Fraction(c) for c in p.coeffs]
    g = _rational_gcd(f, [Fraction(c) for c in p.derivative().coeffs])
    if len(g) == 1:
        return p
    # polynomial division f / g
    quot = [Fraction(0)] * (len(f) - len(g) + 1)
    r = list(f)
    for k in range(len(quot) - 1, -1, -1):
        quot[k] = r[k + len(g) - 1] / g[-1]
        for i, c in enumerate(g):
            r[k + i] -= quot[k] * c
    den = 1
    for c in quot:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in quot]
    content = 0
    for c in ints:
        content = gcd(content, c)
    return IntPolynomial(tuple(c // content for c in ints), p.var)


def _bisect_isolate(p: IntPolynomial, lo: Fraction, hi: Fraction, out: list[Bracket], depth: int):
    v = descartes_bound(p, lo, hi)
    if v == 0:
        return
    if v == 1:
        out.append((lo, hi))
        return
    if depth > 4000:
        raise RuntimeError("root isolation did not converge")
    mid = (lo + hi) / 2
    _bisect_isolate(p, lo, mid, out, depth + 1)
    if p.sign_at(mid) == 0:
        out.append((mid, mid))
    _bisect_isolate(p, mid, hi, out, depth + 1)


def isolate_roots(
    p: IntPolynomial,
    lo=0,
    hi=1,
    hints: Optional[Iterable[Fraction]] = None,
) -> list[Bracket]:
    """Disjoint brackets, one per distinct real root of ``p`` in the open interval (lo, hi).

    A bracket ``(a, b)`` with ``a < b`` contains exactly one root in its
    interior; ``(r, r)`` marks an exact rational root.  With ``hints`` (points
    inside the interval, ideally interleaving the roots) the brackets are the
    sign-change intervals between consecutive hints, accepted only if their
    number equals the Descartes bound.  Otherwise the interval is bisected.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    bound = descartes_bound(p, lo, hi)
    if bound == 0:
        return []
    if hints is not None:
        points = sorted({Fraction(h) for h in hints if lo < Fraction(h) < hi})
        found = _sign_change_brackets(p, points)
        if len(found) == bound:
            return found
    q = squarefree_part(p)
    out: list[Bracket] = []
    _bisect_isolate(q, lo, hi, out, 0)
    return out


def _sign_change_brackets(p: IntPolynomial, points: list[Fraction]) -> list[Bracket]:
    found: list[Bracket] = []
    prev_pt, prev_sign = None, 0
    for pt in points:
        s = p.sign_at(pt)
        if s == 0:
            found.append((pt, pt))
        elif prev_sign and s != prev_sign:
            found.append((prev_pt, pt))
        if s:
            prev_pt, prev_sign = pt, s
        else:
            prev_pt, prev_sign = None, 0
    return found


def refine_bracket(p: IntPolynomial, a: Fraction, b: Fraction, width: Fraction) -> Bracket:
    """Shrink an isolating bracket of ``p`` by exact bisection until ``b - a <= width``.

    ``p`` must be the polynomial the bracket was isolated for (the square-free
    part, when :func:`isolate_roots` had to bisect).
    """
    a, b = Fraction(a), Fraction(b)
    if a == b:
        return a, b
    sa, sb = p.sign_at(a), p.sign_at(b)
    while b - a > width:
        mid = (a + b) / 2
        sm = p.sign_at(mid)
        if sm == 0:
            return mid, mid
        if sa and sb:
            if sm == sa:
                a, sa = mid, sm
            else:
                b, sb = mid, sm
        elif descartes_bound(p, a, mid) % 2 == 1:
            # an endpoint is itself a root; fall back on exact counting
            b, sb = mid, sm
        else:
            a, sa = mid, sm
    return a, b

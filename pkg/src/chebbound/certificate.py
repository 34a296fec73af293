"""Numeric certificate for the bounds 1/4 <= C_nu/(2nu+1) <= 4/9.

For nu >= 31 the interval (0, 1] is split at t = alpha/(2nu+1).  On the
left piece the ratio is bounded by u1(nu) alpha + u2(nu), where u1 and u2
are explicit rational functions of nu depending on a parameter beta > 1; on
the right piece by 1/alpha + 1/alpha^2.  With beta = 5/2 both u's decrease
in nu, so nu = 31 is the worst case and minimizing the envelope

    U(alpha) = max{u1(31) alpha + u2(31), 1/alpha + 1/alpha^2}

over alpha > 1 gives a uniform bound.  The cases nu <= 30 are covered by
direct computation.  Everything that can be is checked in exact rational
arithmetic; comparisons against irrationals are squared first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import mpmath

from chebbound.numerics import DEFAULT_PRECISION, round_decimal, sqrt_ext, to_fraction, to_mpf
from chebbound.supremum import (
    PUBLISHED_TABLE,
    compute_sup,
    lower_bound_witness,
    matches_published,
    restricted_sup,
    sup_table,
)

BETA = Fraction(5, 2)
FIRST_NU = 31

# Reference constants of the nu = 31, beta = 5/2 certificate.
U1_AT_31 = Fraction(2344592, 31255875)
U2_AT_31 = Fraction(6076, 33075)
U1_LIMIT = Fraction(22, 375)
U2_LIMIT = Fraction(9, 50)
ALPHA_STAR_12 = "3.142703993650"
U_STAR_12 = "0.419446860530"
LEFT_END_BOUND = Fraction(315, 119)
UPPER = Fraction(4, 9)
LOWER = Fraction(1, 4)


class InfeasibleParameters(ValueError):
    """alpha lies outside [(2nu+1)/(2 floor(nu/beta)+1), (2nu+1)/sqrt 2]."""


def _beta(beta) -> Fraction:
    beta = Fraction(beta)
    if beta <= 1:
        raise ValueError(f"beta must exceed 1, got {beta}")
    return beta


def feasible_left(nu: int, beta=BETA) -> Fraction:
    """(2nu+1)/(2 floor(nu/beta) + 1)."""
    m = math.floor(Fraction(nu) / _beta(beta))
    return Fraction(2 * nu + 1, 2 * m + 1)


def feasible_right(nu: int, precision: int = DEFAULT_PRECISION) -> mpmath.mpf:
    """(2nu+1)/sqrt(2), for display; comparisons use 2 alpha^2 <= (2nu+1)^2."""
    with mpmath.workdps(precision):
        return mpmath.mpf(2 * nu + 1) / sqrt_ext(Fraction(2), precision)


def is_feasible(nu: int, alpha, beta=BETA) -> bool:
    a = to_fraction(alpha)
    return a > 1 and feasible_left(nu, beta) <= a and 2 * a * a <= (2 * nu + 1) ** 2


def u_functions(nu: int, beta=BETA) -> tuple[Fraction, Fraction]:
    """Exact (u1(nu), u2(nu)): the alpha coefficient and the additive term of the S1 bound."""
    if nu < 1:
        raise ValueError("nu must be positive")
    b = _beta(beta)
    n = 2 * nu + 1
    u1 = ((12 * b - 8) * nu**3 + (12 * b**3 + 18 * b) * nu**2 + 2 * b**2 * nu) / (3 * b**3 * n**3)
    u2 = (2 * (b - 1) ** 2 * nu**2 + 2 * b * (b - 1) * nu) / (b**2 * n**2)
    return u1, u2


def u_derivatives(nu, beta=BETA) -> tuple[Fraction, Fraction]:
    """d/dnu of u1 and u2 in closed form, at a rational nu."""
    b = _beta(beta)
    nu = Fraction(nu)
    n = 2 * nu + 1
    d1 = (-24 * (b**3 + 1) * nu**2 + b * (24 * b**2 - 8 * b + 36) * nu + 2 * b**2) / (3 * b**3 * n**4)
    d2 = (-4 * (b - 1) * nu + 2 * b * (b - 1)) / (b**2 * n**3)
    return d1, d2


def u_limits(beta=BETA) -> tuple[Fraction, Fraction]:
    """Limits of u1 and u2 as nu -> infinity."""
    b = _beta(beta)
    return (3 * b - 2) / (6 * b**3), (b - 1) ** 2 / (2 * b**2)


def s1_bound_general(nu: int, alpha, beta=BETA, check: bool = True):
    """Upper bound u1(nu) alpha + u2(nu) on the supremum over (0, alpha/(2nu+1)].

    Exact for rational ``alpha``; an mpf ``alpha`` gives an mpf.
    """
    if check and not is_feasible(nu, alpha, beta):
        raise InfeasibleParameters(f"alpha={alpha} is infeasible for nu={nu}, beta={beta}")
    u1, u2 = u_functions(nu, beta)
    if isinstance(alpha, (int, Fraction)):
        return u1 * alpha + u2
    return to_mpf(u1 * to_fraction(alpha) + u2)


def s2_bound(alpha):
    """Upper bound 1/alpha + 1/alpha^2 on the supremum over (alpha/(2nu+1), 1]."""
    if alpha <= 1:
        raise ValueError(f"alpha must exceed 1, got {alpha}")
    return 1 / alpha + 1 / alpha**2


def envelope_U(alpha, a: Fraction = U1_AT_31, b: Fraction = U2_AT_31):
    """max{a alpha + b, 1/alpha + 1/alpha^2}."""
    if alpha <= 1:
        raise ValueError(f"alpha must exceed 1, got {alpha}")
    if isinstance(alpha, (int, Fraction)):
        return max(a * alpha + b, s2_bound(Fraction(alpha)))
    return max(to_mpf(a) * alpha + to_mpf(b), s2_bound(alpha))


def crossing_cubic(alpha, a: Fraction = U1_AT_31, b: Fraction = U2_AT_31):
    """a alpha^3 + b alpha^2 - alpha - 1; its root in (1, inf) is where the branches of U meet."""
    return a * alpha**3 + b * alpha**2 - alpha - 1


@lru_cache(maxsize=None)
def crossing_bracket(digits: int = 40, a: Fraction = U1_AT_31, b: Fraction = U2_AT_31) -> tuple[Fraction, Fraction]:
    """Rational bracket [lo, hi] of width <= 10^-digits around the minimizer of U.

    The increasing branch minus the decreasing one has the sign of the
    cubic, which is negative at 1 and increasing beyond, so exact-sign
    bisection isolates the unique crossing.
    """
    lo, hi = Fraction(1), Fraction(2)
    if crossing_cubic(lo, a, b) >= 0:
        raise ValueError("branches do not cross in (1, inf)")
    while crossing_cubic(hi, a, b) <= 0:
        hi *= 2
    width = Fraction(1, 10**digits)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if crossing_cubic(mid, a, b) <= 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def minimize_U(precision: int = DEFAULT_PRECISION) -> tuple[mpmath.mpf, mpmath.mpf]:
    """(alpha*, U(alpha*)) with alpha* the crossing of the two branches of U."""
    lo, hi = crossing_bracket()
    with mpmath.workdps(precision):
        alpha = to_mpf((lo + hi) / 2, precision)
        return alpha, envelope_U(alpha)


def u_star_upper() -> Fraction:
    """Rigorous rational upper bound on U(alpha*) from the crossing bracket."""
    lo, hi = crossing_bracket()
    # increasing branch at hi and decreasing branch at lo both dominate U(alpha*)
    return max(U1_AT_31 * hi + U2_AT_31, s2_bound(lo))


def check_feasibility_remark(nu_from: int, nu_to: int) -> bool:
    """alpha* lies strictly inside the beta = 5/2 feasible interval for every nu in [nu_from, nu_to].

    Also checks the uniform left bound (10nu+5)/(4nu-5) <= 315/119 and
    (2nu+1)/sqrt 2 >= 63/sqrt 2.
    """
    if nu_from < FIRST_NU or nu_to < nu_from:
        raise ValueError(f"range must start at nu >= {FIRST_NU}")
    a_lo, a_hi = crossing_bracket()
    for nu in range(nu_from, nu_to + 1):
        left = feasible_left(nu)
        mid = Fraction(10 * nu + 5, 4 * nu - 5)
        n = 2 * nu + 1
        if not (left < mid <= LEFT_END_BOUND):
            return False
        if n < 63:
            return False
        if not (left < a_lo and 2 * a_hi * a_hi < n * n):
            return False
    return True


def check_monotone_decrease(nu_from: int, nu_to: int, beta=BETA) -> bool:
    """u1(nu+1) < u1(nu) and u2(nu+1) < u2(nu) for every nu in [nu_from, nu_to)."""
    if nu_from < FIRST_NU or nu_to <= nu_from:
        raise ValueError(f"need {FIRST_NU} <= nu_from < nu_to")
    prev = u_functions(nu_from, beta)
    for nu in range(nu_from + 1, nu_to + 1):
        cur = u_functions(nu, beta)
        if not (cur[0] < prev[0] and cur[1] < prev[1]):
            return False
        prev = cur
    return True


def check_envelope(nu_from: int, nu_to: int) -> bool:
    """max{S1 bound, S2 bound} at alpha* stays below 4/9 for every nu in range."""
    a_lo, a_hi = crossing_bracket()
    s2 = s2_bound(a_lo)
    if s2 >= UPPER:
        return False
    for nu in range(nu_from, nu_to + 1):
        if s1_bound_general(nu, a_hi, check=False) >= UPPER:
            return False
    return True


def check_split_domination(nus=(31, 40, 50), alphas=None, precision: int = DEFAULT_PRECISION) -> bool:
    """Computed suprema on both pieces of the split respect their bounds."""
    alpha_star, _ = minimize_U(precision)
    if alphas is None:
        alphas = (Fraction(14, 5), alpha_star, Fraction(7, 2))
    slack = Fraction(1, 10**20)
    for nu in nus:
        n = 2 * nu + 1
        for alpha in alphas:
            a = to_fraction(alpha)
            cut = a / n
            left = restricted_sup(nu, 0, cut)
            right = restricted_sup(nu, cut, 1)
            if left > to_fraction(s1_bound_general(nu, a)) + slack:
                return False
            if right > s2_bound(a) + slack:
                return False
    return True


@dataclass
class BoundCertificate:
    nu_max: int
    u1_at_31: Fraction
    u2_at_31: Fraction
    alpha_star: mpmath.mpf
    U_at_alpha_star: mpmath.mpf
    feasible_interval: tuple[Fraction, mpmath.mpf]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def verify_theorem(
    nu_max: int,
    sup_cap: int = 200,
    digits: int = 12,
    precision: int = DEFAULT_PRECISION,
    jobs: int = 1,
) -> BoundCertificate:
    """Run every check of the certificate up to ``nu_max``.

    Suprema are computed directly for nu <= min(nu_max, sup_cap); the exact
    rational checks run over 31..nu_max.
    """
    if nu_max < FIRST_NU:
        raise ValueError(f"nu_max must be at least {FIRST_NU}")
    checks: dict[str, bool] = {}

    results = sup_table(min(nu_max, sup_cap), digits, precision, jobs)
    checks["sup_in_bounds"] = all(LOWER <= r.value_exact <= UPPER for r in results)
    checks["lower_bound"] = all(LOWER <= lower_bound_witness(r.nu) <= r.value_exact for r in results)
    checks["published_table_match"] = all(
        matches_published(r.nu, round_decimal(r.value_exact, 12)) for r in results if r.nu in PUBLISHED_TABLE
    ) and len(results) >= len(PUBLISHED_TABLE)

    u1, u2 = u_functions(FIRST_NU, BETA)
    checks["u1_exact"] = u1 == U1_AT_31
    checks["u2_exact"] = u2 == U2_AT_31
    checks["u_limits_exact"] = u_limits(BETA) == (U1_LIMIT, U2_LIMIT)

    alpha_star, u_star = minimize_U(precision)
    checks["alpha_star_12"] = round_decimal(alpha_star, 12, precision) == ALPHA_STAR_12
    checks["U_below_4_9"] = u_star_upper() < UPPER
    checks["feasibility"] = check_feasibility_remark(FIRST_NU, nu_max)
    checks["monotone_u"] = check_monotone_decrease(FIRST_NU, nu_max, BETA)
    checks["envelope_below_4_9"] = check_envelope(FIRST_NU, nu_max)
    checks["split_domination"] = check_split_domination(precision=precision)

    return BoundCertificate(
        nu_max=nu_max,
        u1_at_31=u1,
        u2_at_31=u2,
        alpha_star=alpha_star,
        U_at_alpha_star=u_star,
        feasible_interval=(feasible_left(FIRST_NU), feasible_right(FIRST_NU, precision)),
        checks=checks,
    )

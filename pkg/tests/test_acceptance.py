"""Acceptance criteria, one test each.

Every test prints a single ``[criterion N] PASS|FAIL ...`` line to the
terminal (captured output is bypassed so the lines show up in the log).
"""

import csv
import io
import random
import time
from fractions import Fraction

import mpmath
import pytest

from chebbound.certificate import (
    LEFT_END_BOUND,
    U1_AT_31,
    U2_AT_31,
    crossing_bracket,
    crossing_cubic,
    feasible_left,
    minimize_U,
    u_functions,
    u_limits,
    u_star_upper,
)
from chebbound.chebyshev import cheb_eval_all, cheb_eval_clenshaw, cheb_eval_trig, odd_cheb_bound
from chebbound.cli import main
from chebbound.decomposition import triple, verify_even_identity, verify_odd_identity, verify_r_recursion
from chebbound.numerics import round_decimal, to_fraction
from chebbound.polynomial import IntPolynomial
from chebbound.supremum import PUBLISHED_TABLE, compute_sup, critical_polynomial, grid_oracle, lower_bound_witness


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def test_criterion_01_table_reproduction(capsys, report):
    start = time.perf_counter()
    code = main(["table", "--max-nu", "30", "--digits", "12", "--format", "csv"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    rows = list(csv.DictReader(io.StringIO(out)))
    bad = [
        r["nu"]
        for r in rows
        if abs(Fraction(r["value"]) - Fraction(PUBLISHED_TABLE[int(r["nu"])])) > Fraction(1, 10**12)
    ]
    exact = sum(r["value"] == PUBLISHED_TABLE[int(r["nu"])] for r in rows)
    ok = code == 0 and len(rows) == 30 and not bad and elapsed < 60
    report(1, ok, f"rows={len(rows)} exact={exact}/30 off={bad} time={elapsed:.1f}s")


def test_criterion_02_nu1_exact(report):
    r = compute_sup(1)
    ok = (
        r.value_exact == Fraction(4, 9)
        and r.endpoint_is_max
        and [c.t_bracket for c in r.candidates] == [(Fraction(1), Fraction(1))]
    )
    report(2, ok, f"value={r.value_exact} candidates={[c.t_bracket for c in r.candidates]}")


def test_criterion_03_nu2_closed_form(report):
    r = compute_sup(2)
    with mpmath.workdps(40):
        closed = mpmath.mpf(8) / 15 * mpmath.sqrt(mpmath.mpf(5) / 12)
        err = abs(r.value - closed)
    x = Fraction(5, 12)
    brackets = [c.x_bracket for c in r.candidates]
    contains = any(a <= x <= b for a, b in brackets)
    crit = IntPolynomial((0, -20, 48))  # 4x(12x - 5)
    p = critical_polynomial(2).p
    proportional = p.coeffs[0] == 0 and p.coeffs[1] * 48 == p.coeffs[2] * -20 and p.degree == 2
    ok = err <= mpmath.mpf(10) ** -12 and contains and proportional and crit(x) == 0
    widths = [float(b - a) for a, b in brackets]
    report(3, ok, f"err={mpmath.nstr(err, 3)} contains 5/12={contains} bracket widths={widths}")


def test_criterion_04_bound_sweep(report):
    start = time.perf_counter()
    lo, hi = Fraction(1, 4), Fraction(4, 9)
    bad = []
    for nu in range(1, 201):
        s = compute_sup(nu).value_exact
        w = lower_bound_witness(nu)
        if not (lo <= s <= hi and lo <= w <= s):
            bad.append(nu)
    elapsed = time.perf_counter() - start
    report(4, not bad and elapsed < 600, f"violations={bad} time={elapsed:.1f}s")


def test_criterion_05_certificate_exactness(report):
    u1, u2 = u_functions(31)
    ok = (
        u1 == Fraction(2344592, 31255875)
        and u2 == Fraction(6076, 33075)
        and u1 == U1_AT_31
        and u2 == U2_AT_31
        and u_limits() == (Fraction(22, 375), Fraction(9, 50))
    )
    report(5, ok, f"u1={u1} u2={u2} limits={u_limits()}")


def test_criterion_06_minimizer(report):
    alpha, u = minimize_U()
    lo, hi = crossing_bracket()
    residual = max(abs(crossing_cubic(lo)), abs(crossing_cubic(hi)), abs(crossing_cubic(to_fraction(alpha))))
    a12 = round_decimal(alpha, 12, 40)
    u_err = abs(to_fraction(u) - Fraction("0.419446860530"))
    below = u_star_upper() < Fraction(4, 9)
    ok = a12 == "3.142703993650" and residual <= Fraction(1, 10**20) and u_err <= Fraction(5, 10**12) and below
    report(6, ok, f"alpha*={a12} residual={float(residual):.1e} U*={round_decimal(u, 12, 40)} <4/9={below}")


def _random_rationals(seed, count):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        den = rng.randint(1, 10**6)
        out.append(Fraction(rng.randint(-den, den), den))
    return out


def test_criterion_07_identity_suite(report):
    points = _random_rationals(7, 100)
    bad = []
    for k in range(61):
        for t in points:
            if not verify_even_identity(k, t) or (k >= 1 and not verify_odd_identity(k, t)):
                bad.append(("identity", k, t))
                break
    for k in range(1, 61):
        for t in points[:25]:
            if not verify_r_recursion(k, t):
                bad.append(("R recursion", k, t))
                break
    r0 = triple(0).R == IntPolynomial((0, -4))
    report(7, not bad and r0, f"failures={bad[:3]} R0=-4x:{r0}")


def test_criterion_08_evaluator_agreement(report):
    rng = random.Random(8)
    tol = mpmath.mpf(10) ** -13
    worst = mpmath.mpf(0)
    with mpmath.workdps(40):
        for _ in range(1000):
            t = mpmath.mpf(rng.uniform(-1, 1))
            rec = cheb_eval_all(100, t, 40)
            for k in range(101):
                trig = cheb_eval_trig(k, t, 40)
                cl = cheb_eval_clenshaw(k, t, 40)
                scale = max(1, abs(rec[k]))
                worst = max(worst, abs(rec[k] - trig) / scale, abs(rec[k] - cl) / scale, abs(trig - cl) / scale)
    report(8, worst <= tol, f"max scaled difference={mpmath.nstr(worst, 3)}")


def test_criterion_09_odd_bound(report):
    n_grid = 10**4
    slack = Fraction(1, 10**20)
    bad = []
    for i in range(n_grid + 1):
        t = Fraction(i, n_grid)
        vals = cheb_eval_all(101, t)
        for k in range(51):
            if abs(vals[2 * k + 1]) > odd_cheb_bound(k, t) + slack:
                bad.append((k, t))
    report(9, not bad, f"grid={n_grid + 1} points k<=50 violations={bad[:3]}")


def test_criterion_10_oracle_equivalence(report):
    worst = Fraction(0)
    for nu in range(1, 31):
        diff = abs(compute_sup(nu).value_exact - to_fraction(grid_oracle(nu, 10**4)))
        worst = max(worst, diff)
    report(10, worst <= Fraction(1, 10**10), f"max |sup - grid| = {float(worst):.2e}")


def test_criterion_11_monotone_u(report):
    bad = []
    prev = u_functions(31)
    for nu in range(32, 10**4 + 1):
        cur = u_functions(nu)
        if not (cur[0] < prev[0] and cur[1] < prev[1]):
            bad.append(nu)
        prev = cur
    report(11, not bad, f"nu=31..10000 violations={bad[:5]}")


def test_criterion_12_feasibility(report):
    lo, hi = crossing_bracket()
    bad = []
    for nu in range(31, 10**4 + 1):
        n = 2 * nu + 1
        left = Fraction(n, 2 * (2 * nu // 5) + 1)
        # right end n/sqrt 2 compared by squaring
        if not (left == feasible_left(nu) and left < lo and 2 * hi * hi < n * n):
            bad.append(nu)
    with mpmath.workdps(40):
        right31 = round_decimal(63 / mpmath.sqrt(2), 12, 40)
    left_bound = round_decimal(LEFT_END_BOUND, 12)
    ends = left_bound == "2.647058823529" and right31 == "44.547727214752"
    uniform = all(feasible_left(nu) <= LEFT_END_BOUND for nu in range(31, 10**4 + 1))
    report(12, not bad and ends and uniform, f"violations={bad[:5]} 315/119={left_bound} 63/sqrt2={right31}")

import random
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from chebbound.numerics import PrecisionError, round_decimal, to_fraction
from chebbound.polynomial import IntPolynomial
from chebbound.roots import isolate_roots
from chebbound.supremum import (
    PUBLISHED_TABLE,
    compute_sup,
    critical_polynomial,
    grid_oracle,
    lower_bound_witness,
    objective,
    objective_direct,
    restricted_sup,
    sup_table,
)


def test_objective_examples():
    assert objective(1, 1) == Fraction(4, 9)
    assert objective(2, 1) == Fraction(4, 25)
    for t in (Fraction(1, 10), Fraction(1, 1000), Fraction(1, 10**9)):
        assert objective(1, t) == Fraction(4, 9) * t
    with pytest.raises(ValueError):
        objective(1, 0)
    with pytest.raises(ValueError):
        objective(1, Fraction(3, 2))
    with pytest.raises(ValueError):
        objective(0, Fraction(1, 2))


def test_objective_direct_examples():
    with mpmath.workdps(40):
        assert abs(objective_direct(1, Fraction(1, 2)) - mpmath.mpf(2) / 9) < mpmath.mpf(10) ** -38
        assert abs(objective_direct(2, 1) - mpmath.mpf("0.16")) < mpmath.mpf(10) ** -38
        t = mpmath.mpf("0.3")
        a, b = objective(5, t), objective_direct(5, t)
        assert abs(a - b) / a <= mpmath.mpf(10) ** -25


def test_objective_forms_agree_random():
    rng = random.Random(3)
    tol = mpmath.mpf(10) ** -28
    with mpmath.workdps(40):
        for nu in range(1, 31):
            for _ in range(1000):
                t = mpmath.mpf(rng.random()) or mpmath.mpf(1)
                a, b = objective(nu, t), objective_direct(nu, t)
                assert abs(a - b) <= tol * abs(a), (nu, t)


def test_critical_polynomial_examples():
    assert critical_polynomial(1).p == IntPolynomial((0, 4))
    p2 = critical_polynomial(2).p
    assert p2 == IntPolynomial((0, -20, 48))
    assert p2 == IntPolynomial((0, 4)) * IntPolynomial((-5, 12))
    for nu in range(1, 40):
        assert critical_polynomial(nu).p[0] == 0


def test_critical_root_count_against_sympy():
    sympy = pytest.importorskip("sympy")
    x = sympy.symbols("x")
    for nu in (5, 12, 30):
        p = critical_polynomial(nu).p
        poly = sympy.Poly(list(reversed(p.coeffs)), x)
        expected = poly.count_roots(0, 1) - (1 if p(0) == 0 else 0) - (1 if p(1) == 0 else 0)
        assert len(isolate_roots(p, 0, 1)) == expected


def test_critical_root_count_against_slope_changes():
    # sign changes of the slope of Q_30(t^2)/t on a dense grid
    nu, n = 30, 61
    t = np.linspace(1e-4, 1 - 1e-9, 400_000)
    g = (np.cos(n * np.arccos(t)) - n * t) / t**2
    slope = np.sign(np.diff(g))
    changes = int(np.count_nonzero(slope[1:] != slope[:-1]))
    assert len(isolate_roots(critical_polynomial(nu).p, 0, 1)) == changes == compute_sup(nu).root_count


def test_compute_sup_nu1_exact_endpoint():
    r = compute_sup(1)
    assert r.value_exact == Fraction(4, 9)
    assert r.endpoint_is_max and r.maximizer_t == 1
    assert r.root_count == 0 and len(r.candidates) == 1
    assert round_decimal(r.value_exact, 12) == "0.444444444444"


def test_compute_sup_nu2_closed_form():
    r = compute_sup(2)
    with mpmath.workdps(50):
        closed = mpmath.mpf(8) / 15 * mpmath.sqrt(mpmath.mpf(5) / 12)
        assert abs(r.value - closed) <= mpmath.mpf(10) ** -12
        assert abs(r.maximizer_t - mpmath.sqrt(mpmath.mpf(5) / 12)) <= mpmath.mpf(10) ** -20
    a, b = r.maximizer.x_bracket
    assert a < Fraction(5, 12) < b
    assert round_decimal(r.value_exact, 12) == "0.344265186330"


def test_compute_sup_nu30():
    assert round_decimal(compute_sup(30).value_exact, 12) == "0.318450784453"


def test_sup_result_invariants():
    for nu in (1, 3, 7, 19):
        r = compute_sup(nu)
        assert r.value > 0 and 0 < r.maximizer_t <= 1
        assert r.value_exact == max(c.value for c in r.candidates)
        assert r.candidates[-1].t_bracket == (1, 1)
        assert r.root_count == len(r.candidates) - 1
        for c in r.candidates[:-1]:
            lo, hi = c.t_bracket
            assert lo * lo == c.x_bracket[0] and hi * hi == c.x_bracket[1]
            assert critical_polynomial(nu).p.sign_at(c.x_bracket[0]) != critical_polynomial(nu).p.sign_at(c.x_bracket[1])


def test_precision_guard():
    with pytest.raises(PrecisionError):
        compute_sup(3, 35, 40)


def test_table_values_decrease():
    vals = [compute_sup(nu).value_exact for nu in range(1, 31)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_grid_oracle_examples():
    assert abs(to_fraction(grid_oracle(1, 1000)) - Fraction(4, 9)) < Fraction(1, 10**35)
    assert abs(grid_oracle(2, 1000) - compute_sup(2).value) <= 1e-10
    assert abs(grid_oracle(10, 10_000) - compute_sup(10).value) <= 1e-10
    with pytest.raises(ValueError):
        grid_oracle(10, 50)


def test_grid_oracle_is_a_lower_bound():
    for nu in (3, 8, 15):
        assert to_fraction(grid_oracle(nu, 2000)) <= compute_sup(nu).value_exact + Fraction(1, 10**30)


def test_lower_bound_witness_examples():
    assert lower_bound_witness(1) == Fraction(8, 27)
    sympy = pytest.importorskip("sympy")
    t5 = sympy.chebyshevt(5, sympy.Rational(2, 5))
    expected = (2 - abs(t5)) / 4
    assert lower_bound_witness(2) == Fraction(int(expected.p), int(expected.q)) == Fraction(872, 3125)
    for nu in range(1, 60):
        w = lower_bound_witness(nu)
        assert Fraction(1, 4) <= w <= objective(nu, Fraction(2, 2 * nu + 1))


def test_restricted_sup_covers_whole_interval():
    for nu in (2, 9):
        r = compute_sup(nu)
        assert restricted_sup(nu, 0, 1) == r.value_exact
        cut = Fraction(1, 2)
        assert max(restricted_sup(nu, 0, cut), restricted_sup(nu, cut, 1)) == r.value_exact


def test_determinism_and_parallel_order():
    compute_sup.cache_clear()
    first = [compute_sup(nu) for nu in range(1, 8)]
    compute_sup.cache_clear()
    second = sup_table(7)
    parallel = sup_table(7, jobs=2)
    for a, b, c in zip(first, second, parallel):
        assert a.value_exact == b.value_exact == c.value_exact
        assert a.candidates == b.candidates == c.candidates
    assert [r.nu for r in parallel] == list(range(1, 8))


def test_published_table_complete():
    assert sorted(PUBLISHED_TABLE) == list(range(1, 31))

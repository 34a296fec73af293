"""The polynomials P_k, Q_k, R_k that split T_{2k} and T_{2k+1} around t = 0.

In the variable x = t**2:

    T_{2k}(t)   = (-1)**k + P_k(x)
    T_{2k-1}(t) = (-1)**(k-1) (2k-1) t + t Q_{k-1}(x)
    R_k(x)      = 2 P_k(x) - 4 (-1)**k (2k+1) x

P_k and Q_k are generated by their coupled recursion from P_0 = Q_0 = 0.
The ``verify_*`` functions check the identities and inequalities used in
the upper-bound argument in exact rational arithmetic, so a True result is
a proof at that sample point.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from chebbound.chebyshev import cheb_eval_recurrence
from chebbound.polynomial import IntPolynomial


@dataclass(frozen=True)
class DecompTriple:
    k: int
    P: IntPolynomial
    Q: IntPolynomial
    R: IntPolynomial


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


_X = IntPolynomial((0, 1), "x")
_cache: list[DecompTriple] = []
_lock = threading.Lock()


def _r_from_p(k: int, p: IntPolynomial) -> IntPolynomial:
    return 2 * p - (4 * _sign(k) * (2 * k + 1)) * _X


def build_decomposition(k_max: int) -> list[DecompTriple]:
    """Triples (P_k, Q_k, R_k) for k = 0..k_max, all with exact integer coefficients."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    with _lock:
        if not _cache:
            zero = IntPolynomial.zero("x")
            _cache.append(DecompTriple(0, zero, zero, _r_from_p(0, zero)))
        while len(_cache) <= k_max:
            k = len(_cache)
            prev = _cache[-1]
            s = _sign(k - 1) * (2 * k - 1)
            p = -prev.P + (2 * s) * _X + 2 * prev.Q.shift()
            q = (4 * _X - 1) * prev.Q - 2 * prev.P + (4 * s) * _X
            _cache.append(DecompTriple(k, p, q, _r_from_p(k, p)))
        return _cache[: k_max + 1]


def triple(k: int) -> DecompTriple:
    return build_decomposition(k)[k]


def verify_even_identity(k: int, t) -> bool:
    """Exact check of T_{2k}(t) = (-1)^k + P_k(t^2)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    t = Fraction(t)
    return cheb_eval_recurrence(2 * k, t) == _sign(k) + triple(k).P(t * t)


def verify_odd_identity(k: int, t) -> bool:
    """Exact check of T_{2k-1}(t) = (-1)^(k-1) (2k-1) t + t Q_{k-1}(t^2)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    t = Fraction(t)
    rhs = _sign(k - 1) * (2 * k - 1) * t + t * triple(k - 1).Q(t * t)
    return cheb_eval_recurrence(2 * k - 1, t) == rhs


def verify_r_recursion(k: int, t) -> bool:
    """Exact check of the R recursion and of Q_k written through R_{k-1}.

    R_k(t^2) = -R_{k-1}(t^2) + 4t T_{2k-1}(t) + (-1)^(k-1) 8t^2
    Q_k(t^2) = (4t^2 - 1) Q_{k-1}(t^2) - R_{k-1}(t^2)
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    t = Fraction(t)
    x = t * t
    cur, prev = triple(k), triple(k - 1)
    r_prev = prev.R(x)
    r_ok = cur.R(x) == -r_prev + 4 * t * cheb_eval_recurrence(2 * k - 1, t) + _sign(k - 1) * 8 * x
    q_ok = cur.Q(x) == (4 * x - 1) * prev.Q(x) - r_prev
    return r_ok and q_ok


def _min_sum(k: int, t: Fraction, weights) -> Fraction:
    return sum((w * min(Fraction(1), (2 * j - 1) * t) for j, w in weights), Fraction(0))


def q_bound(k: int, t) -> Fraction:
    """4k^2 t + 4 * sum_{j=1}^{k-1} (k-j) min{1, (2j-1)t}."""
    t = Fraction(t)
    return 4 * k * k * t + 4 * _min_sum(k, t, ((j, k - j) for j in range(1, k)))


def r_bound(k: int, t) -> Fraction:
    """4(2k+1) t + 4 * sum_{j=1}^{k} min{1, (2j-1)t}."""
    t = Fraction(t)
    return 4 * (2 * k + 1) * t + 4 * _min_sum(k, t, ((j, 1) for j in range(1, k + 1)))


def verify_q_inequality(k: int, t) -> bool:
    """Exact check of |Q_k(t^2)|/t <= q_bound(k, t) for 0 < t <= 1/sqrt(2)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    t = Fraction(t)
    if t <= 0 or 2 * t * t > 1:
        raise ValueError(f"need 0 < t <= 1/sqrt(2), got {t}")
    return abs(triple(k).Q(t * t)) / t <= q_bound(k, t)


def verify_r_inequality(k: int, t) -> bool:
    """Exact check of |R_k(t^2)|/t <= r_bound(k, t) for 0 < t <= 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    t = Fraction(t)
    if t <= 0 or t > 1:
        raise ValueError(f"need 0 < t <= 1, got {t}")
    return abs(triple(k).R(t * t)) / t <= r_bound(k, t)

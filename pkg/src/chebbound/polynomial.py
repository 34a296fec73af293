"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath
from gmpy2 import mpz


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial ``sum(coeffs[i] * var**i)`` over the integers.

    ``coeffs`` is stored trimmed, so the zero polynomial has an empty tuple
    and any other polynomial has a nonzero last entry.  ``var`` is a label
    only ("t" or "x"); arithmetic between different labels is rejected.
    """

    coeffs: tuple[int, ...]
    var: str = "x"

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1, var: str = "x") -> IntPolynomial:
        return cls((0,) * degree + (coeff,), var)

    @classmethod
    def zero(cls, var: str = "x") -> IntPolynomial:
        return cls((), var)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: IntPolynomial) -> None:
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,), self.var)
        self._check(other)
        n = max(len(self), len(other))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(n)), self.var)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-a for a in self.coeffs), self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * a for a in self.coeffs), self.var)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero(self.var)
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out), self.var)

    __rmul__ = __mul__

    def shift(self, m: int = 1) -> IntPolynomial:
        """Multiply by ``var**m``."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * m + self.coeffs, self.var)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(tuple(i * a for i, a in enumerate(self.coeffs) if i), self.var)

    def deflate_zero(self) -> tuple[int, IntPolynomial]:
        """Split off the root at zero: returns ``(m, q)`` with ``self == var**m * q``."""
        m = 0
        while m < len(self.coeffs) and self.coeffs[m] == 0:
            m += 1
        return m, IntPolynomial(self.coeffs[m:], self.var)

    def __call__(self, value):
        """Evaluate at ``value``; exact for int and Fraction, Horner for mpf."""
        if isinstance(value, int):
            acc = 0
            for a in reversed(self.coeffs):
                acc = acc * value + a
            return acc
        if isinstance(value, Fraction):
            num = self.homogeneous(value.numerator, value.denominator)
            return Fraction(num, value.denominator ** max(self.degree, 0))
        acc = mpmath.mpf(0)
        for a in reversed(self.coeffs):
            acc = acc * value + a
        return acc

    def homogeneous(self, a: int, b: int) -> int:
        """Integer ``b**deg * p(a/b)``; its sign is the sign of ``p(a/b)`` when ``b > 0``."""
        if self.degree < 0:
            return 0
        a, b = mpz(a), mpz(b)
        acc = mpz(0)
        bpow = mpz(1)
        # Horner in a with the powers of b folded into the coefficients
        for a_i in reversed(self.coeffs):
            acc = acc * a + a_i * bpow
            bpow *= b
        return int(acc)

    def sign_at(self, value: Fraction) -> int:
        value = Fraction(value)
        h = self.homogeneous(value.numerator, value.denominator)
        return (h > 0) - (h < 0)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                terms.append(f"{a}")
            elif i == 1:
                terms.append(f"{a}*{self.var}")
            else:
                terms.append(f"{a}*{self.var}^{i}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")


def sign_variations(seq: Sequence[int]) -> int:
    """Number of sign changes in ``seq``, ignoring zeros."""
    count = 0
    last = 0
    for a in seq:
        if a:
            s = 1 if a > 0 else -1
            if last and s != last:
                count += 1
            last = s
    return count


def taylor_shift(coeffs: Sequence[int], c: int = 1) -> list[int]:
    """Coefficients of ``p(y + c)`` from those of ``p(y)`` (integer ``c``)."""
    a = list(coeffs)
    n = len(a)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            a[j] += c * a[j + 1]
    return a

"""Exact characteristic polynomials and determinants over the rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import RationalMatrix
from .rational import format_rational, to_rational


@dataclass(frozen=True)
class CharPolynomial:
    """Monic ``x^n + a_1 x^(n-1) + ... + a_n``; ``coeffs`` holds ``a_1..a_n``."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(to_rational(c) for c in self.coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "CharPolynomial":
        return cls(len(coeffs), tuple(coeffs))

    def coeff(self, k: int) -> Fraction:
        """a_k, with a_0 = 1."""
        if k == 0:
            return Fraction(1)
        return self.coeffs[k - 1]

    def to_json(self) -> dict:
        return {"degree": self.n, "coeffs": [format_rational(c) for c in self.coeffs]}

    def sort_key(self) -> tuple:
        return (self.n, self.coeffs)

    def __str__(self) -> str:
        out = _monomial(self.n) or "1"
        for k, c in enumerate(self.coeffs, start=1):
            if c:
                out += (" - " if c < 0 else " + ") + _term(abs(c), self.n - k)
        return out


def _monomial(power: int) -> str:
    return "" if power == 0 else "x" if power == 1 else f"x^{power}"


def _term(mag: Fraction, power: int) -> str:
    mono = _monomial(power)
    if not mono:
        return format_rational(mag)
    if mag == 1:
        return mono
    text = format_rational(mag)
    return f"({text}){mono}" if mag.denominator != 1 else f"{text}{mono}"


def char_poly(m: RationalMatrix) -> CharPolynomial:
    """det(xI - m) by Berkowitz's algorithm (no divisions).

    Runs on the integer matrix ``L*m`` (``L`` the lcm of denominators);
    its coefficients are ``L^k a_k``.
    """
    scale = 1
    for row in m.entries:
        for x in row:
            scale = math.lcm(scale, x.denominator)
    ints = [[x.numerator * (scale // x.denominator) for x in row] for row in m.entries]
    coeffs = _berkowitz(ints)
    return CharPolynomial(m.n, tuple(Fraction(c, scale**k) for k, c in enumerate(coeffs, start=1)))


def _berkowitz(a: list[list[int]]) -> list[int]:
    n = len(a)
    # Coefficients of the trailing principal block, highest degree first.
    poly = [1]
    for i in range(n - 1, -1, -1):
        size = n - i - 1
        row = a[i][i + 1 :]
        block = [r[i + 1 :] for r in a[i + 1 :]]
        # First column of the Toeplitz factor: 1, -a, -R C, -R A C, -R A^2 C, ...
        toeplitz = [1, -a[i][i]]
        vec = [a[r][i] for r in range(i + 1, n)]
        for _ in range(size):
            toeplitz.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(x * y for x, y in zip(br, vec)) for br in block]
        poly = [
            sum(toeplitz[l - j] * poly[j] for j in range(max(0, l - size - 1), min(l, size) + 1))
            for l in range(size + 2)
        ]
    return poly[1:]


def determinant(m: RationalMatrix) -> Fraction:
    """det(m) = (-1)^n a_n."""
    if m.n == 0:
        return Fraction(1)
    return (-1) ** m.n * char_poly(m).coeffs[-1]


def bareiss_determinant(m: RationalMatrix) -> Fraction:
    """Fraction-free elimination determinant, independent of ``char_poly``."""
    n = m.n
    if n == 0:
        return Fraction(1)
    a = m.rows()
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]

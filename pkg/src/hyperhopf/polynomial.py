"""Dense univariate polynomials over the rationals, and the Hilbert basis."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class RationalPolynomial:
    """Polynomial in X with ``Fraction`` coefficients, stored ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Number) -> "RationalPolynomial":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "RationalPolynomial":
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> "RationalPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other) -> "RationalPolynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return RationalPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "RationalPolynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "RationalPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "RationalPolynomial":
        other = _lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPolynomial":
        out = RationalPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def compose_neg(self) -> "RationalPolynomial":
        """P(-X)."""
        return RationalPolynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_terms([(c, _power("X", k)) for k, c in enumerate(self.coeffs)][::-1])


def _lift(value) -> RationalPolynomial:
    if isinstance(value, RationalPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalPolynomial([value])
    return NotImplemented


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


def format_terms(terms: Sequence[tuple[Fraction, str]]) -> str:
    """Render ``[(coeff, symbol)]`` as ``"X^3 - 3/2 X^2 + 1/2 X"``."""
    parts: list[str] = []
    for c, sym in terms:
        if c == 0:
            continue
        mag = abs(c)
        if sym and mag == 1:
            body = sym
        elif sym:
            body = f"{mag} {sym}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def falling_factorial(k: int) -> RationalPolynomial:
    """X(X-1)...(X-k+1)."""
    out = RationalPolynomial([1])
    for i in range(k):
        out = out * RationalPolynomial([-i, 1])
    return out


@lru_cache(maxsize=None)
def hilbert_polynomial(k: int) -> RationalPolynomial:
    """X(X-1)...(X-k+1)/k!, with the empty product 1 for k = 0."""
    if k < 0:
        raise ValueError("Hilbert polynomial index must be nonnegative")
    return falling_factorial(k) * Fraction(1, factorial(k))


def from_hilbert_basis(coeffs: Sequence[Number]) -> RationalPolynomial:
    out = RationalPolynomial()
    for k, c in enumerate(coeffs):
        if c:
            out = out + hilbert_polynomial(k) * Fraction(c)
    return out


def to_hilbert_basis(p: RationalPolynomial) -> list[Fraction]:
    """Coefficients c_k with p = sum c_k H_k, via forward differences at 0.

    H_k(n) = C(n, k), so c_k is the k-th forward difference of p at 0.
    """
    if p.is_zero():
        return []
    d = p.degree
    values = [p(i) for i in range(d + 1)]
    out = []
    for _ in range(d + 1):
        out.append(values[0])
        values = [b - a for a, b in zip(values, values[1:])]
    while out and out[-1] == 0:
        out.pop()
    return out


def format_hilbert(coeffs: Sequence[Number]) -> str:
    return format_terms([(Fraction(c), f"H{k}") for k, c in enumerate(coeffs)])

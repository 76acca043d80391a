"""Exact univariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values stored in ascending degree with
trailing zeros stripped, so equality of polynomials is equality of tuples.
This is the arithmetic backbone for mollifier construction and for the
zero-tolerance identity checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


def _normalize(coeffs: Iterable[Rational]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class RationalPoly:
    """Polynomial with exact rational coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Rational) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> "RationalPoly":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPoly({list(self.coeffs)!r})"

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RationalPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coeffs)

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return RationalPoly(out)

    def scale(self, c: Rational) -> "RationalPoly":
        c = Fraction(c)
        return RationalPoly(c * a for a in self.coeffs)

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int input, float for float."""
        acc = Fraction(0) if isinstance(x, (Fraction, int)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (Fraction, int)) else float(c))
        return acc

    def derivative(self, order: int = 1) -> "RationalPoly":
        p = self.coeffs
        for _ in range(order):
            p = tuple(p[i] * i for i in range(1, len(p)))
        return RationalPoly(p)

    def antiderivative(self) -> "RationalPoly":
        """Antiderivative with zero constant term."""
        return RationalPoly(
            (Fraction(0),) + tuple(c / (i + 1) for i, c in enumerate(self.coeffs))
        )

    def integral(self, a: Rational, b: Rational) -> Fraction:
        """Exact definite integral over [a, b]."""
        F = self.antiderivative()
        return F(Fraction(b)) - F(Fraction(a))

    def compose_neg(self) -> "RationalPoly":
        """The polynomial u -> p(-u)."""
        return RationalPoly(
            c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)
        )

    def shift_scale(self, num: Rational, den: Rational) -> "RationalPoly":
        """The polynomial u -> p(num/den * u) for exact rational num/den."""
        f = Fraction(num) / Fraction(den)
        return RationalPoly(c * f**i for i, c in enumerate(self.coeffs))

    def float_coeffs(self) -> list[float]:
        return [float(c) for c in self.coeffs]


def from_strings(items: Sequence[str]) -> RationalPoly:
    """Inverse of `to_strings`; accepts 'p/q' or integer strings."""
    return RationalPoly(Fraction(s) for s in items)


def to_strings(poly: RationalPoly) -> list[str]:
    """Exact string form of the coefficients, suitable for JSON round-trips."""
    return [str(c) for c in poly.coeffs]

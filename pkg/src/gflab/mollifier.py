"""Compactly supported polynomial bump functions with prescribed moments.

A mollifier here is phi(u) = (1-(u/l)^2)^s * P(u) on [-l, l] with exact
rational coefficients, built so that int u^j phi du = delta_{0j} for
j = 0..q. Polynomial bumps instead of exp-bumps: every run uses at most
s-1 derivatives, and the polynomial form gives exact rational moments,
derivatives, and quadratic integrals, which the verification layer consumes
as oracles. Seeded families add d extra basis dimensions with pseudo-random
rational free coefficients (asymmetric unless d = 0), re-imposing the moment
constraints by an exact linear solve.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

import numpy as np

from .errors import ConfigError
from .ratpoly import RationalPoly, from_strings, to_strings

Rational = Union[int, Fraction]


def _bump_weighted_moment(s: int, mu: int, l: Fraction) -> Fraction:
    """Exact int_{-l}^{l} u^mu (1-(u/l)^2)^s du."""
    if mu % 2 == 1:
        return Fraction(0)
    m = mu // 2
    # substitute u = l t: l^{mu+1} * 2 int_0^1 t^{2m} (1-t^2)^s dt
    # = l^{mu+1} * B(s+1, m+1/2) = l^{mu+1} * s! / prod_{i=0..s}(m + 1/2 + i)
    num = Fraction(math.factorial(s))
    den = Fraction(1)
    for i in range(s + 1):
        den *= Fraction(2 * m + 1 + 2 * i, 2)
    return l ** (mu + 1) * num / den


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over the rationals with partial pivoting."""
    n = len(rhs)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(aug[r][col]))
        if aug[piv][col] == 0:
            raise ConfigError("moment system is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _seeded_rationals(seed: int, q: int, s: int, d: int) -> list[Fraction]:
    """Deterministic nonzero rational free coefficients for the extra basis dims."""
    rng = random.Random(seed * 1_000_003 + q * 101 + s * 13 + d)
    out = []
    for _ in range(d):
        num = rng.choice([-1, 1]) * rng.randint(1, 12)
        den = rng.randint(1, 8)
        out.append(Fraction(num, den))
    return out


@dataclass(frozen=True)
class Mollifier:
    """Immutable bump function; all exact data derives from `poly`."""

    l: Fraction
    s: int
    q: int
    d: int
    seed: int
    poly: RationalPoly
    _derivs: dict = field(default_factory=dict, repr=False, compare=False)
    _float_derivs: dict = field(default_factory=dict, repr=False, compare=False)

    # -- exact layer ------------------------------------------------------

    def derivative_poly(self, r: int) -> RationalPoly:
        """phi^{(r)} as an exact polynomial; r = -1 is the antiderivative
        anchored so it vanishes at -l."""
        if r < -1:
            raise ConfigError(f"derivative order {r} < -1")
        if r > self.s - 1:
            raise ConfigError(
                f"derivative order {r} exceeds smoothness bound s-1 = {self.s - 1}"
            )
        if r not in self._derivs:
            if r == -1:
                A = self.poly.antiderivative()
                A = A - RationalPoly.constant(A(-self.l))
                self._derivs[r] = A
            else:
                self._derivs[r] = self.poly.derivative(r)
        return self._derivs[r]

    def moment(self, j: int) -> Fraction:
        """Exact int u^j phi(u) du."""
        return (RationalPoly.monomial(j) * self.poly).integral(-self.l, self.l)

    def phi_sq_integral(self) -> Fraction:
        """Exact int phi^2 du."""
        return (self.poly * self.poly).integral(-self.l, self.l)

    def weighted_pair_integral(self, k: int, i: int, j: int) -> Fraction:
        """Exact int u^k phi^{(i)}(u) phi^{(j)}(u) du; i, j >= -1."""
        prod = RationalPoly.monomial(k) * self.derivative_poly(i) * self.derivative_poly(j)
        return prod.integral(-self.l, self.l)

    # -- float layer ------------------------------------------------------

    def float_deriv_coeffs(self, r: int) -> np.ndarray:
        if r not in self._float_derivs:
            self._float_derivs[r] = np.array(
                self.derivative_poly(r).float_coeffs(), dtype=float
            )
        return self._float_derivs[r]

    def eval_derivative(self, r: int, u):
        """phi^{(r)}(u), vectorized; 0 outside the support, and the
        antiderivative (r = -1) clamps to 0 below and 1 above it."""
        coeffs = self.float_deriv_coeffs(r)
        lf = float(self.l)
        u_arr = np.asarray(u, dtype=float)
        scalar = u_arr.ndim == 0
        u_arr = np.atleast_1d(u_arr)
        acc = np.zeros_like(u_arr)
        for c in coeffs[::-1]:
            acc = acc * u_arr + c
        if r == -1:
            acc = np.where(u_arr <= -lf, 0.0, acc)
            acc = np.where(u_arr >= lf, 1.0, acc)
        else:
            acc = np.where(np.abs(u_arr) >= lf, 0.0, acc)
        return float(acc[0]) if scalar else acc

    def eval_scaled(self, r: int, eps: float, x):
        """r-th derivative of the scaled bump eps^{-1} phi(x/eps)."""
        if eps <= 0:
            raise ConfigError(f"eps must be positive, got {eps}")
        return self.eval_derivative(r, np.asarray(x, dtype=float) / eps) * eps ** (
            -1 - r
        )

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "l": str(self.l),
            "s": self.s,
            "q": self.q,
            "d": self.d,
            "seed": self.seed,
            "coeffs": to_strings(self.poly),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, doc: dict) -> "Mollifier":
        return cls(
            l=Fraction(doc["l"]),
            s=int(doc["s"]),
            q=int(doc["q"]),
            d=int(doc["d"]),
            seed=int(doc["seed"]),
            poly=from_strings(doc["coeffs"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "Mollifier":
        return cls.from_json_dict(json.loads(text))

    def describe(self) -> dict:
        """Stable descriptor used inside reports."""
        return {"q": self.q, "s": self.s, "l": str(self.l), "d": self.d, "seed": self.seed}


def build_mollifier(
    q: int,
    s: int,
    l: Rational = 1,
    family_seed: int = 0,
    extra_dims: int | None = None,
) -> Mollifier:
    """Construct phi in the basis {(1-(u/l)^2)^s u^k : k = 0..q+d}.

    The last d coefficients are seeded pseudo-random rationals; the first
    q+1 are then fixed by the exact (q+1)-equation moment system. d defaults
    to 2, which guarantees an odd free power (asymmetry) for any q; pass
    extra_dims=0 for the plain symmetric normalized bump.
    """
    if s < 2:
        raise ConfigError(f"smoothness s must be >= 2, got {s}")
    if q < 0:
        raise ConfigError(f"moment order q must be >= 0, got {q}")
    l = Fraction(l)
    if l <= 0:
        raise ConfigError(f"support radius l must be positive, got {l}")
    d = 2 if extra_dims is None else extra_dims
    if d < 0:
        raise ConfigError(f"extra_dims must be >= 0, got {d}")

    free = _seeded_rationals(family_seed, q, s, d)
    # moment j of basis element k is the bump-weighted moment of order k+j
    matrix = [
        [_bump_weighted_moment(s, k + j, l) for k in range(q + 1)] for j in range(q + 1)
    ]
    rhs = [
        (Fraction(1) if j == 0 else Fraction(0))
        - sum(
            free[k - (q + 1)] * _bump_weighted_moment(s, k + j, l)
            for k in range(q + 1, q + 1 + d)
        )
        for j in range(q + 1)
    ]
    solved = _solve_exact(matrix, rhs)
    coeffs = solved + free

    # expand (1-(u/l)^2)^s * sum_k c_k u^k into a plain polynomial
    inv_l2 = 1 / (l * l)
    base = RationalPoly((1, 0, -inv_l2))
    bump = RationalPoly.one()
    for _ in range(s):
        bump = bump * base
    p = RationalPoly.zero()
    for k, ck in enumerate(coeffs):
        p = p + (bump * RationalPoly.monomial(k, ck))
    return Mollifier(l=l, s=s, q=q, d=d, seed=family_seed, poly=p)


# module-level op aliases matching the documented call style


def eval_derivative(m: Mollifier, r: int, u):
    return m.eval_derivative(r, u)


def moment(m: Mollifier, j: int) -> Fraction:
    return m.moment(j)


def eval_scaled(m: Mollifier, r: int, eps: float, x):
    return m.eval_scaled(r, eps, x)

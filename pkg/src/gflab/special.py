"""Real-argument Gamma, generalized binomial coefficients, and Beta ratios.

Gamma uses a fixed-coefficient Lanczos approximation (g = 7, 9 terms) with the
reflection formula below 1/2; this is self-contained and accurate to about
1e-13 relative on |x| <= 50, comfortably inside the 1e-12 contract. Arguments
within 1e-9 of a non-positive integer raise PoleError instead of returning
huge values, since a pole always means a misconfigured exponent upstream.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError, PoleError

# Lanczos coefficients for g = 7, n = 9 (double-precision standard set).
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_POLE_TOL = 1e-9
_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def sinpi(x: float) -> float:
    """sin(pi*x) with argument reduction, accurate near integers."""
    r = x - round(x)
    s = math.sin(math.pi * r)
    return -s if round(x) % 2 else s


def is_near_nonpositive_integer(x: float, tol: float = _POLE_TOL) -> bool:
    n = round(x)
    return n <= 0 and abs(x - n) <= tol


def gamma(x: float) -> float:
    """Gamma(x) for real x, relative error <= 1e-12 on |x| <= 50."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"gamma argument must be finite, got {x}")
    if is_near_nonpositive_integer(x):
        raise PoleError(f"gamma pole at x = {x}")
    if x < 0.5:
        # reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x))
        return math.pi / (sinpi(x) * gamma(1.0 - x))
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for k in range(1, len(_LANCZOS_COEFFS)):
        acc += _LANCZOS_COEFFS[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * t ** (z + 0.5) * math.exp(-t) * acc


def binomial_real(x: float, n: int) -> float:
    """Generalized binomial coefficient x(x-1)...(x-n+1)/n!; 1 at n=0, 0 for n<0."""
    if n < 0:
        return 0.0
    if n == 0:
        return 1.0
    out = 1.0
    for i in range(n):
        out *= (x - i) / (i + 1)
    return out


def binomial_exact(x: Fraction, n: int) -> Fraction:
    """Exact rational counterpart of binomial_real for rational x."""
    if n < 0:
        return Fraction(0)
    out = Fraction(1)
    x = Fraction(x)
    for i in range(n):
        out *= (x - i) / (i + 1)
    return out


def beta_ratio(a: float, b: float) -> float:
    """Gamma(a+1)Gamma(b+1)/Gamma(a+b+2), the Euler integral of (1-t)^a t^b."""
    if a <= -1.0 or b <= -1.0:
        raise DomainError(f"beta_ratio requires a > -1 and b > -1, got ({a}, {b})")
    return gamma(a + 1.0) * gamma(b + 1.0) / gamma(a + b + 2.0)

"""Quadrature kernel: cached Gauss rules, scale-aware adaptive refinement,
and closed-form integrals against a logarithmic kernel.

The adaptive routine measures every tolerance against a global absolute
scale computed in a pre-pass. That matters here: balanced integrands cancel
to many orders, so a purely relative acceptance test would chase rounding
noise into unbounded subdivision. The returned error estimate includes the
rounding floor 2e-16 * int |f|, which downstream fits use as row weights.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.special import roots_jacobi

from .errors import ConfigError, QuadratureError


@lru_cache(maxsize=None)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1]; arrays are read-only."""
    x, w = np.polynomial.legendre.leggauss(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


@lru_cache(maxsize=None)
def gauss_jacobi(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for weight (1-x)^alpha (1+x)^beta on [-1, 1]."""
    x, w = roots_jacobi(n, alpha, beta)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def _gl_panel(f: Callable, a: float, b: float, x: np.ndarray, w: np.ndarray):
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    vals = f(mid + half * x)
    return half * float(np.dot(w, vals)), half * float(np.dot(w, np.abs(vals)))


def adaptive_gauss(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    *,
    rel_tol: float = 1e-12,
    abs_floor: float = 0.0,
    breaks: Sequence[float] = (),
    n: int = 20,
    max_depth: int = 26,
    pre_split: int = 8,
) -> tuple[float, float, float]:
    """Globally adaptive Gauss-Legendre on [a, b].

    Returns (value, error_estimate, abs_scale) where abs_scale approximates
    int |f|. Panel acceptance compares the bisection difference against an
    error budget proportional to panel length, never against a per-panel
    absolute magnitude, so cancellation-dominated integrands terminate at
    the rounding floor instead of recursing forever.
    """
    if not b > a:
        raise ConfigError(f"empty integration interval [{a}, {b}]")
    x, w = gauss_legendre(n)

    pts = sorted({a, b, *(p for p in breaks if a < p < b)})
    seeds: list[tuple[float, float]] = []
    for lo, hi in zip(pts[:-1], pts[1:]):
        edges = np.linspace(lo, hi, pre_split + 1)
        seeds.extend(zip(edges[:-1], edges[1:]))

    evals = [_gl_panel(f, lo, hi, x, w) for lo, hi in seeds]
    abs_scale = sum(av for _, av in evals)
    est = sum(v for v, _ in evals)
    budget = max(rel_tol * abs(est), 8e-16 * abs_scale, abs_floor)
    total_len = b - a

    accepted: list[tuple[float, float, float]] = []  # (left, value, delta)
    worst_ratio = 0.0
    stack = [
        (lo, hi, evals[i], 0) for i, (lo, hi) in enumerate(seeds)
    ]
    while stack:
        lo, hi, (val, _), depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _gl_panel(f, lo, mid, x, w)
        right = _gl_panel(f, mid, hi, x, w)
        val2 = left[0] + right[0]
        delta = abs(val2 - val)
        threshold = budget * (hi - lo) / total_len
        if delta <= threshold or depth >= max_depth:
            if delta > threshold:
                worst_ratio = max(worst_ratio, delta / max(threshold, 5e-324))
            accepted.append((lo, val2, delta))
        else:
            stack.append((mid, hi, right, depth + 1))
            stack.append((lo, mid, left, depth + 1))

    if worst_ratio > 1e3:
        raise QuadratureError(
            f"refinement stalled: worst panel misses its budget by {worst_ratio:.1e}x"
        )
    accepted.sort(key=lambda t: t[0])
    value = math.fsum(t[1] for t in accepted)
    err = math.fsum(t[2] for t in accepted) + 2e-16 * abs_scale
    return value, err, abs_scale


def geometric_edges(width: float, delta: float) -> list[float]:
    """Panel edges 0 < e_1 < ... <= width with e_k = (2^k - 1)*delta.

    Used to march away from a branch point at distance `delta` outside the
    interval: each panel's length stays comparable to its distance from the
    singularity, which keeps fixed-order Gauss panels spectrally accurate.
    """
    delta = max(delta, 1e-14 * width)
    edges = [0.0]
    k = 0
    while edges[-1] < width:
        k += 1
        edges.append(min((2.0**k - 1.0) * delta, width))
    return edges


def panels_toward(lo: float, hi: float, toward_lo: bool, delta: float) -> list[tuple[float, float]]:
    """Split [lo, hi] into geometric panels refined toward one endpoint."""
    width = hi - lo
    edges = geometric_edges(width, delta)
    if toward_lo:
        pts = [lo + e for e in edges]
    else:
        pts = [hi - e for e in reversed(edges)]
    return list(zip(pts[:-1], pts[1:]))


def fixed_panel_gauss(
    f: Callable[[np.ndarray], np.ndarray],
    panels: Sequence[tuple[float, float]],
    n: int = 24,
) -> float:
    """Plain composite Gauss-Legendre over an explicit panel list."""
    x, w = gauss_legendre(n)
    acc = []
    for lo, hi in panels:
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        acc.append(half * float(np.dot(w, f(mid + half * x))))
    return math.fsum(acc)


def log_kernel_closed(
    coeffs: np.ndarray, w: np.ndarray, lo: float, hi: float
) -> np.ndarray:
    """Exact integral int_lo^hi ln|w + v| g(v) dv for polynomial g,
    vectorized over w, valid when the branch point -w lies in [lo, hi].

    Integration by parts against G(v) = A(v) - A(-w) (A an antiderivative
    of g) kills the boundary-log blowup because G vanishes at the branch
    point; the remaining rational integrand is the exact polynomial quotient
    G/(v+w), obtained by synthetic division.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    w = np.asarray(w, dtype=float)
    # antiderivative of g with zero constant
    A = np.concatenate([[0.0], coeffs / np.arange(1, len(coeffs) + 1)])
    D = len(A) - 1

    def polyval(c, t):
        acc = np.zeros_like(t)
        for ck in c[::-1]:
            acc = acc * t + ck
        return acc

    Aw = polyval(A, -w)
    G_hi = polyval(A, np.full_like(w, hi)) - Aw
    G_lo = polyval(A, np.full_like(w, lo)) - Aw

    # quotient of A by (v + w); constant shift leaves the quotient unchanged
    quot = np.empty((D, len(w)))
    carry = np.full(len(w), A[D])
    quot[0] = carry  # degree D-1
    for idx, k in enumerate(range(D - 1, 0, -1), start=1):
        carry = A[k] + (-w) * carry
        quot[idx] = carry  # degree D-1-idx
    integral_H = np.zeros(len(w))
    for idx in range(D):
        deg = D - 1 - idx
        integral_H += quot[idx] * (hi ** (deg + 1) - lo ** (deg + 1)) / (deg + 1)

    with np.errstate(divide="ignore"):
        log_hi = np.where(np.abs(hi + w) == 0.0, 0.0, np.log(np.abs(hi + w)))
        log_lo = np.where(np.abs(lo + w) == 0.0, 0.0, np.log(np.abs(lo + w)))
    return G_hi * log_hi - G_lo * log_lo - integral_H

"""Exact and floating series: Cauchy numbers, the c_n coefficients, harmonic
numbers, the dilogarithm on [1, inf), and the two power series

    t / log(1 + t)  = 1 + sum_{n>=1} b_n t^n
    log(1 - u)^2    = u^2 sum_{n>=0} c_n u^n.

Exact values are :class:`fractions.Fraction` (always in lowest terms).
"""

from __future__ import annotations

import math
import warnings
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError

__all__ = [
    "ExactRational",
    "stirling_first",
    "cauchy_number",
    "cauchy_magnitudes",
    "harmonic",
    "c_bruteforce",
    "c_closed",
    "dilog",
    "t_over_log1p",
    "log1m_squared_series",
    "rho_01_series",
]

ExactRational = Fraction

CAUCHY_MAX_N = 200


@lru_cache(maxsize=None)
def stirling_first(n: int) -> tuple[int, ...]:
    """Signed Stirling numbers s(n, k), k = 0..n: x(x-1)...(x-n+1) = sum s(n,k) x^k."""
    coeffs = [1]
    for j in range(n):
        # multiply by (x - j)
        nxt = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= j * c
        coeffs = nxt
    return tuple(coeffs)


@lru_cache(maxsize=None)
def cauchy_number(n: int) -> Fraction:
    """b_n = int_0^1 binom(x, n) dx, exactly, for 1 <= n <= 200."""
    if not 1 <= n <= CAUCHY_MAX_N:
        raise ValueError(f"cauchy_number needs 1 <= n <= {CAUCHY_MAX_N}, got {n}")
    s = stirling_first(n)
    total = sum(Fraction(c, k + 1) for k, c in enumerate(s) if c)
    return total / math.factorial(n)


def cauchy_magnitudes(n_max: int, nodes: int = 64) -> np.ndarray:
    """Floating (-1)^(n-1) b_n for n = 1..n_max.

    Uses (-1)^(n-1) b_n = int_0^1 (x/n) prod_{j<n} (1 - x/j) dx, whose
    integrand is smooth and positive, with Gauss-Legendre on [0, 1].
    """
    x, w = np.polynomial.legendre.leggauss(nodes)
    x = 0.5 * (x + 1.0)
    w = 0.5 * w
    out = np.empty(n_max)
    prod = np.ones_like(x)
    for n in range(1, n_max + 1):
        out[n - 1] = np.dot(w, x * prod) / n
        prod *= 1.0 - x / n
    return out


def harmonic(n: int) -> Fraction:
    if n < 1:
        raise ValueError("harmonic needs n >= 1")
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def c_bruteforce(n: int) -> Fraction:
    """c_n = sum_{k=0}^n 1/((k+1)(n+1-k))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum((Fraction(1, (k + 1) * (n + 1 - k)) for k in range(n + 1)), Fraction(0))


def c_closed(n: int) -> Fraction:
    """c_n = 2 H_{n+1} / (n + 2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return 2 * harmonic(n + 1) / (n + 2)


def _li2_small(w: float) -> float:
    # Plain series, |w| <= 1/2: 60 terms leave < 2^-60.
    total = 0.0
    p = w
    for k in range(1, 80):
        term = p / (k * k)
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
        p *= w
    return total


def dilog(t: float) -> float:
    """dilog(t) = int_1^t log x / (1 - x) dx for t >= 1.

    With w = (t-1)/t in [0, 1): dilog(t) = -log(t)^2/2 - Li2(w), and
    Li2(w) = pi^2/6 - log(w) log(1-w) - Li2(1-w) when w > 1/2.
    """
    t = float(t)
    if not t >= 1.0:
        raise DomainError("dilog is only provided for t >= 1")
    if t == 1.0:
        return 0.0
    lt = math.log(t)
    w = (t - 1.0) / t
    if w <= 0.5:
        li2 = _li2_small(w)
    else:
        # 1 - w = 1/t
        li2 = math.pi ** 2 / 6 - math.log(w) * (-lt) - _li2_small(1.0 / t)
    return -0.5 * lt * lt - li2


def _check_radius(x: float, name: str):
    if abs(x) >= 1.0:
        warnings.warn(f"{name}: series diverges for |argument| >= 1", RuntimeWarning,
                      stacklevel=3)


def t_over_log1p(t: float, N: int = 50) -> float:
    """Partial sum 1 + sum_{n=1}^N b_n t^n of t/log(1+t)."""
    if not 0 <= N <= CAUCHY_MAX_N:
        raise ValueError(f"N must be in [0, {CAUCHY_MAX_N}]")
    _check_radius(t, "t_over_log1p")
    total = 0.0
    for n in range(N, 0, -1):  # Horner
        total = (total + float(cauchy_number(n))) * t
    return 1.0 + total


def log1m_squared_series(u: float, N: int = 60) -> float:
    """Partial sum u^2 sum_{n<N} c_n u^n of log(1-u)^2."""
    _check_radius(u, "log1m_squared_series")
    total = 0.0
    for n in range(N - 1, -1, -1):
        total = total * u + float(c_closed(n))
    return u * u * total


def rho_01_series(n_terms: int = 20000) -> float:
    """3/2 - 2 sum_n (-1)^(n-1) b_n/(n+1)^2, the series form of int_0^1 rho.

    Terms n <= 200 are exact; the rest use :func:`cauchy_magnitudes`.  The
    dropped tail is below 1/(2 N^2 log^2 N).
    """
    n_exact = min(n_terms, CAUCHY_MAX_N)
    exact = sum(abs(cauchy_number(n)) / (n + 1) ** 2 for n in range(1, n_exact + 1))
    rest = 0.0
    if n_terms > n_exact:
        mags = cauchy_magnitudes(n_terms)[n_exact:]
        n = np.arange(n_exact + 1, n_terms + 1, dtype=float)
        rest = math.fsum(mags / (n + 1.0) ** 2)
    return 1.5 - 2.0 * (float(exact) + rest)

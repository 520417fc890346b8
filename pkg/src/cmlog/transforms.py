"""Integral representations of G built on the density rho.

Every function takes an optional ``rho`` callable so the verification
harness can swap in a deliberately wrong density.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .cutplane import CutPlanePoint, _as_cut_plane, eval_g_direct
from .errors import DomainError
from .quad import (
    DEFAULT_TOL,
    QuadratureResult,
    integrate_against_rho,
    integrate_finite,
    integrate_log_endpoint,
)

__all__ = [
    "MomentQuery",
    "stieltjes_g",
    "g_moment",
    "g_derivative",
    "phi",
    "phi_result",
    "reconstruct_one_minus_g",
    "plancherel_pair",
    "im_g_prime_polar",
    "im_g_cartesian",
]

MAX_MOMENT_ORDER = 40
# |phi(s)| <= int |rho| = A_pos - B_neg < 2.38, also for the sign-flipped rho.
PHI_ENVELOPE = 2.5


@dataclass(frozen=True)
class MomentQuery:
    x: float
    k: int

    def __post_init__(self):
        if not self.x > 0:
            raise DomainError("moment point x must be > 0")
        if not 0 <= self.k <= MAX_MOMENT_ORDER:
            raise DomainError(f"moment order must be in [0, {MAX_MOMENT_ORDER}]")


def stieltjes_g(z, tol: float = DEFAULT_TOL, rho: Callable | None = None) -> complex:
    """G(z) = 1 - int_0^inf rho(t)/(z + t) dt."""
    z = complex(_as_cut_plane(complex(z) if isinstance(z, CutPlanePoint) else z))
    points = (-z.real,) if z.real < 0 else (abs(z),)
    if z.imag == 0:
        res = integrate_against_rho(lambda t: 1.0 / (z.real + t), tol, rho=rho, points=points)
    else:
        res = integrate_against_rho(lambda t: 1.0 / (z + t), tol, rho=rho, points=points)
    res.require("Stieltjes integral")
    return complex(1.0 - res.value)


def g_moment(x: float, k: int, tol: float = 1e-300, rel_tol: float = 1e-10,
             rho: Callable | None = None) -> float:
    """M_k(x) = int_0^inf rho(t) / (x + t)^(k+1) dt.

    G^(k)(x) = (-1)^(k+1) k! M_k(x) for k >= 1, and M_0(x) = 1 - G(x).
    Moments span hundreds of decades over x in [1e-3, 1e3], so the default
    control is relative.  Accuracy degrades past k ~ 20 as the integrand
    concentrates at t = 0.
    """
    q = MomentQuery(float(x), int(k))
    p = q.k + 1
    res = integrate_against_rho(lambda t: (q.x + t) ** (-p), tol, rel_tol, rho=rho,
                                points=(q.x,))
    return float(res.require(f"moment M_{q.k}({q.x})").value)


def g_derivative(x: float, k: int, tol: float = 1e-300, rel_tol: float = 1e-10,
                 rho: Callable | None = None) -> float:
    """G^(k)(x) for k >= 1 from the moment integral."""
    if k < 1:
        raise DomainError("derivative order must be >= 1")
    return (-1) ** (k + 1) * math.factorial(k) * g_moment(x, k, tol, rel_tol, rho)


def phi_result(s: float, tol: float = DEFAULT_TOL,
               rho: Callable | None = None) -> QuadratureResult:
    s = float(s)
    if not s >= 0:
        raise DomainError("phi is defined for s >= 0")
    if s == 0.0:
        kernel = np.ones_like
    else:
        def kernel(t):
            return np.exp(-s * t)
    return integrate_against_rho(kernel, tol, rho=rho)


@lru_cache(maxsize=65536)
def _phi_default(s: float, tol: float) -> float:
    return float(phi_result(s, tol).require(f"phi({s})").value)


def phi(s: float, tol: float = DEFAULT_TOL, rho: Callable | None = None) -> float:
    """phi(s) = int_0^inf exp(-s t) rho(t) dt."""
    if rho is None:
        return _phi_default(float(s), float(tol))
    return float(phi_result(s, tol, rho).require(f"phi({s})").value)


def _phi_vec(s, tol, rho):
    return np.array([phi(v, tol, rho) for v in np.asarray(s, dtype=float)])


def _outer_over_s(weight: Callable, s_max: float | None, tol: float, inner_tol: float,
                  rho, x_rate: float | None = None) -> QuadratureResult:
    """int_0^{s_max} weight(s, phi(s)) ds; phi has a 1/log(1/s) cusp at 0."""
    def f(s):
        return weight(s, _phi_vec(s, inner_tol, rho))

    head = integrate_log_endpoint(f, 0.0, 1.0, 0.5 * tol, singular="left",
                                  envelope=PHI_ENVELOPE ** 2)
    if s_max is None:
        # Grow the range until sup phi * exp(-x S)/x is below tol/4, with
        # sup_{s>=S} phi estimated as twice the last value.
        s_max = 2.0
        while 2.0 * abs(phi(s_max, inner_tol, rho)) * math.exp(-x_rate * s_max) / x_rate > 0.25 * tol:
            s_max *= 1.5
    if s_max <= 1.0:
        raise DomainError("s_max must exceed 1")
    breaks = [1.0]
    while breaks[-1] * 2 < s_max:
        breaks.append(breaks[-1] * 2)
    body = integrate_finite(f, 1.0, s_max, 0.5 * tol, points=breaks[1:])
    out = head + body
    if x_rate is not None:
        tail = 2.0 * abs(phi(s_max, inner_tol, rho)) * math.exp(-x_rate * s_max) / x_rate
        out = QuadratureResult(out.value, out.abs_error_estimate + tail,
                               out.evaluations, out.converged)
    return out


def reconstruct_one_minus_g(x: float, tol: float = 1e-7, rho: Callable | None = None) -> float:
    """int_0^inf exp(-x s) phi(s) ds, which should equal 1 - G(x)."""
    x = float(x)
    if not x > 0:
        raise DomainError("reconstruction needs x > 0")
    if x < 0.05:
        warnings.warn("1 - G(x) blows up as x -> 0+; the Laplace integral is slow here",
                      RuntimeWarning, stacklevel=2)
    inner = min(DEFAULT_TOL, 0.1 * tol * x)
    res = _outer_over_s(lambda s, p: np.exp(-x * s) * p, None, tol, inner, rho, x_rate=x)
    return float(res.require(f"Laplace integral at x={x}").value)


def _plancherel_lhs(T: float, tol: float) -> QuadratureResult:
    # |1 - G(it)|^2 is even in t, so integrate over [0, T] and divide by pi.
    def f(t):
        return np.abs(1.0 - eval_g_direct(1j * t)) ** 2

    head = integrate_log_endpoint(f, 0.0, min(1.0, T), 0.5 * tol, singular="left")
    if T <= 1.0:
        return head.scaled(1 / math.pi)
    breaks = [1.0]
    while breaks[-1] * 2 < T:
        breaks.append(breaks[-1] * 2)
    body = integrate_finite(f, 1.0, T, 0.5 * tol, points=breaks[1:])
    return (head + body).scaled(1 / math.pi)


def plancherel_pair(T: float, S: float, tol: float = 1e-8,
                    rho: Callable | None = None) -> tuple[float, float]:
    """Truncated sides of the Plancherel identity.

    lhs = int_{-T}^{T} |1 - G(it)|^2 dt / (2 pi),  rhs = int_0^S phi(s)^2 ds.
    """
    if not (T > 0 and S > 0):
        raise DomainError("truncation bounds must be positive")
    lhs = _plancherel_lhs(float(T), tol).require("Plancherel left side")
    inner = DEFAULT_TOL
    if S <= 1.0:
        rhs = integrate_log_endpoint(lambda s: _phi_vec(s, inner, rho) ** 2, 0.0, S, tol,
                                     envelope=PHI_ENVELOPE ** 2)
    else:
        rhs = _outer_over_s(lambda s, p: p * p, float(S), tol, inner, rho)
    rhs.require("Plancherel right side")
    return float(lhs.value), float(rhs.value)


def im_g_prime_polar(r: float, theta: float, tol: float = DEFAULT_TOL,
                     rho: Callable | None = None) -> float:
    """Im G'(r e^{i theta}) = -2 r sin(theta) int (c + t) rho / ((c + t)^2 + d^2)^2 dt,
    with c = r cos(theta), d = r sin(theta)."""
    r, theta = float(r), float(theta)
    if not r > 0 or not abs(theta) < math.pi:
        raise DomainError("need r > 0 and |theta| < pi")
    c, d = r * math.cos(theta), r * math.sin(theta)
    if d == 0.0:
        return 0.0

    def kernel(t):
        a = c + t
        return a / (a * a + d * d) ** 2

    points = (-c,) if c < 0 else (r,)
    res = integrate_against_rho(kernel, tol, 1e-12, rho=rho, points=points)
    return float(-2.0 * d * res.require("Im G' integral").value)


def im_g_cartesian(x: float, y: float, tol: float = DEFAULT_TOL,
                   rho: Callable | None = None) -> float:
    """Im G(x + iy) = y int rho(t) / ((x + t)^2 + y^2) dt for x > 0."""
    x, y = float(x), float(y)
    if not x > 0:
        raise DomainError("im_g_cartesian needs x > 0")
    if y == 0.0:
        return 0.0
    res = integrate_against_rho(lambda t: 1.0 / ((x + t) ** 2 + y * y), tol, 1e-12,
                                rho=rho, points=(x,))
    return float(y * res.require("Im G integral").value)

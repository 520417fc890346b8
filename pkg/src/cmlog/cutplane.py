"""G on the cut plane C \\ (-inf, 0], its derivative and its boundary values.

G(z) = (1 - Log z / Log(1 + z)) z Log z is evaluated as

    G(z) = z Log(z) Log(1 + 1/z) / Log(1 + z),

using Log(1 + z) - Log z = Log(1 + 1/z) (valid on the whole cut plane).
This removes the cancellation in ``1 - Log z/Log(1+z)`` for large |z|.
All logarithms of arguments near 1 go through a complex log1p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "CutPlanePoint",
    "BoundaryValue",
    "principal_log",
    "eval_g_direct",
    "eval_g_prime_direct",
    "eval_g_boundary",
    "eval_one_minus_g",
]


@dataclass(frozen=True)
class CutPlanePoint:
    re: float
    im: float

    def __post_init__(self):
        if self.im == 0 and self.re <= 0:
            raise DomainError(f"{self.re}+{self.im}j lies on the cut (-inf, 0]")
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise DomainError("point must be finite")

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def of(cls, z: complex) -> "CutPlanePoint":
        z = complex(z)
        return cls(z.real, z.imag)


@dataclass(frozen=True)
class BoundaryValue:
    t: float
    value: complex
    side: str = "upper"


def _as_cut_plane(z):
    if isinstance(z, CutPlanePoint):
        z = complex(z)
    arr = np.asarray(z, dtype=complex)
    if np.any((arr.imag == 0) & (arr.real <= 0)):
        raise DomainError("argument on the branch cut (-inf, 0]")
    if not np.all(np.isfinite(arr)):
        raise DomainError("argument must be finite")
    return arr


def _clog1p(w: np.ndarray) -> np.ndarray:
    """Principal Log(1 + w), accurate for small |w|."""
    w = np.asarray(w, dtype=complex)
    x, y = w.real, w.imag
    small = np.abs(w) < 0.5
    out = np.empty_like(w)
    xs, ys = x[small], y[small]
    out[small] = 0.5 * np.log1p(xs * (2.0 + xs) + ys * ys) + 1j * np.arctan2(ys, 1.0 + xs)
    out[~small] = np.log(1.0 + w[~small])
    return out


def _log(z: np.ndarray) -> np.ndarray:
    near_one = np.abs(z - 1.0) < 0.5
    out = np.empty_like(z)
    out[near_one] = _clog1p(z[near_one] - 1.0)
    out[~near_one] = np.log(z[~near_one])
    return out


def _unwrap(arr: np.ndarray, like):
    return complex(arr.reshape(-1)[0]) if np.ndim(like) == 0 else arr


def principal_log(z):
    """Log z = ln|z| + i Arg z with Arg in (-pi, pi)."""
    arr = _as_cut_plane(z)
    return _unwrap(_log(np.atleast_1d(arr)), arr)


def _pieces(z):
    L = _log(z)
    N = _clog1p(1.0 / z)  # Log(1 + 1/z)
    M = _clog1p(z)        # Log(1 + z)
    return L, N, M


def eval_g_direct(z):
    """G(z) from the closed form; scalars or arrays."""
    arr = _as_cut_plane(z)
    zz = np.atleast_1d(arr)
    L, N, M = _pieces(zz)
    return _unwrap(zz * L * N / M, arr)


def _one_minus_zlog1p_inv(w: np.ndarray) -> np.ndarray:
    """1 - log1p(w)/w for |w| <= 1/4 by its alternating series."""
    total = np.zeros_like(w)
    p = np.ones_like(w)
    for k in range(1, 40):
        p = p * w
        total += (-1) ** (k + 1) * p / (k + 1)
    return total


def eval_one_minus_g(z):
    """1 - G(z) without cancellation for large |z|.

    With a = 1 - z Log(1 + 1/z) and b = Log(1 + 1/z)/Log(1 + z),
    1 - G = a + b - a b.
    """
    arr = _as_cut_plane(z)
    zz = np.atleast_1d(arr)
    out = np.empty_like(zz)
    big = np.abs(zz) > 4.0
    zb = zz[big]
    w = 1.0 / zb
    a = _one_minus_zlog1p_inv(w)
    b = _clog1p(w) / _clog1p(zb)
    out[big] = a + b - a * b
    zs = zz[~big]
    L, N, M = _pieces(zs)
    out[~big] = 1.0 - zs * L * N / M
    return _unwrap(out, arr)


def eval_g_prime_direct(z):
    """G'(z) = [(L + 1) N - L/(1+z)] / M - G / (M (1 + z))."""
    arr = _as_cut_plane(z)
    zz = np.atleast_1d(arr)
    L, N, M = _pieces(zz)
    g = zz * L * N / M
    onep = 1.0 + zz
    out = ((L + 1.0) * N - L / onep) / M - g / (M * onep)
    return _unwrap(out, arr)


def eval_g_boundary(t: float, side: str = "upper") -> BoundaryValue:
    """Boundary value G(t + i0) for t < 0; ``side="lower"`` gives G(t - i0)."""
    t = float(t)
    if not t < 0:
        raise DomainError("boundary values exist for t < 0 only")
    if side not in ("upper", "lower"):
        raise ValueError("side must be 'upper' or 'lower'")
    if t == -1.0:
        value = complex(0.0, -math.pi)
    else:
        log_z = complex(math.log(-t), math.pi)
        if t < -1.0:
            log_1pz = complex(math.log(-1.0 - t), math.pi)
            # 1 + 1/t lies in (0, 1), so the log is real; log1p avoids cancellation
            log_1pinv = complex(math.log1p(1.0 / t), 0.0)
        else:
            log_1pz = complex(math.log1p(t), 0.0)
            log_1pinv = log_1pz - log_z
        value = t * log_z * log_1pinv / log_1pz
    if side == "lower":
        value = value.conjugate()
    return BoundaryValue(t, value, side)

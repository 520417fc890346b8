"""The signed density rho on (0, inf) and its integral constants.

    rho(t) = -t + 2 t log t / log(1 - t)                          0 < t < 1
    rho(t) = -t log(1 - 1/t)^2 / (log(t - 1)^2 + pi^2)            t > 1

with rho(1) = -1.  The first branch is the algebraically simplified form of
``-t log((1-t)/t^2) / log(1-t)``; it needs no guard band near either end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError

__all__ = [
    "T0",
    "DensityConstants",
    "rho",
    "rho_mutated",
    "rho_asymptotic",
    "density_constants",
]

#: Zero of rho, the positive root of t^2 + t - 1.
T0 = (math.sqrt(5.0) - 1.0) / 2.0


def _rho_array(t: np.ndarray) -> np.ndarray:
    out = np.empty_like(t)
    lo = t < 1.0
    hi = t > 1.0
    tl = t[lo]
    # log1p(-t) is exact-ish near 0, and -inf at t == 1 is never reached here.
    out[lo] = -tl + 2.0 * tl * np.log(tl) / np.log1p(-tl)
    th = t[hi]
    with np.errstate(invalid="ignore"):
        lead = th * np.log1p(-1.0 / th)
        val = -lead * lead / (th * (np.log(th - 1.0) ** 2 + math.pi ** 2))
    out[hi] = np.where(np.isfinite(th), val, 0.0)
    out[t == 1.0] = -1.0
    return out


def rho(t):
    """Density at ``t > 0``; accepts scalars or arrays."""
    arr = np.asarray(t, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError("rho is defined for t > 0 only")
    out = _rho_array(np.atleast_1d(arr))
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def rho_mutated(t):
    """rho with its sign flipped on (0, t0): harness self-test only."""
    arr = np.asarray(t, dtype=float)
    out = np.asarray(rho(arr), dtype=float)
    out = np.where(arr < T0, -out, out)
    return float(out) if arr.ndim == 0 else out


def rho_asymptotic(t):
    """Leading-order rho: ``-2 log t`` near 0, ``-1/(t log^2 t)`` at infinity.

    Only valid for t <= 0.01 or t >= 100.
    """
    t = float(t)
    if 0.0 < t <= 0.01:
        return -2.0 * math.log(t)
    if t >= 100.0:
        return -1.0 / (t * math.log(t) ** 2)
    raise DomainError(f"asymptotic form not valid at t={t}")


@dataclass(frozen=True)
class DensityConstants:
    t0: float
    rho_at_one: float
    A_pos: float
    B_neg: float
    abs_error_estimate: float = 0.0

    @property
    def total(self) -> float:
        """``int_0^inf rho``, i.e. ``A_pos + B_neg``."""
        return self.A_pos + self.B_neg


@lru_cache(maxsize=8)
def density_constants(tol: float = 1e-12) -> DensityConstants:
    """t0, rho(1) and the positive/negative parts of the integral of rho."""
    from .quad import rho_pieces

    p = [r.require("integral of rho") for r in
         rho_pieces(_rho_array, tol, 0.0, (), 10 ** 6)]
    # Same pieces, same summation order as phi(0).
    a_pos = p[0].value
    b_neg = p[1].value + p[2].value + p[3].value
    return DensityConstants(T0, float(rho(1.0)), float(a_pos), float(b_neg),
                            sum(r.abs_error_estimate for r in p))

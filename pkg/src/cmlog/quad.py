"""Adaptive Gauss-Kronrod quadrature on finite and semi-infinite ranges.

The engine is a global adaptive G10/K21 scheme (QUADPACK error heuristic)
with three range transforms on top of it:

* logarithmic endpoints, ``t = a + (b - a) exp(-u)``, which turn an
  integrable ``log`` blow-up into an exponentially decaying integrand;
* exponential tails, truncated where the integrand is provably negligible;
* ``1/(t log^2 t)`` tails, integrated in ``u = log t`` and closed with a
  fitted ``c/(u^2 + b)`` remainder.

Integrands are called with 1-d numpy arrays and must be vectorized.
Values may be real or complex.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "QuadratureResult",
    "TailSpec",
    "QuadratureError",
    "gauss_kronrod",
    "integrate_finite",
    "integrate_log_endpoint",
    "integrate_semi_infinite",
    "integrate_against_rho",
    "DEFAULT_TOL",
    "DEFAULT_BUDGET",
]

DEFAULT_TOL = 1e-10
DEFAULT_BUDGET = 1_000_000

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny

# QUADPACK qk21: Kronrod abscissae, Kronrod weights, 10-point Gauss weights.
_XGK = np.array([
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077208745199943,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
])
_WG = np.array([
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
])

# Full 21-node layout on [-1, 1], ascending.
NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(21)
# Gauss nodes are the odd-indexed Kronrod abscissae (xgk[1], xgk[3], ...).
for _j, _w in zip(range(1, 10, 2), _WG):
    GAUSS_WEIGHTS[_j] = _w
    GAUSS_WEIGHTS[20 - _j] = _w
del _j, _w


class QuadratureError(RuntimeError):
    """Raised when an integral fails to converge and the caller asked for strictness."""

    def __init__(self, message: str, result: "QuadratureResult | None" = None):
        super().__init__(message)
        self.result = result


@dataclass(frozen=True)
class QuadratureResult:
    value: complex | float
    abs_error_estimate: float
    evaluations: int
    converged: bool

    def __add__(self, other: "QuadratureResult") -> "QuadratureResult":
        return QuadratureResult(
            self.value + other.value,
            self.abs_error_estimate + other.abs_error_estimate,
            self.evaluations + other.evaluations,
            self.converged and other.converged,
        )

    def scaled(self, factor: complex | float) -> "QuadratureResult":
        return QuadratureResult(
            self.value * factor,
            self.abs_error_estimate * abs(factor),
            self.evaluations,
            self.converged,
        )

    def require(self, what: str = "integral") -> "QuadratureResult":
        """Return self, or raise QuadratureError if not converged."""
        if not self.converged:
            raise QuadratureError(
                f"{what} did not converge (estimate {self.value!r}, "
                f"error {self.abs_error_estimate:.3g}, {self.evaluations} evaluations)",
                self,
            )
        return self


@dataclass(frozen=True)
class TailSpec:
    """Decay model of an integrand on ``[a, inf)``."""

    kind: str = "none"
    rate: float | None = None

    def __post_init__(self):
        if self.kind not in ("exponential", "log_squared_reciprocal", "none"):
            raise ValueError(f"unknown tail kind {self.kind!r}")
        if self.kind == "exponential" and not (self.rate is not None and self.rate > 0):
            raise ValueError("exponential tail needs rate > 0")

    @classmethod
    def exponential(cls, rate: float) -> "TailSpec":
        return cls("exponential", float(rate))

    @classmethod
    def log_squared_reciprocal(cls) -> "TailSpec":
        return cls("log_squared_reciprocal")

    @classmethod
    def none(cls) -> "TailSpec":
        return cls("none")


def gauss_kronrod(f: Callable, a: float, b: float):
    """One K21 panel on [a, b]: (value, error estimate, integral of |f|)."""
    half = 0.5 * (b - a)
    center = 0.5 * (a + b)
    fx = np.asarray(f(center + half * NODES))
    if fx.shape != NODES.shape:
        fx = np.broadcast_to(fx, NODES.shape)
    resk = half * np.dot(KRONROD_WEIGHTS, fx)
    resg = half * np.dot(GAUSS_WEIGHTS, fx)
    resabs = abs(half) * np.dot(KRONROD_WEIGHTS, np.abs(fx))
    mean = resk / (b - a) if b != a else 0.0
    resasc = abs(half) * np.dot(KRONROD_WEIGHTS, np.abs(fx - mean))
    err = abs(resk - resg)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > _TINY / (50.0 * _EPS):
        err = max(50.0 * _EPS * resabs, err)
    if not np.all(np.isfinite(fx)):
        err = math.inf
    return resk, float(err), float(resabs)


def _adaptive(g, breakpoints: Sequence[float], tol: float, rel_tol: float,
              budget: int) -> QuadratureResult:
    """Global adaptive bisection over the partition given by ``breakpoints``."""
    pts = sorted(set(float(p) for p in breakpoints))
    heap: list = []
    frozen: list = []
    evals = 0
    counter = 0
    for a, b in zip(pts[:-1], pts[1:]):
        val, err, _ = gauss_kronrod(g, a, b)
        evals += 21
        heapq.heappush(heap, (-err, counter, a, b, val))
        counter += 1

    def totals():
        items = sorted([(a, v, e) for (e_, _, a, b, v) in heap for e in [-e_]] + frozen,
                       key=lambda it: it[0])
        value = sum(v for _, v, _ in items)
        error = math.fsum(e for _, _, e in items)
        return value, error

    value, error = totals()
    converged = False
    while True:
        target = max(tol, rel_tol * abs(value))
        if error <= target:
            converged = True
            break
        if not heap or evals + 42 > budget:
            break
        neg_err, _, a, b, val = heapq.heappop(heap)
        mid = 0.5 * (a + b)
        if not (a < mid < b) or (b - a) <= 4 * _EPS * max(abs(a), abs(b), _TINY):
            frozen.append((a, val, -neg_err))
            continue
        v1, e1, _ = gauss_kronrod(g, a, mid)
        v2, e2, _ = gauss_kronrod(g, mid, b)
        evals += 42
        heapq.heappush(heap, (-e1, counter, a, mid, v1))
        heapq.heappush(heap, (-e2, counter + 1, mid, b, v2))
        counter += 2
        value = value - val + v1 + v2
        error = error + neg_err + e1 + e2
        if counter % 64 == 0:
            value, error = totals()
    value, error = totals()
    if not math.isfinite(error):
        converged = False
    elif not converged:
        converged = error <= max(tol, rel_tol * abs(value))
    return QuadratureResult(value, error, evals, converged)


def integrate_finite(f: Callable, a: float, b: float, tol: float = DEFAULT_TOL,
                     rel_tol: float = 0.0, points: Sequence[float] = (),
                     budget: int = DEFAULT_BUDGET) -> QuadratureResult:
    """Integrate ``f`` over ``[a, b]``; integrable endpoint singularities are fine
    because K21 never samples the endpoints, but log-type ones converge faster
    through :func:`integrate_log_endpoint`."""
    if not a < b:
        raise ValueError("need a < b")
    if tol <= 0:
        raise ValueError("tol must be positive")
    inner = [p for p in points if a < p < b]
    return _adaptive(f, [a, *inner, b], tol, rel_tol, budget)


def _exp_cutoff(g, start: float, rate: float, tol: float, u_cap: float) -> float:
    """Truncation point for an integrand with an exponential tail.

    Scans ``g`` on a grid of step ``1/(2 rate)`` over the whole range and
    returns a point just past the last sample whose tail bound
    ``4 |g| / rate`` exceeds ``tol/4``.  Mass far from ``start`` (e.g. a
    kernel exp(-s t) concentrating at t -> 0) is therefore not missed.
    """
    step = 0.5 / rate
    grid = start + step * np.arange(int((u_cap - start) / step) + 1)
    with np.errstate(all="ignore"):
        vals = np.abs(np.asarray(g(grid)))
    bad = ~np.isfinite(vals) | (4.0 * vals / rate > 0.25 * tol)
    if not bad.any():
        return min(start + 1.0 / rate, u_cap)
    last = int(np.flatnonzero(bad)[-1])
    return float(min(grid[min(last + 2, len(grid) - 1)], u_cap))


def _geometric_breaks(start: float, stop: float, step: float) -> list[float]:
    out = [start]
    width = step
    while out[-1] + width < stop:
        out.append(out[-1] + width)
        width *= 2.0
    out.append(stop)
    return out


def integrate_log_endpoint(f: Callable, a: float, b: float, tol: float = DEFAULT_TOL,
                           rel_tol: float = 0.0, singular: str = "left",
                           points: Sequence[float] = (),
                           budget: int = DEFAULT_BUDGET,
                           envelope: float | None = None) -> QuadratureResult:
    """Integrate over ``[a, b]`` with a (log-type) singularity at one endpoint.

    With ``singular="left"`` the map is ``t = a + (b - a) exp(-u)``; with
    ``"right"`` it is ``t = b - (b - a) exp(-u)``.  ``points`` are t-values
    that become breakpoints after mapping.  If ``envelope`` bounds ``|f|``
    the truncation point follows from it and ``f`` is not scanned.
    """
    if not a < b:
        raise ValueError("need a < b")
    width = b - a
    if singular == "left":
        def g(u):
            s = width * np.exp(-u)
            return f(a + s) * s
        mapped = [math.log(width / (p - a)) for p in points if a < p < b]
        base = a
    elif singular == "right":
        def g(u):
            s = width * np.exp(-u)
            return f(b - s) * s
        mapped = [math.log(width / (b - p)) for p in points if a < p < b]
        base = b
    else:
        raise ValueError("singular must be 'left' or 'right'")
    # Past this u the offset vanishes against the endpoint.
    if base == 0.0:
        u_cap = 700.0
    else:
        u_cap = max(1.0, math.log(width / (abs(base) * _EPS)))
        u_cap = min(u_cap, 700.0)
    if envelope is not None:
        u_stop = min(u_cap, max(1.0, math.log(64.0 * envelope * width / tol)))
    else:
        u_stop = _exp_cutoff(g, 0.0, 1.0, tol, u_cap)
    u_stop = max([u_stop, *[m + 4.0 for m in mapped if m < u_cap]])
    u_stop = min(u_stop, u_cap)
    breaks = _geometric_breaks(0.0, u_stop, 1.0) + [m for m in mapped if 0 < m < u_stop]
    res = _adaptive(g, breaks, 0.75 * tol, rel_tol, budget)
    rem = abs(complex(np.asarray(g(np.array([u_stop])))[0])) * 4.0
    return QuadratureResult(res.value, res.abs_error_estimate + rem,
                            res.evaluations + 1,
                            res.converged and res.abs_error_estimate + rem <= max(tol, rel_tol * abs(res.value)))


# Integrand in u = log t is evaluated while exp(u) * f(exp(u)) stays normal.
_LOG_TAIL_UMAX = 680.0
_LOG_TAIL_FIT = 40.0


def _log_tail_remainder(g, u_max: float, span: float):
    """Remainder of ``int_{u_max}^inf g(u) du`` under the model ``c/(u^2 + b)``.

    Returns (remainder, error estimate).  The estimate is the disagreement
    between fits on two different windows; if either fit is degenerate the
    crude bound ``4 |g(u_max)| u_max`` is used instead.
    """
    def fit(u1):
        g1, g2 = (complex(v) for v in np.asarray(g(np.array([u1, u_max]))))
        if g1 == 0 and g2 == 0:
            return 0.0
        if g1 == g2 or not (np.isfinite(g1) and np.isfinite(g2)):
            return None
        bb = (g2 * u_max ** 2 - g1 * u1 ** 2) / (g1 - g2)
        if abs(bb.imag) > 1e-6 * (abs(bb.real) + 1.0) or bb.real <= 0:
            return None
        c = g2 * (u_max ** 2 + bb.real)
        root = math.sqrt(bb.real)
        return c / root * math.atan2(root, u_max)

    r1 = fit(u_max - span)
    r2 = fit(u_max - 2 * span)
    if r1 is None or r2 is None:
        rem = complex(np.asarray(g(np.array([u_max])))[0]) * u_max
        return rem, 4.0 * abs(rem)
    return r1, abs(r1 - r2)


def integrate_semi_infinite(f: Callable, a: float, tol: float = DEFAULT_TOL,
                            tail: TailSpec = TailSpec(), rel_tol: float = 0.0,
                            points: Sequence[float] = (),
                            budget: int = DEFAULT_BUDGET) -> QuadratureResult:
    """Integrate ``f`` over ``[a, inf)`` using the declared tail behaviour."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if tail.kind == "exponential":
        rate = tail.rate
        stop = _exp_cutoff(f, a, rate, tol, a + 745.0 / rate)
        inner = [p for p in points if a < p]
        stop = max([stop, *[p + 4.0 / rate for p in inner]])
        breaks = _geometric_breaks(a, stop, 1.0 / rate) + [p for p in inner if p < stop]
        res = _adaptive(f, breaks, 0.75 * tol, rel_tol, budget)
        rem = 4.0 * abs(complex(np.asarray(f(np.array([stop])))[0])) / rate
        err = res.abs_error_estimate + rem
        return QuadratureResult(res.value, err, res.evaluations + 1,
                                res.converged and err <= max(tol, rel_tol * abs(res.value)))
    if tail.kind == "log_squared_reciprocal":
        if a <= 0:
            raise ValueError("log_squared_reciprocal tail needs a > 0")

        def g(u):
            t = np.exp(u)
            return f(t) * t
        u0 = math.log(a)
        u_max = _LOG_TAIL_UMAX
        mapped = [math.log(p) for p in points if a < p < math.exp(u_max)]
        breaks = [u0, *_geometric_breaks(u0, u_max, 1.0)[1:], *mapped]
        res = _adaptive(g, breaks, 0.5 * tol, rel_tol, budget)
        rem, rem_err = _log_tail_remainder(g, u_max, _LOG_TAIL_FIT)
        if not np.iscomplexobj(res.value):
            rem = complex(rem).real
        err = res.abs_error_estimate + rem_err
        value = res.value + rem
        return QuadratureResult(value, err, res.evaluations + 5,
                                res.converged and err <= max(tol, rel_tol * abs(value)))
    # Generic decay: compactify with t = a + s/(1 - s).
    def h(s):
        one = 1.0 - s
        return f(a + s / one) / (one * one)
    inner = [(p - a) / (1.0 + p - a) for p in points if p > a]
    return _adaptive(h, [0.0, 0.5, 0.75, 0.875, 0.9375, 1.0, *inner], tol, rel_tol, budget)


def integrate_against_rho(kernel: Callable, tol: float = DEFAULT_TOL, rel_tol: float = 0.0,
                          rho: Callable | None = None, points: Sequence[float] = (),
                          budget: int = DEFAULT_BUDGET) -> QuadratureResult:
    """``int_0^inf rho(t) kernel(t) dt`` split at ``t0``, 1 and 2.

    (0, t0] and both sides of the kink at 1 use the exponential endpoint map,
    [2, inf) uses the ``1/(t log^2 t)`` tail rule.  Each of the four pieces is
    given a quarter of ``tol``; pieces are summed in a fixed order.
    """
    from .density import rho as rho_default

    r = rho_default if rho is None else rho

    def f(t):
        # kernels like (x + t)^-p overflow harmlessly to 0 far out in the tail
        with np.errstate(over="ignore", under="ignore"):
            return r(t) * kernel(t)

    return sum(rho_pieces(f, tol, rel_tol, points, budget),
               start=QuadratureResult(0.0, 0.0, 0, True))


def rho_pieces(f: Callable, tol: float, rel_tol: float, points: Sequence[float],
               budget: int) -> list[QuadratureResult]:
    """The four pieces (0,t0], [t0,1), (1,2], [2,inf) of ``int f``."""
    from .density import T0

    q = 0.25 * tol
    return [
        integrate_log_endpoint(f, 0.0, T0, q, rel_tol, "left", points, budget),
        integrate_log_endpoint(f, T0, 1.0, q, rel_tol, "right", points, budget),
        integrate_log_endpoint(f, 1.0, 2.0, q, rel_tol, "left", points, budget),
        integrate_semi_infinite(f, 2.0, q, TailSpec.log_squared_reciprocal(), rel_tol,
                                points, budget),
    ]

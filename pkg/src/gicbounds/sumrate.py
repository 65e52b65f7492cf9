"""
Upper and lower bounds on the sum capacity of a weak interference channel.

Closed forms (ETW, Kramer, the half-bit lower bound and the treat-interference-
as-noise subclass) and two optimized bounds: the Han-Kobayashi rate ``rho``
maximized over a three-parameter power/time split, and Etkin's upper bound
minimized over its correlation parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .channel import (BoundValue, ChannelParams, clamp_roundoff, log2,
                      require_symmetric_weak, require_weak)
from .errors import DomainError, InfeasibleGridError
from .optimizer import GridSpec, OptimizationResult, optimize
from .regions import telatar_tse_region

HK_GRID = GridSpec(41, 3, 5.0)
ETKIN_GRID = GridSpec(61, 3, 5.0)

#: Positive root of P**4 + P**3 - 6 P**2 - 7 P - 2.
VALIDITY_QUARTIC = (1.0, 1.0, -6.0, -7.0, -2.0)


def min_of_max(a: float, b: float, c: float) -> float:
    """``min(max(a, b), c)``, equal to ``max(min(a, c), min(b, c))``."""
    return min(max(a, b), c)


# -- closed forms ----------------------------------------------------------

def _etw_sum_terms(params: ChannelParams) -> Tuple[float, float, float]:
    p1, p2, a12, a21 = params.p1, params.p2, params.a12, params.a21
    return (log2(1 + p1) + log2(1 + p2 / (1 + a21 * p1)),
            log2(1 + p2) + log2(1 + p1 / (1 + a12 * p2)),
            log2(1 + a12 * p2 + p1 / (1 + a21 * p1))
            + log2(1 + a21 * p1 + p2 / (1 + a12 * p2)))


def etw_sum_upper(params: ChannelParams) -> BoundValue:
    """Sum-rate upper bound implied by the ETW outer region."""
    require_weak(params)
    terms = _etw_sum_terms(params)
    k = int(np.argmin(terms))
    return BoundValue(0.5 * terms[k], True, f"ETW[{k + 1}]", "etw sum-rate bound",
                      {f"term{i + 1}": 0.5 * t for i, t in enumerate(terms)})


def validity_quartic(p: float) -> float:
    return p ** 4 + p ** 3 - 6 * p ** 2 - 7 * p - 2


def validity_root() -> float:
    """The unique positive root of the validity quartic (about 2.55003)."""
    roots = np.roots(VALIDITY_QUARTIC)
    real = roots[np.isclose(roots.imag, 0.0) & (roots.real > 0)].real
    return float(real.max())


def validity_gap(p: float, a):
    """Gap between ``C`` and the rate where the two weighted-sum lines cross.

    Positive on ``(0, 1]`` iff one of the sum constraints shapes the outer
    region boundary. Accepts scalar or array ``a``.
    """
    a = np.asarray(a, dtype=float)
    s = (np.log2(1 + p + a * p) + np.log2(1 + p / (1 + a * p))
         + np.log2(1 + a * p + p / (1 + a * p)))
    out = 0.5 * np.log2(1 + p) - s / 6
    return float(out) if out.ndim == 0 else out


def validity_certificate(p: float) -> Tuple[bool, float]:
    """Whether the half-bit lower bound is certified at symmetric power ``p``.

    Returns ``(valid, quartic_value)``; valid iff the quartic is nonnegative.
    """
    if not p > 0:
        raise DomainError(f"p must be positive, got {p}")
    q = validity_quartic(p)
    return q >= 0, q


def hk_sum_lower_half_bit(params: ChannelParams) -> BoundValue:
    """Sum rate of the outer region's sum-constraint boundary minus one bit.

    Only certified for symmetric channels with power above the quartic root;
    asymmetric channels are reported with ``valid=False``.
    """
    region = telatar_tse_region(params)
    value = region.sum_rate_bound() - 1.0
    if params.is_symmetric:
        ok, _ = validity_certificate(params.p1)
        note = "certified" if ok else "power below validity threshold"
    else:
        ok, note = False, "condition unverified"
    return BoundValue(value, ok, "half-bit", note)


def kramer_sum_upper(p: float, a: float) -> BoundValue:
    if not 0 < a <= 1:
        raise DomainError(f"a must lie in (0, 1], got {a}")
    if not p > 0:
        raise DomainError(f"p must be positive, got {p}")
    k = 1 / a - 1
    b = 1 / a ** 2 + 2 * p * k - 1
    disc = b * b - 4 * p * p * k * k
    if disc < 0:
        if disc < -1e-9 * max(1.0, b * b):
            raise DomainError(f"negative discriminant {disc}")
        disc = 0.0
    return BoundValue(0.5 * log2(1 + 2 * p + b / 2 - 0.5 * math.sqrt(disc)),
                      True, "Kramer", "kramer sum-rate bound", {"B": b})


def tin_sum_rate(p: float, a: float) -> float:
    return log2(1 + p / (1 + a * p))


def tin_power_cap(a: float) -> float:
    return (math.sqrt(a) - 2 * a) / (2 * a * a)


def tin_subclass(p: float, a: float) -> Tuple[bool, Optional[BoundValue]]:
    """Whether treating interference as noise is sum-rate optimal."""
    if not (p > 0 and a > 0):
        raise DomainError("p and a must be positive")
    inside = a < 0.25 and p <= tin_power_cap(a)
    if not inside:
        return False, None
    return True, BoundValue(tin_sum_rate(p, a), True, "TIN", "exact")


# -- Han-Kobayashi three-parameter lower bound ----------------------------

@dataclass(frozen=True)
class HkSplit:
    """Private-power fractions ``u``, ``v`` and time-sharing parameter ``t``."""

    u: float
    v: float
    t: float

    def __post_init__(self):
        if not (0 <= self.u <= 1 and 0 <= self.v <= 1 and 0 <= self.t <= 0.5):
            raise DomainError(f"split out of range: {self}")


def hk_rho(p: float, a: float, u, v, t):
    """Han-Kobayashi sum rate for the split ``(u, v, t)`` (vectorized).

    A fraction ``2t`` of the time both users send, with power ``2tP`` split
    into private ``u``/``v`` and common parts; the rest of the time the users
    take turns alone.
    """
    u, v, t = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (u, v, t)))
    ub, vb = 1 - u, 1 - v
    q = 2 * t * p
    base = (t * np.log2(1 + u * q / (1 + a * v * q))
            + t * np.log2(1 + v * q / (1 + a * u * q))
            + (1 - 2 * t) / 2 * np.log2(1 + 2 * (1 + 2 * t) * p))
    m1 = (t / 2 * np.log2(1 + (ub * q + a * vb * q) / (1 + u * q + a * v * q))
          + t / 2 * np.log2(1 + (vb * q + a * ub * q) / (1 + v * q + a * u * q)))
    m2 = (t * np.log2(1 + ub * q / (1 + u * q + a * v * q))
          + t * np.log2(1 + vb * q / (1 + v * q + a * u * q)))
    m3 = (t * np.log2(1 + a * ub * q / (1 + a * u * q + v * q))
          + t * np.log2(1 + a * vb * q / (1 + u * q + a * v * q)))
    out = base + np.minimum(np.minimum(m1, m2), m3)
    return float(out) if out.ndim == 0 else out


def hk_sum_lower_optimized(p: float, a: float,
                           grid: GridSpec = HK_GRID) -> OptimizationResult:
    """Maximize :func:`hk_rho` over ``[0,1] x [0,1] x [0,1/2]``."""
    require_symmetric_weak(p, a)
    _check_grid(grid)
    return optimize(lambda u, v, t: hk_rho(p, a, u, v, t),
                    [(0.0, 1.0), (0.0, 1.0), (0.0, 0.5)], "max", grid)


# -- Etkin's upper bound -----------------------------------------------------

@dataclass(frozen=True)
class EtkinParams:
    alpha_e: float
    sigma_e: float
    sign: int
    a: float

    @property
    def rho_e(self) -> float:
        return float(_etkin_rho(self.alpha_e, self.sigma_e, self.sign, self.a))

    @property
    def gamma_e(self) -> float:
        return float(_etkin_gamma(self.alpha_e, self.sigma_e, self.rho_e, self.a))


def _etkin_rho(alpha, sigma, sign, a):
    rad = (1 - alpha ** 2) * (1 - sigma ** 2 * a)
    return alpha * sigma * np.sqrt(a) + sign * np.sqrt(rad)


def _etkin_gamma(alpha, sigma, rho, a):
    return alpha ** 2 - 2 * alpha * rho * sigma * np.sqrt(a) + sigma ** 2 * a


def etkin_objective(p: float, a: float, alpha, sigma, sign: int):
    """Etkin's sum-rate bound at ``(alpha, sigma, sign)``; ``nan`` if infeasible."""
    alpha = np.asarray(alpha, dtype=float)
    sigma = np.asarray(sigma, dtype=float)
    with np.errstate(all="ignore"):
        rad = (1 - alpha ** 2) * (1 - sigma ** 2 * a)
        rho = _etkin_rho(alpha, sigma, sign, a)
        gamma = _etkin_gamma(alpha, sigma, rho, a)
        noise = (1 - rho ** 2) * sigma ** 2
        t1 = 0.5 * np.log2(1 + p * (1 + alpha ** 2) * gamma / noise)
        t2 = np.log2(1 + alpha ** 2 * p * gamma / noise)
        num = ((1 + p * (1 + a)) * (p * (1 + alpha ** 2) + sigma ** 2)
               - (p * (1 + alpha * np.sqrt(a)) + rho * sigma) ** 2)
        den = p * (1 + alpha ** 2) * gamma + noise
        val = np.minimum(t1, t2) + np.log2(num / den)
        ok = ((rad >= 0) & (np.abs(rho) <= 1) & (gamma >= 0) & (noise > 0)
              & (num > 0) & (den > 0) & np.isfinite(val))
        out = np.where(ok, val, np.nan)
    return float(out) if out.ndim == 0 else out


def etkin_sum_upper(p: float, a: float,
                    grid: GridSpec = ETKIN_GRID) -> OptimizationResult:
    """Minimize Etkin's bound over ``alpha in [-1,1]``, ``sigma in [0, 1/sqrt(a)]``
    and both signs of ``rho``.

    ``argopt`` is ``(alpha, sigma, sign)``; ties between signs go to ``+1``.
    """
    require_symmetric_weak(p, a)
    _check_grid(grid)
    box = [(-1.0, 1.0), (0.0, 1.0 / math.sqrt(a))]
    best = None
    total = 0
    for sign in (1, -1):
        try:
            r = optimize(lambda x, y, s=sign: etkin_objective(p, a, x, y, s),
                         box, "min", grid)
        except InfeasibleGridError:
            continue
        total += r.grid_points
        if best is None or r.value < best.value:
            best = OptimizationResult(r.value, r.argopt + (float(sign),), 0,
                                      r.refinement_rounds)
    if best is None:
        raise InfeasibleGridError("no feasible Etkin parameters on the grid")
    return OptimizationResult(best.value, best.argopt, total, best.refinement_rounds)


def _check_grid(grid: GridSpec):
    if grid.points_per_axis < 11:
        raise DomainError("at least 11 grid points per axis are required")


# -- composition -----------------------------------------------------------

def best_sum_bounds(p: float, a: float, hk_grid: GridSpec = HK_GRID,
                    etkin_grid: GridSpec = ETKIN_GRID) -> Tuple[BoundValue, BoundValue]:
    """Tightest available ``(upper, lower)`` sum-rate bounds for a symmetric
    weak channel."""
    params = require_symmetric_weak(p, a)
    uppers = {
        "ETW": etw_sum_upper(params).value,
        "Etkin": etkin_sum_upper(p, a, etkin_grid).value,
        "Kramer": kramer_sum_upper(p, a).value,
    }
    inside, exact = tin_subclass(p, a)
    if inside:
        uppers["TIN-exact"] = exact.value
    lowers = {
        "HK": hk_sum_lower_optimized(p, a, hk_grid).value,
        "TIN": tin_sum_rate(p, a),
    }
    half = hk_sum_lower_half_bit(params)
    if half.valid:
        lowers["half-bit"] = half.value
    up_tag = min(uppers, key=lambda k: (uppers[k], k))
    lo_tag = max(lowers, key=lambda k: (lowers[k], k))
    upper = BoundValue(uppers[up_tag], True, up_tag,
                       "exact" if inside else "sum-rate upper bound", dict(uppers))
    lower = BoundValue(clamp_roundoff(lowers[lo_tag]), True, lo_tag,
                       "sum-rate lower bound", dict(lowers))
    return upper, lower

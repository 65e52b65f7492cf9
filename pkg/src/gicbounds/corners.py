"""
Interval bounds on the corner points of the capacity region.

A corner point is where one user runs at its interference-free capacity and
the other at the largest rate that still allows reliable decoding. The
functions here bound the unknown coordinate of that point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .channel import (BoundValue, ChannelParams, Regime, RatePair, classify,
                      conjectured_corner_rates, log2, require_weak,
                      single_user_capacity)
from .errors import DomainError, RegimeError

ETW = "ETW"
KRAMER = "Kramer"


@dataclass(frozen=True)
class CornerInterval:
    """Closed interval ``[lo, hi]`` for the unknown rate of one corner."""

    lo: float
    hi: float
    active_term: str

    def __iter__(self):
        yield self.lo
        yield self.hi

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class CornerBounds:
    """Bounds on both corners of a weak channel.

    ``corner_at_c1`` bounds R2 at the corner where ``R1 = C1``;
    ``corner_at_c2`` bounds R1 at the corner where ``R2 = C2``.
    """

    corner_at_c1: CornerInterval
    corner_at_c2: CornerInterval


def _etw_gap(params: ChannelParams, p_other: float) -> float:
    return 0.5 * log2(1 + p_other / ((1 + params.a21 * params.p1)
                                     * (1 + params.a12 * params.p2)))


def _pick(etw: float, kramer: float) -> Tuple[float, str]:
    # ties go to Kramer
    if etw < kramer:
        return etw, ETW
    return kramer, KRAMER


def weak_corner_bounds(params: ChannelParams) -> CornerBounds:
    require_weak(params)
    p1, p2 = params.p1, params.p2
    rstar = conjectured_corner_rates(params)
    hi2, tag2 = _pick(rstar.r2 + _etw_gap(params, p2), 0.5 * log2(1 + p2 / (1 + p1)))
    hi1, tag1 = _pick(rstar.r1 + _etw_gap(params, p1), 0.5 * log2(1 + p1 / (1 + p2)))
    return CornerBounds(CornerInterval(rstar.r2, hi2, tag2),
                        CornerInterval(rstar.r1, hi1, tag1))


def rate_tradeoff_bound(params: ChannelParams, epsilon: float,
                        constrained_user: int = 1) -> BoundValue:
    """Upper bound on the other user's rate when ``R_k >= C_k - epsilon``.

    ``constrained_user`` is ``k``. The Kramer part uses the linear cap on its
    epsilon penalty, so the result decreases to the corner interval's upper
    end as ``epsilon`` goes to zero.
    """
    require_weak(params)
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    if constrained_user not in (1, 2):
        raise DomainError(f"constrained_user must be 1 or 2, got {constrained_user}")
    if constrained_user == 2:
        swapped = rate_tradeoff_bound(params.swapped(), epsilon, 1)
        return BoundValue(swapped.value, swapped.valid, swapped.active_term,
                          "bound on R1 given R2 >= C2 - epsilon")
    p1, p2, a21 = params.p1, params.p2, params.a21
    rstar = conjectured_corner_rates(params)
    etw = rstar.r2 + _etw_gap(params, p2) + 2 * epsilon
    kramer = 0.5 * log2(1 + p2 / (1 + p1)) + (1 + (1 + p1) / (a21 * p2)) * epsilon
    value, tag = _pick(etw, kramer)
    return BoundValue(value, True, tag, "bound on R2 given R1 >= C1 - epsilon",
                      {"etw": etw, "kramer": kramer})


def etw_kramer_threshold(a: float) -> float:
    """SNR above which the ETW term beats Kramer's in the symmetric corner bound."""
    if not 0 < a < 1:
        raise DomainError(f"a must lie in (0, 1), got {a}")
    return (2 * a * a - a + 1 + math.sqrt(5 * a * a - 2 * a + 1)) / (2 * a * a * (1 - a))


def symmetric_corner_upper(p: float, a: float) -> BoundValue:
    """Upper bound on the corner rate of a weak symmetric channel.

    The active term is ETW iff ``p`` strictly exceeds
    :func:`etw_kramer_threshold`; both candidate values are in ``details``.
    """
    if not p > 0:
        raise DomainError(f"p must be positive, got {p}")
    thr = etw_kramer_threshold(a)
    etw = 0.5 * log2(1 + a * p / (1 + p)) + 0.5 * log2(1 + p / (1 + a * p) ** 2)
    kramer = 0.5 * log2(1 + p / (1 + p))
    tag = ETW if p > thr else KRAMER
    return BoundValue(min(etw, kramer), True, tag, "symmetric corner rate",
                      {"etw": etw, "kramer": kramer, "threshold": thr})


def threshold_curve(a_lo: float = 0.01, a_hi: float = 0.99,
                    step: float = 0.002) -> np.ndarray:
    """Rows ``(a, threshold in dB)`` on a uniform grid of cross gains."""
    n = int(round((a_hi - a_lo) / step)) + 1
    a = np.round(a_lo + step * np.arange(n), 12)
    thr = np.array([etw_kramer_threshold(x) for x in a])
    return np.column_stack([a, 10 * np.log10(thr)])


def mixed_corner_report(params: ChannelParams,
                        epsilon: float = 0.0) -> Tuple[BoundValue, BoundValue]:
    """Corner bounds for a mixed (or degraded) channel.

    For ``a12 >= 1 > a21`` the first entry bounds R2 when ``R1 >= C1 - eps``
    (the corner that attains the sum rate) and the second bounds R1 when
    ``R2 >= C2 - eps``. The mirrored channel is handled by swapping indices,
    in which case the entries bound R1 and R2 respectively.

    The second entry holds up to an unspecified vanishing function of
    epsilon; only its epsilon = 0 value is reported and it is marked valid
    only for epsilon = 0.
    """
    kind = classify(params).kind
    if kind not in (Regime.MIXED, Regime.DEGRADED):
        raise RegimeError(f"mixed regime required, got {kind}")
    if not epsilon >= 0:
        raise DomainError(f"epsilon must be >= 0, got {epsilon}")
    if params.a12 < 1:
        return _mixed_corners(params.swapped(), epsilon, ("R2", "R1", "C2", "C1"))
    return _mixed_corners(params, epsilon, ("R1", "R2", "C1", "C2"))


def _mixed_corners(params, epsilon, names):
    r_s, r_w, c_s, c_w = names
    p1, p2, a12, a21 = params.p1, params.p2, params.a12, params.a21
    if 1 - a12 < (a12 * a21 - 1) * p1:
        first = BoundValue(0.5 * log2(1 + p2 / (1 + a21 * p1)) + epsilon, True,
                           "treat-interference-as-noise",
                           f"{r_w} bound at {r_s} ~ {c_s}; strictly smaller than conjecture")
    else:
        r2star = conjectured_corner_rates(params).r2
        first = BoundValue(r2star + epsilon, True, "conjecture",
                           f"{r_w} bound at {r_s} ~ {c_s}; coincides with conjecture")
    second = BoundValue(0.5 * log2(1 + p1 / (1 + p2)), epsilon == 0, "Kramer",
                        f"{r_s} bound at {r_w} ~ {c_w}; asymptotic in epsilon")
    return first, second


def one_sided_corner_bounds(p1: float, p2: float,
                            a: float) -> Tuple[RatePair, CornerInterval]:
    """Corners of a weak one-sided channel with ``a12 = 0`` and ``a21 = a``.

    Returns the exact sum-rate corner ``(C1, R2)`` and the interval for R1 at
    the other corner ``(R1, C2)``.
    """
    if not 0 < a < 1:
        raise DomainError(f"a must lie in (0, 1), got {a}")
    ChannelParams(p1, p2, 0.0, a)
    exact = RatePair(single_user_capacity(p1), 0.5 * log2(1 + p2 / (1 + a * p1)))
    interval = CornerInterval(0.5 * log2(1 + a * p1 / (1 + p2)),
                              0.5 * log2(1 + p1 / (1 + p2)), KRAMER)
    return exact, interval

"""
Bounds on the excess rate: sum capacity minus the best total rate at a
corner point of the capacity region.

The excess rate is nonnegative by definition, so every bound here is clamped
at zero; raw values are available where the asymptotic analysis needs them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .channel import (BoundValue, ChannelParams, clamp_roundoff, log2,
                      require_symmetric_weak, require_weak)
from .errors import DomainError
from .optimizer import GridSpec
from .sumrate import (ETKIN_GRID, HK_GRID, _etw_sum_terms, best_sum_bounds,
                      etkin_sum_upper, etw_sum_upper, hk_sum_lower_half_bit,
                      kramer_sum_upper, validity_certificate, min_of_max,
                      tin_subclass)


@dataclass(frozen=True)
class DeltaReport:
    upper_simple: BoundValue
    lower_simple: BoundValue
    upper_improved: BoundValue
    lower_improved: BoundValue
    corner_total_lower: float
    corner_total_upper: float
    asymptotic_upper: float
    asymptotic_lower: float


def corner_total_bounds(params: ChannelParams) -> Tuple[float, float]:
    """Bounds ``(lower, upper)`` on the largest ``R1 + R2`` over the corners."""
    require_weak(params)
    p1, p2, a12, a21 = params.p1, params.p2, params.a12, params.a21
    mac2 = log2(1 + p2 + a21 * p1)
    mac1 = log2(1 + p1 + a12 * p2)
    lower = 0.5 * max(mac2, mac1)
    denom = (1 + a21 * p1) * (1 + a12 * p2)
    upper = 0.5 * min_of_max(mac2 + log2(1 + p1 / denom),
                             mac1 + log2(1 + p2 / denom),
                             log2(1 + p1 + p2))
    return lower, upper


def delta_upper_general(params: ChannelParams) -> BoundValue:
    """ETW sum bound minus the achievable corner total, any weak channel."""
    lower, _ = corner_total_bounds(params)
    raw = 0.5 * min(_etw_sum_terms(params)) - lower
    return BoundValue(max(0.0, clamp_roundoff(raw)), True, "ETW", "simple upper",
                      {"raw": raw})


def delta_lower_general(params: ChannelParams) -> BoundValue:
    """Half-bit sum lower bound minus the corner-total upper bound.

    Certified only for symmetric channels above the validity power.
    """
    _, upper = corner_total_bounds(params)
    half = hk_sum_lower_half_bit(params)
    raw = half.value - upper
    return BoundValue(max(0.0, raw), half.valid, "half-bit", half.note, {"raw": raw})


def delta_upper_simple(p: float, a: float) -> BoundValue:
    """Closed-form upper bound on the excess rate of a symmetric channel.

    Defined for ``0 < a <= 1``; at ``a = 1`` it is exactly zero.
    """
    if not (p > 0 and 0 < a <= 1):
        raise DomainError(f"need p > 0 and 0 < a <= 1, got p={p}, a={a}")
    if a == 1:
        return BoundValue(0.0, True, "ETW[1]", "strong boundary", {"raw": 0.0})
    require_symmetric_weak(p, a)
    ap = 1 + a * p
    t1 = log2((1 + p) / ap)
    t2 = log2(1 + p / ap ** 2 + a * p * (p + ap ** 2) / (ap * (1 + (a + 1) * p)))
    raw = 0.5 * min(t1, t2)
    tag = "ETW[1]" if t1 <= t2 else "ETW[3]"
    return BoundValue(max(0.0, clamp_roundoff(raw)), True, tag, "simple upper",
                      {"raw": raw})


def delta_lower_simple(p: float, a: float) -> BoundValue:
    """Closed-form lower bound on the excess rate of a symmetric channel.

    ``details['raw']`` keeps the unclamped value.
    """
    if not (p > 0 and 0 < a <= 1):
        raise DomainError(f"need p > 0 and 0 < a <= 1, got p={p}, a={a}")
    valid, _ = validity_certificate(p)
    if a == 1:
        return BoundValue(0.0, valid, "half-bit", "strong boundary", {"raw": 0.0})
    require_symmetric_weak(p, a)
    raw = delta_lower_raw(p, a)
    return BoundValue(max(0.0, raw), valid, "half-bit",
                      "certified" if valid else "power below validity threshold",
                      {"raw": raw})


def delta_lower_raw(p: float, a: float) -> float:
    ap = 1 + a * p
    mac = log2(1 + (a + 1) * p)
    sum_lo = min(mac + log2(1 + p / ap), 2 * log2(ap + p / ap))
    corner_hi = min(mac + log2(1 + p / ap ** 2), log2(1 + 2 * p))
    return 0.5 * (sum_lo - corner_hi) - 1


def corner_total_upper_symmetric(p: float, a: float) -> float:
    ap = 1 + a * p
    return 0.5 * min(log2(1 + (a + 1) * p) + log2(1 + p / ap ** 2), log2(1 + 2 * p))


def tin_delta_upper(p: float, a: float) -> float:
    """Excess-rate upper bound when treating interference as noise is optimal."""
    ap = 1 + a * p
    return 0.5 * log2(1 / ap + p / ap ** 2)


def delta_asymptotic_bounds(a: float) -> Tuple[float, float]:
    """Large-power limits ``(upper, lower)`` at a fixed cross gain ``a``."""
    if not 0 < a <= 1:
        raise DomainError(f"a must lie in (0, 1], got {a}")
    upper = 0.5 * log2(1 / a)
    lower = max(0.0, 0.5 * log2(1 + 1 / a) - 1)
    return upper, lower


def _improved_upper(p, a, sum_uppers, ct_lo) -> BoundValue:
    candidates = {k: v - ct_lo for k, v in sum_uppers.items()}
    candidates["simple"] = delta_upper_simple(p, a).value
    if tin_subclass(p, a)[0]:
        candidates["TIN-subclass"] = tin_delta_upper(p, a)
    tag = min(candidates, key=lambda k: (candidates[k], k))
    return BoundValue(max(0.0, clamp_roundoff(candidates[tag])), True, tag,
                      "improved upper", candidates)


def delta_upper_improved(p: float, a: float,
                         etkin_grid: GridSpec = ETKIN_GRID) -> BoundValue:
    """Improved upper bound alone (skips the lower-bound optimization)."""
    params = require_symmetric_weak(p, a)
    ct_lo, _ = corner_total_bounds(params)
    uppers = {
        "ETW": etw_sum_upper(params).value,
        "Etkin": etkin_sum_upper(p, a, etkin_grid).value,
        "Kramer": kramer_sum_upper(p, a).value,
    }
    return _improved_upper(p, a, uppers, ct_lo)


def delta_bounds_improved(p: float, a: float, hk_grid: GridSpec = HK_GRID,
                          etkin_grid: GridSpec = ETKIN_GRID) -> DeltaReport:
    """Simple, improved and asymptotic excess-rate bounds for a symmetric
    weak channel."""
    params = require_symmetric_weak(p, a)
    ct_lo, ct_hi = corner_total_bounds(params)
    up_s = delta_upper_simple(p, a)
    lo_s = delta_lower_simple(p, a)
    upper, lower = best_sum_bounds(p, a, hk_grid, etkin_grid)
    up_i = _improved_upper(p, a, upper.details, ct_lo)

    hk = lower.details["HK"]
    half = hk_sum_lower_half_bit(params)
    sum_lo, tag = hk, "HK"
    if half.valid and half.value > hk:
        sum_lo, tag = half.value, "half-bit"
    raw = sum_lo - ct_hi
    lo_i = BoundValue(max(0.0, raw, lo_s.value if lo_s.valid else 0.0), True, tag,
                      "improved lower", {"raw": raw})

    asym_u, asym_l = delta_asymptotic_bounds(a)
    return DeltaReport(up_s, lo_s, up_i, lo_i, ct_lo, ct_hi, asym_u, asym_l)

"""
High-power behaviour under the coupling ``a = P**(alpha - 1)``.

``gdof`` is the sum-capacity slope in ``log P``, ``delta_slope`` the slope of
the excess rate, and ``normalized_loss`` their ratio.
"""

from __future__ import annotations

import math
from typing import Iterable, List, Tuple

import numpy as np

from .errors import DomainError
from .excess import delta_lower_raw, delta_upper_simple
from .sumrate import validity_root


def _check(alpha):
    if not (math.isfinite(alpha) and alpha >= 0):
        raise DomainError(f"alpha must be finite and >= 0, got {alpha}")


def gdof(alpha: float) -> float:
    """Generalized degrees of freedom of the symmetric channel."""
    _check(alpha)
    if alpha < 0.5:
        return 1 - alpha
    if alpha < 2 / 3:
        return alpha
    if alpha < 1:
        return 1 - alpha / 2
    if alpha < 2:
        return alpha / 2
    return 1.0


def delta_slope(alpha: float) -> float:
    """Asymptotic slope of the excess rate in ``log P``."""
    _check(alpha)
    if alpha < 2 / 3:
        return abs(0.5 - alpha)
    if alpha < 1:
        return (1 - alpha) / 2
    return 0.0


def normalized_loss(alpha: float) -> float:
    """Asymptotic fraction of the sum rate lost by operating at a corner."""
    _check(alpha)
    if alpha < 0.5:
        return (1 - 2 * alpha) / (2 * (1 - alpha))
    if alpha < 2 / 3:
        return 1 - 1 / (2 * alpha)
    if alpha < 1:
        return (1 - alpha) / (2 - alpha)
    return 0.0


def convergence_probe(alpha: float,
                      p_values: Iterable[float]) -> List[Tuple[float, float, float]]:
    """Normalized simple bounds along ``a = P**(alpha - 1)``.

    Returns rows ``(P, upper/log2 P, lower/log2 P)`` in the order given;
    the lower column uses the unclamped bound. Both columns tend to
    :func:`delta_slope` as ``P`` grows. For ``alpha >= 1`` the excess rate
    is zero and so are both columns.
    """
    _check(alpha)
    p_values = [float(p) for p in p_values]
    if any(b <= a for a, b in zip(p_values, p_values[1:])):
        raise DomainError("p_values must be strictly ascending")
    rows = []
    for p in p_values:
        if alpha >= 1:
            if not p > 1:
                raise DomainError(f"P must exceed 1, got {p}")
            rows.append((p, 0.0, 0.0))
            continue
        if not p > validity_root():
            raise DomainError(f"P must exceed {validity_root():.5f}, got {p}")
        a = p ** (alpha - 1)
        lp = math.log2(p)
        rows.append((p, delta_upper_simple(p, a).details["raw"] / lp,
                     delta_lower_raw(p, a) / lp))
    return rows


def gdof_table(alpha_max: float = 2.5, step: float = 0.005) -> np.ndarray:
    """Rows ``(alpha, gdof, delta_slope)`` on a uniform grid."""
    n = int(round(alpha_max / step)) + 1
    alphas = np.round(step * np.arange(n), 12)
    return np.array([(x, gdof(x), delta_slope(x)) for x in alphas])

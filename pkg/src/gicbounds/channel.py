"""
Two-user Gaussian interference channel in standard form.

The channel is described by four numbers: the transmit powers ``p1``, ``p2``
and the cross-link gains ``a12`` (user 2 into receiver 1) and ``a21``
(user 1 into receiver 2). Direct gains and noise variances are normalized
to one. All rates are in bits per channel use (base-2 logarithms).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .errors import DomainError, RegimeError

#: Weak cross gains below this are rejected instead of treated as one-sided.
MIN_WEAK_GAIN = 1e-12


def log2(x: float) -> float:
    return math.log2(x)


def clamp_roundoff(x: float, tol: float = 1e-12) -> float:
    """Map tiny negative roundoff (``-tol < x < 0``) to exactly zero."""
    if -tol < x < 0.0:
        return 0.0
    return x


class Regime(enum.Enum):
    WEAK = "Weak"
    STRONG = "Strong"
    VERY_STRONG = "VeryStrong"
    MIXED = "Mixed"
    DEGRADED = "Degraded"
    ONE_SIDED_WEAK = "OneSidedWeak"
    ONE_SIDED_STRONG = "OneSidedStrong"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ChannelParams:
    """Standard-form parameters of a two-user Gaussian interference channel.

    Parameters
    ----------
    p1, p2 : float
        Transmit power constraints (linear, strictly positive).
    a12, a21 : float
        Cross-link power gains into receiver 1 and receiver 2 (linear, >= 0).
    """

    p1: float
    p2: float
    a12: float
    a21: float

    def __post_init__(self):
        for name in ("p1", "p2", "a12", "a21"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
        if self.p1 <= 0 or self.p2 <= 0:
            raise DomainError(
                f"powers must be positive, got p1={self.p1}, p2={self.p2}")
        if self.a12 < 0 or self.a21 < 0:
            raise DomainError(
                f"cross gains must be >= 0, got a12={self.a12}, a21={self.a21}")

    @classmethod
    def symmetric(cls, p: float, a: float) -> "ChannelParams":
        return cls(p, p, a, a)

    def swapped(self) -> "ChannelParams":
        """The same channel with the user indices exchanged."""
        return ChannelParams(self.p2, self.p1, self.a21, self.a12)

    @property
    def is_symmetric(self) -> bool:
        return self.a12 == self.a21 and self.p1 == self.p2

    @property
    def is_weak(self) -> bool:
        return 0 < self.a12 < 1 and 0 < self.a21 < 1


@dataclass(frozen=True)
class RegimeClass:
    kind: Regime
    symmetric: bool
    description: str = ""


@dataclass(frozen=True)
class RatePair:
    r1: float
    r2: float

    def __post_init__(self):
        if not (math.isfinite(self.r1) and math.isfinite(self.r2)):
            raise DomainError("rates must be finite")
        if self.r1 < 0 or self.r2 < 0:
            raise DomainError(f"rates must be >= 0, got ({self.r1}, {self.r2})")

    def __iter__(self):
        yield self.r1
        yield self.r2


@dataclass(frozen=True)
class BoundValue:
    """A scalar rate bound together with its validity certificate.

    When ``valid`` is false the value is diagnostic only and must not be
    used as a guarantee.
    """

    value: float
    valid: bool = True
    active_term: Optional[str] = None
    note: str = ""
    details: Mapping[str, float] = field(default_factory=dict)

    def __float__(self) -> float:
        return float(self.value)


def classify(params: ChannelParams) -> RegimeClass:
    """Classify a channel by its cross-link gains.

    Boundary gains use the non-strict inequalities, so ``a12 = a21 = 1`` is
    Strong. VeryStrong takes precedence over Strong and Degraded over Mixed.
    """
    a12, a21 = params.a12, params.a21
    sym = params.is_symmetric
    if a12 == 0 or a21 == 0:
        other = max(a12, a21)
        if other == 0:
            return RegimeClass(Regime.ONE_SIDED_WEAK, sym,
                               "both cross gains zero (interference-free)")
        if other < 1:
            return RegimeClass(Regime.ONE_SIDED_WEAK, sym, "one-sided, weak")
        return RegimeClass(Regime.ONE_SIDED_STRONG, sym, "one-sided, strong")
    if a12 >= 1 and a21 >= 1:
        if a12 >= 1 + params.p1 and a21 >= 1 + params.p2:
            return RegimeClass(Regime.VERY_STRONG, sym,
                               "very strong: interference does not reduce capacity")
        return RegimeClass(Regime.STRONG, sym, "strong")
    if a12 < 1 and a21 < 1:
        return RegimeClass(Regime.WEAK, sym, "weak")
    if math.isclose(a12 * a21, 1.0, rel_tol=1e-12, abs_tol=0.0):
        return RegimeClass(Regime.DEGRADED, sym, "Degraded (special case of Mixed)")
    return RegimeClass(Regime.MIXED, sym, "mixed")


def require_weak(params: ChannelParams) -> None:
    """Raise :class:`RegimeError` unless both cross gains lie in (0, 1)."""
    if not params.is_weak:
        raise RegimeError(
            f"weak regime required (0 < a12, a21 < 1), got "
            f"a12={params.a12}, a21={params.a21} ({classify(params).kind})")
    if min(params.a12, params.a21) < MIN_WEAK_GAIN:
        raise RegimeError(
            f"cross gain below {MIN_WEAK_GAIN:g} is too close to one-sided")


def require_symmetric_weak(p: float, a: float) -> ChannelParams:
    params = ChannelParams.symmetric(p, a)
    require_weak(params)
    return params


def single_user_capacity(p: float) -> float:
    """AWGN capacity ``0.5*log2(1+p)`` of one user without interference."""
    if not p >= 0:
        raise DomainError(f"power must be >= 0, got {p}")
    return 0.5 * log2(1.0 + p)


def conjectured_corner_rates(params: ChannelParams) -> RatePair:
    """Rates of the other user when one user runs at its single-user capacity
    and the other receiver decodes both messages.

    ``r1`` pairs with ``C2`` and ``r2`` pairs with ``C1``.
    """
    p1, p2 = params.p1, params.p2
    r1 = 0.5 * log2(1 + params.a21 * p1 / (1 + p2))
    r2 = 0.5 * log2(1 + params.a12 * p2 / (1 + p1))
    return RatePair(r1, r2)


def db_to_linear(p_db: float) -> float:
    """Power ratio in dB to linear scale."""
    return 10.0 ** (p_db / 10.0)


def linear_to_db(p: float) -> float:
    return 10.0 * math.log10(p)

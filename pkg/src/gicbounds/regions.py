"""
Outer bounds on the capacity region of a weak interference channel.

A :class:`RateRegion` is a finite list of half-planes
``c1*R1 + c2*R2 <= bound`` intersected with the nonnegative quadrant.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .channel import (BoundValue, ChannelParams, log2,
                      require_weak, single_user_capacity)
from .errors import DomainError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class LinearRateConstraint:
    c1: float
    c2: float
    bound: float
    tag: str

    def __post_init__(self):
        if self.c1 < 0 or self.c2 < 0 or self.c1 + self.c2 <= 0:
            raise DomainError(f"bad coefficients ({self.c1}, {self.c2}) in {self.tag}")

    def slack(self, r1: float, r2: float) -> float:
        return self.bound - (self.c1 * r1 + self.c2 * r2)


@dataclass(frozen=True)
class RateRegion:
    constraints: Tuple[LinearRateConstraint, ...]
    name: str = ""

    def __iter__(self):
        return iter(self.constraints)

    def __len__(self):
        return len(self.constraints)

    def by_tag(self, tag: str) -> LinearRateConstraint:
        for c in self.constraints:
            if c.tag == tag:
                return c
        raise KeyError(tag)

    def sum_rate_bound(self) -> float:
        """Tightest constraint on ``R1 + R2`` among the pure sum constraints."""
        return min(c.bound for c in self.constraints if c.c1 == 1 and c.c2 == 1)

    def contains(self, point, tol: float = DEFAULT_TOL) -> bool:
        return region_contains(self, point, tol)

    def vertices(self) -> np.ndarray:
        """Vertices of the region (2-D half-plane intersection), unordered."""
        lines = [(c.c1, c.c2, c.bound) for c in self.constraints]
        lines += [(-1.0, 0.0, 0.0), (0.0, -1.0, 0.0)]
        pts = []
        for (a1, b1, r1), (a2, b2, r2) in itertools.combinations(lines, 2):
            det = a1 * b2 - a2 * b1
            if abs(det) < 1e-14:
                continue
            x = (r1 * b2 - r2 * b1) / det
            y = (a1 * r2 - a2 * r1) / det
            if x >= -1e-12 and y >= -1e-12 and self.contains((max(x, 0.0), max(y, 0.0)), 1e-9):
                pts.append((max(x, 0.0), max(y, 0.0)))
        pts = np.unique(np.round(np.array(pts), 12), axis=0)
        return pts

    def boundary(self) -> np.ndarray:
        """Outer (upper-right) boundary as an ``(n, 2)`` polyline sorted by R1.

        Runs from the vertex on the R2 axis to the vertex on the R1 axis.
        """
        v = self.vertices()
        v = v[(v[:, 0] > 0) | (v[:, 1] > 0)]
        order = np.lexsort((-v[:, 1], v[:, 0]))
        return v[order]


def region_contains(region: RateRegion, point, tol: float = DEFAULT_TOL) -> bool:
    """True iff ``point`` satisfies every constraint within additive ``tol``."""
    r1, r2 = tuple(point)
    if r1 < -tol or r2 < -tol:
        return False
    return all(c.slack(r1, r2) >= -tol for c in region.constraints)


def etw_region(params: ChannelParams) -> RateRegion:
    """Etkin-Tse-Wang outer bound for a weak channel (seven constraints).

    The three ``R1 + R2`` constraints are kept separately.
    """
    require_weak(params)
    p1, p2, a12, a21 = params.p1, params.p2, params.a12, params.a21
    c1 = single_user_capacity(p1)
    c2 = single_user_capacity(p2)
    s1 = 0.5 * (log2(1 + p1) + log2(1 + p2 / (1 + a21 * p1)))
    s2 = 0.5 * (log2(1 + p2) + log2(1 + p1 / (1 + a12 * p2)))
    s3 = 0.5 * (log2(1 + a12 * p2 + p1 / (1 + a21 * p1))
                + log2(1 + a21 * p1 + p2 / (1 + a12 * p2)))
    w1 = 0.5 * (log2(1 + p1 + a12 * p2) + log2((1 + p1) / (1 + a21 * p1))
                + log2(1 + a21 * p1 + p2 / (1 + a12 * p2)))
    w2 = 0.5 * (log2(1 + p2 + a21 * p1) + log2((1 + p2) / (1 + a12 * p2))
                + log2(1 + a12 * p2 + p1 / (1 + a21 * p1)))
    return RateRegion((
        LinearRateConstraint(1, 0, c1, "R1"),
        LinearRateConstraint(0, 1, c2, "R2"),
        LinearRateConstraint(1, 1, s1, "R1+R2:a"),
        LinearRateConstraint(1, 1, s2, "R1+R2:b"),
        LinearRateConstraint(1, 1, s3, "R1+R2:c"),
        LinearRateConstraint(2, 1, w1, "2R1+R2"),
        LinearRateConstraint(1, 2, w2, "R1+2R2"),
    ), name="etw")


def telatar_tse_region(params: ChannelParams) -> RateRegion:
    """Outer region whose points shifted by half a bit per user are achievable.

    Its weighted-sum constraints carry ``log2(1 + P/(1 + a P))`` where
    :func:`etw_region` carries ``log2((1 + P)/(1 + a P))``.
    """
    require_weak(params)
    p1, p2, a12, a21 = params.p1, params.p2, params.a12, params.a21
    u = log2(1 + p1 + a12 * p2)
    v = log2(1 + p2 + a21 * p1)
    x1 = log2(1 + p1 / (1 + a21 * p1))
    x2 = log2(1 + p2 / (1 + a12 * p2))
    y1 = log2(1 + a12 * p2 + p1 / (1 + a21 * p1))
    y2 = log2(1 + a21 * p1 + p2 / (1 + a12 * p2))
    return RateRegion((
        LinearRateConstraint(1, 0, single_user_capacity(p1), "R1"),
        LinearRateConstraint(0, 1, single_user_capacity(p2), "R2"),
        LinearRateConstraint(1, 1, 0.5 * (u + x2), "R1+R2:a"),
        LinearRateConstraint(1, 1, 0.5 * (v + x1), "R1+R2:b"),
        LinearRateConstraint(1, 1, 0.5 * (y1 + y2), "R1+R2:c"),
        LinearRateConstraint(2, 1, 0.5 * (u + x1 + y2), "2R1+R2"),
        LinearRateConstraint(1, 2, 0.5 * (v + x2 + y1), "R1+2R2"),
    ), name="telatar-tse")


# -- Kramer's outer bound -------------------------------------------------

@dataclass(frozen=True)
class KramerRegionParams:
    """Power split ``beta`` over ``p_prime = p2 + p1/a21``."""

    beta: float
    p_prime: float

    @staticmethod
    def beta_interval(params: ChannelParams) -> Tuple[float, float]:
        pp = params.p2 + params.p1 / params.a21
        return params.p2 / ((1 + params.p1) * pp), params.p2 / pp


def _kramer_delta(params: ChannelParams, epsilon: float) -> float:
    p1, p2, a21 = params.p1, params.p2, params.a21
    g = 2.0 ** (2 * epsilon) - 1.0
    return 0.5 * log2(1 + g * (p2 + (1 + p1) / a21) / (1 + p1 + p2))


def kramer_beta(params: ChannelParams, epsilon: float) -> float:
    """Power split at which Kramer's R1 limit equals ``C1 - epsilon``."""
    p1, p2, a21 = params.p1, params.p2, params.a21
    e = 2.0 ** (2 * epsilon)
    return (e * p2 + (e - 1) * (1 + p1) / a21) / ((1 + p1) * (p2 + p1 / a21))


def kramer_r2_at_r1(params: ChannelParams, epsilon: float = 0.0) -> BoundValue:
    """Kramer's bound on R2 given ``R1 >= C1 - epsilon``.

    Returns ``0.5*log2(1 + P2/(1+P1)) + delta(epsilon)``. ``details`` carries
    ``delta``, the power split ``beta`` and the linear cap
    ``(1 + (1+P1)/(a21 P2)) * epsilon`` on ``delta``.
    """
    require_weak(params)
    if not epsilon >= 0:
        raise DomainError(f"epsilon must be >= 0, got {epsilon}")
    if params.a21 == 0:
        raise DomainError("a21 must be positive")
    p1, p2, a21 = params.p1, params.p2, params.a21
    delta = _kramer_delta(params, epsilon)
    cap = (1 + (1 + p1) / (a21 * p2)) * epsilon
    beta = kramer_beta(params, epsilon)
    lo, hi = KramerRegionParams.beta_interval(params)
    note = "kramer"
    if beta > hi * (1 + 1e-12):
        note = "kramer; beta beyond its legal interval, R2 <= C2 is tighter"
    return BoundValue(0.5 * log2(1 + p2 / (1 + p1)) + delta, True, "Kramer", note,
                      {"delta": delta, "linear_cap": cap, "beta": beta})


def kramer_region_point(params: ChannelParams, beta: float) -> Tuple[float, float]:
    """Corner ``(R1, R2)`` of the first Kramer rectangle for power split ``beta``."""
    pp = params.p2 + params.p1 / params.a21
    r1 = 0.5 * log2(1 + (1 - beta) * pp / (beta * pp + 1 / params.a21))
    r2 = 0.5 * log2(1 + beta * pp)
    return r1, r2


def kramer_boundary(params: ChannelParams, n: int = 1001) -> np.ndarray:
    """Boundary of Kramer's first region on a uniform ``beta`` grid.

    Returns an ``(n, 2)`` array ordered by increasing R1.
    """
    require_weak(params)
    lo, hi = KramerRegionParams.beta_interval(params)
    pts = np.array([kramer_region_point(params, b) for b in np.linspace(lo, hi, n)])
    return pts[np.argsort(pts[:, 0], kind="stable")]


# -- export -------------------------------------------------------------

def region_rows(region: RateRegion) -> List[Tuple[str, float, float, float]]:
    return [(c.tag, c.c1, c.c2, c.bound) for c in region.constraints]


def region_to_csv(region: RateRegion) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["tag", "c1", "c2", "bound"])
    for tag, c1, c2, b in region_rows(region):
        w.writerow([tag, f"{c1:.6f}", f"{c2:.6f}", f"{b:.6f}"])
    return buf.getvalue()


def boundary_to_csv(points: Iterable[Sequence[float]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r1", "r2"])
    for r1, r2 in points:
        w.writerow([f"{r1:.6f}", f"{r2:.6f}"])
    return buf.getvalue()

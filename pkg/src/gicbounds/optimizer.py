"""
Deterministic grid search with local refinement for low-dimensional boxes.

The objective is evaluated on a uniform tensor grid; each refinement round
re-grids a box shrunk around the incumbent. Objectives are vectorized: they
receive one array per axis (all of the same shape) and return an array of
values, with ``nan`` (or any non-finite value) marking infeasible points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np

from .errors import DomainError, InfeasibleGridError

Objective = Callable[..., np.ndarray]


@dataclass(frozen=True)
class GridSpec:
    """Resolution of a grid search.

    ``points_per_axis`` must be odd so that midpoints and endpoints of every
    interval are always sampled.
    """

    points_per_axis: int = 41
    refinement_rounds: int = 3
    shrink_factor: float = 5.0

    def __post_init__(self):
        if self.points_per_axis < 3 or self.points_per_axis % 2 == 0:
            raise DomainError(
                f"points_per_axis must be odd and >= 3, got {self.points_per_axis}")
        if self.refinement_rounds < 0:
            raise DomainError("refinement_rounds must be >= 0")
        if not self.shrink_factor > 1:
            raise DomainError("shrink_factor must exceed 1")


@dataclass(frozen=True)
class OptimizationResult:
    value: float
    argopt: Tuple[float, ...]
    grid_points: int
    refinement_rounds: int


def _axes(box, n):
    return [np.array([lo]) if hi == lo else np.linspace(lo, hi, n) for lo, hi in box]


def _best_on_grid(objective, box, n, sign):
    axes = _axes(box, n)
    mesh = np.meshgrid(*axes, indexing="ij")
    with np.errstate(all="ignore"):
        vals = np.asarray(objective(*mesh), dtype=float)
    vals = np.broadcast_to(vals, mesh[0].shape)
    feasible = np.isfinite(vals)
    count = vals.size
    if not feasible.any():
        return None, None, count
    # flat C-order on an 'ij' mesh with ascending axes is lexicographic order,
    # so argmin returns the lexicographically smallest optimizer
    score = np.where(feasible, sign * vals, np.inf)
    k = int(np.argmin(score))
    idx = np.unravel_index(k, vals.shape)
    point = tuple(float(ax[i]) for ax, i in zip(axes, idx))
    return float(vals[idx]), point, count


def optimize(objective: Objective, box: Sequence[Tuple[float, float]],
             direction: str = "min", spec: GridSpec = GridSpec()) -> OptimizationResult:
    """Minimize or maximize ``objective`` over the closed box ``box``.

    Parameters
    ----------
    objective : callable
        Vectorized objective, ``objective(x0, x1, ...) -> values``.
    box : sequence of (lo, hi)
        Per-axis closed intervals.
    direction : {'min', 'max'}
    spec : GridSpec

    Returns
    -------
    OptimizationResult
        The best feasible evaluated point. Ties are broken toward the
        lexicographically smallest parameter vector.

    Raises
    ------
    InfeasibleGridError
        If no point of the initial grid is feasible.
    """
    if direction not in ("min", "max"):
        raise DomainError(f"direction must be 'min' or 'max', got {direction!r}")
    box = [(float(lo), float(hi)) for lo, hi in box]
    if not box or any(not (lo <= hi) for lo, hi in box):
        raise DomainError(f"empty box {box}")
    sign = 1.0 if direction == "min" else -1.0
    n = spec.points_per_axis

    value, point, total = _best_on_grid(objective, box, n, sign)
    if value is None:
        raise InfeasibleGridError("no feasible point on the initial grid")

    widths = [hi - lo for lo, hi in box]
    for _ in range(spec.refinement_rounds):
        widths = [w / spec.shrink_factor for w in widths]
        sub = []
        for (lo, hi), w, c in zip(box, widths, point):
            sub.append((max(lo, c - w / 2), min(hi, c + w / 2)))
        v, p, cnt = _best_on_grid(objective, sub, n, sign)
        total += cnt
        if v is None:
            continue
        if sign * v < sign * value or (v == value and p < point):
            value, point = v, p
    return OptimizationResult(value, point, total, spec.refinement_rounds)

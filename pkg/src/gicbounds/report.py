"""
Report rows for the excess-rate table and figure data, plus CSV/JSON
emitters.

A report is a list of rows; each row is an ordered ``dict`` of labeled
scalars. CSV output formats reals with six decimals, JSON keeps full
precision.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .asymptotics import delta_slope, gdof_table
from .channel import ChannelParams, conjectured_corner_rates, db_to_linear
from .corners import threshold_curve
from .errors import DomainError
from .excess import delta_bounds_improved, delta_upper_improved
from .optimizer import GridSpec
from .regions import etw_region
from .sumrate import ETKIN_GRID, HK_GRID, validity_root

Row = Dict[str, object]

DELTA_COLUMNS = ("a", "lower_simple", "upper_simple", "lower_improved",
                 "upper_improved", "asymptotic_lower", "asymptotic_upper")


# -- formatting --------------------------------------------------------------

def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.6f}"
    return str(v)


def _parse(s: str):
    if s == "":
        return None
    if s in ("true", "false"):
        return s == "true"
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def rows_to_csv(rows: Sequence[Row]) -> str:
    """CSV text with the union of row keys as header (first-seen order)."""
    keys: List[str] = []
    for r in rows:
        keys.extend(k for k in r if k not in keys)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(keys)
    for r in rows:
        w.writerow([_fmt(r.get(k)) for k in keys])
    return buf.getvalue()


def csv_to_rows(text: str) -> List[Row]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return [dict(zip(header, (_parse(c) for c in line))) for line in reader]


def _jsonable(v):
    if isinstance(v, (np.bool_,)):
        return bool(v)
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    return v


def rows_to_json(rows: Sequence[Row]) -> str:
    return json.dumps([{k: _jsonable(v) for k, v in r.items()} for r in rows],
                      indent=2) + "\n"


# -- excess-rate extremes table ----------------------------------------------

def _refine(f, a_grid, i, sign):
    lo = math.log(a_grid[max(i - 1, 0)])
    hi = math.log(a_grid[min(i + 1, len(a_grid) - 1)])
    r = minimize_scalar(lambda la: sign * f(math.exp(la)), bounds=(lo, hi),
                        method="bounded", options={"xatol": 1e-6})
    x, v = math.exp(r.x), sign * r.fun
    # keep the grid point if the local search did not improve on it
    g = f(a_grid[i])
    if sign * g <= sign * v:
        return float(a_grid[i]), g
    return x, v


def table1_row(p_db: float, etkin_grid: GridSpec = ETKIN_GRID,
               n_scan: int = 400) -> Row:
    """Locate the local minimum and the maximum of the improved upper bound on
    the excess rate as functions of the cross gain ``a``.

    The maximum is taken over ``a >= 1/sqrt(P)``; the minimum over
    ``a`` between ``1e-4`` and that maximizer (the global minimum on
    ``(0, 1]`` is the trivial zero at ``a = 1``).
    """
    p = db_to_linear(p_db)
    if not p > validity_root():
        raise DomainError(f"P must exceed {validity_root():.5f}")
    lp = math.log2(p)
    a_grid = np.logspace(-4, 0, n_scan)[:-1]

    def f(a):
        return delta_upper_improved(p, a, etkin_grid).value

    vals = np.array([f(a) for a in a_grid])
    mask = a_grid >= 1 / math.sqrt(p)
    if not mask.any():
        raise DomainError(f"no scan point above 1/sqrt(P) for P={p}")
    i_max = int(np.flatnonzero(mask)[np.argmax(vals[mask])])
    i_min = int(np.argmin(vals[:i_max + 1]))
    a_min, d_min = _refine(f, a_grid, i_min, 1.0)
    a_max, d_max = _refine(f, a_grid, i_max, -1.0)
    return {
        "p_db": float(p_db),
        "p": p,
        "a_min_asymptotic": 1 / math.sqrt(p),
        "a_min": a_min,
        "norm_delta_min_asymptotic": delta_slope(0.5),
        "norm_delta_min": d_min / lp,
        "a_max_asymptotic": p ** (-1 / 3),
        "a_max": a_max,
        "norm_delta_max_asymptotic": delta_slope(2 / 3),
        "norm_delta_max": d_max / lp,
    }


def table1(p_db_list: Iterable[float] = (27, 40, 60),
           etkin_grid: GridSpec = ETKIN_GRID) -> List[Row]:
    return [table1_row(x, etkin_grid) for x in p_db_list]


# -- figures -------------------------------------------------------------------

def figure_threshold() -> List[Row]:
    return [{"a": a, "p_threshold_db": t} for a, t in threshold_curve()]


def figure_region(p: float = 100.0, a: float = 0.5) -> List[Row]:
    params = ChannelParams.symmetric(p, a)
    rows: List[Row] = [{"series": "boundary", "r1": r1, "r2": r2}
                       for r1, r2 in etw_region(params).boundary()]
    rstar = conjectured_corner_rates(params)
    c = 0.5 * math.log2(1 + p)
    rows.append({"series": "corner", "r1": c, "r2": rstar.r2})
    rows.append({"series": "corner", "r1": rstar.r1, "r2": c})
    return rows


def figure_gdof() -> List[Row]:
    return [{"alpha": x, "gdof": d, "delta_slope": s} for x, d, s in gdof_table()]


def delta_sweep(p: float, a_values: Iterable[float],
                hk_grid: GridSpec = HK_GRID,
                etkin_grid: GridSpec = ETKIN_GRID) -> List[Row]:
    """Simple, improved and asymptotic excess-rate bounds along ``a_values``."""
    rows = []
    for a in a_values:
        a = float(a)
        if a == 1.0:
            vals = (0.0,) * 6
        else:
            r = delta_bounds_improved(p, a, hk_grid, etkin_grid)
            vals = (r.lower_simple.value, r.upper_simple.value,
                    r.lower_improved.value, r.upper_improved.value,
                    r.asymptotic_lower, r.asymptotic_upper)
        rows.append(dict(zip(DELTA_COLUMNS, (a,) + vals)))
    return rows


def a_grid(a_min: float, a_max: float, step: float) -> np.ndarray:
    n = int(round((a_max - a_min) / step)) + 1
    return np.round(a_min + step * np.arange(n), 12)


FIGURES = ("fig1", "fig2", "fig3", "fig4", "fig5")


def figure_rows(which: str, p: Optional[float] = None, a: float = 0.5,
                a_min: float = 0.005, a_max: float = 1.0, a_step: float = 0.005,
                hk_grid: GridSpec = HK_GRID,
                etkin_grid: GridSpec = ETKIN_GRID) -> List[Row]:
    """Data behind one of the figures.

    ``fig1`` threshold curve, ``fig2`` ETW region at ``(p, a)``, ``fig3``
    asymptotic slopes, ``fig4``/``fig5`` excess-rate sweeps over ``a`` at
    power ``p`` (defaults 500 and 40 dB).
    """
    if which == "fig1":
        return figure_threshold()
    if which == "fig2":
        return figure_region(100.0 if p is None else p, a)
    if which == "fig3":
        return figure_gdof()
    if which in ("fig4", "fig5"):
        if p is None:
            p = 500.0 if which == "fig4" else db_to_linear(40.0)
        return delta_sweep(p, a_grid(a_min, a_max, a_step), hk_grid, etkin_grid)
    raise DomainError(f"unknown figure {which!r}; choose from {', '.join(FIGURES)}")


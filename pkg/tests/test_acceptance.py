"""Acceptance criteria, each checked at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v`` (one PASS/FAIL line per
criterion is printed even under output capture) or directly with
``python tests/test_acceptance.py``.
"""

import math
import time

import numpy as np
import pytest

from gicbounds.asymptotics import convergence_probe, delta_slope, gdof, normalized_loss
from gicbounds.channel import ChannelParams, conjectured_corner_rates, single_user_capacity
from gicbounds.corners import KRAMER, etw_kramer_threshold, symmetric_corner_upper, weak_corner_bounds
from gicbounds.excess import delta_bounds_improved, delta_upper_improved
from gicbounds.optimizer import GridSpec, optimize
from gicbounds.regions import etw_region
from gicbounds.report import table1_row
from gicbounds.sumrate import (best_sum_bounds, hk_rho, validity_certificate, validity_gap,
                               validity_quartic, validity_root, min_of_max)


def close(x, target, tol):
    return abs(x - target) <= tol


def c1_region_constants():
    reg = etw_region(ChannelParams.symmetric(100, 0.5))
    got = (reg.by_tag("R1").bound, reg.sum_rate_bound(), reg.by_tag("2R1+R2").bound)
    ok = all(close(g, t, 5e-4) for g, t in zip(got, (3.3291, 4.1121, 6.9755)))
    return ok, "R1 %.4f, R1+R2 %.4f, 2R1+R2 %.4f" % got


def c2_corner_intervals():
    lo1, hi1 = weak_corner_bounds(ChannelParams.symmetric(100, 0.5)).corner_at_c1
    lo2, hi2 = weak_corner_bounds(ChannelParams.symmetric(1000, 0.5)).corner_at_c1
    ok = (close(lo1, 0.2901, 5e-4) and close(hi1, 0.317, 1e-3)
          and close(lo2, 0.2925, 5e-4) and close(hi2, 0.295, 1e-3))
    return ok, f"P=100 [{lo1:.4f}, {hi1:.4f}], P=1000 [{lo2:.4f}, {hi2:.4f}]"


def c3_etw_vs_kramer():
    t2, t1 = etw_kramer_threshold(0.2), etw_kramer_threshold(0.1)
    b = symmetric_corner_upper(100, 0.1)
    kr, etw = b.details["kramer"], b.details["etw"]
    ok = (close(t2, 27.725, 0.01) and close(t1, 102.33, 0.01) and close(kr, 0.4964, 5e-4)
          and close(etw, 0.5026, 5e-4) and b.active_term == KRAMER)
    return ok, (f"thr(0.2)={t2:.3f}, thr(0.1)={t1:.3f}, Kramer {kr:.4f}, ETW {etw:.4f}, "
                f"active {b.active_term}")


def _bisect(f, lo, hi):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        lo, hi = (lo, mid) if f(lo) * f(mid) <= 0 else (mid, hi)
    return 0.5 * (lo + hi)


def c4_validity_quartic():
    oracle = _bisect(validity_quartic, 2.0, 3.0)
    root = validity_root()
    flips = (not validity_certificate(np.nextafter(oracle, 0))[0]
             and validity_certificate(np.nextafter(oracle, 10))[0])
    f0 = max(abs(validity_gap(p, 0.0)) for p in (1, 10, 100))
    ok = close(root, 2.55003, 1e-4) and close(root, oracle, 1e-4) and flips and f0 < 1e-14
    return ok, f"root {root:.6f} (bisection {oracle:.6f}), flips={flips}, max|f_P(0)|={f0:.1e}"


def c5_closed_forms():
    errs = [abs(gdof(0.5) - 0.5), abs(delta_slope(0) - 0.5), abs(delta_slope(2 / 3) - 1 / 6),
            abs(delta_slope(1.0)), abs(delta_slope(3.0)), abs(normalized_loss(2 / 3) - 0.25)]
    return max(errs) <= 1e-12, f"max error {max(errs):.1e}"


PROBE_P = [1e3, 1e5, 1e7, 1e9]
PROBE_ALPHA = [0.0, 0.25, 0.5, 2 / 3, 0.8]


def c6_convergence():
    failures, worst = [], 0.0
    for alpha in PROBE_ALPHA:
        d = delta_slope(alpha)
        rows = convergence_probe(alpha, PROBE_P)
        for col, name in ((1, "upper"), (2, "lower")):
            errs = [abs(r[col] - d) for r in rows]
            worst = max(worst, errs[-1])
            if errs[-1] >= 0.06:
                failures.append(f"alpha={alpha:.3g} {name} err {errs[-1]:.4f}")
            if any(b > a + 1e-12 for a, b in zip(errs, errs[1:])):
                failures.append(f"alpha={alpha:.3g} {name} not nonincreasing")
    detail = f"worst error at P=1e9 {worst:.4f}"
    if failures:
        detail += "; " + ", ".join(failures)
    return not failures, detail


def c7_improved_anchors():
    up = delta_upper_improved(500, 0.045).value
    lo = delta_bounds_improved(500, 0.110).lower_improved.value
    ok = close(up, 0.578, 0.01) and close(lo, 0.620, 0.01) and up < lo
    return ok, f"upper(0.045)={up:.4f}, lower(0.110)={lo:.4f}"


TABLE1 = {
    27: dict(a_min=0.050, a_max=0.140, norm_delta_min=0.065, norm_delta_max=0.154),
    40: dict(a_min=0.011, a_max=0.042, norm_delta_min=0.046, norm_delta_max=0.164),
    60: dict(a_min=0.001, a_max=0.010, norm_delta_min=0.032, norm_delta_max=0.166),
}


def c8_table1():
    bad, parts = [], []
    for p_db, want in TABLE1.items():
        row = table1_row(float(p_db))
        for k in ("a_min", "a_max"):
            if abs(row[k] / want[k] - 1) > 0.2:
                bad.append(f"{p_db} dB {k} {row[k]:.4f}")
        for k in ("norm_delta_min", "norm_delta_max"):
            if not close(row[k], want[k], 0.01):
                bad.append(f"{p_db} dB {k} {row[k]:.4f}")
        if not (close(row["norm_delta_min_asymptotic"], 0.0, 0.01)
                and close(row["norm_delta_max_asymptotic"], 0.167, 0.01)):
            bad.append(f"{p_db} dB asymptotic columns")
        parts.append(f"{p_db} dB: a_min {row['a_min']:.4f}, {row['norm_delta_min']:.3f}; "
                     f"a_max {row['a_max']:.4f}, {row['norm_delta_max']:.3f}")
    return not bad, " | ".join(parts + bad)


def c9_subclass_oracle():
    p, a = 20.0, 0.05
    exact = math.log2(11)
    up, lo = best_sum_bounds(p, a)
    # with u = v = 1 and t = 1/2 the private powers are P, the min term vanishes
    # and the rate collapses to log2(1 + P / (1 + aP))
    reduced = math.log2(1 + p / (1 + a * p))
    hk = hk_rho(p, a, 1.0, 1.0, 0.5)
    ok = close(up.value, exact, 5e-3) and close(lo.value, exact, 5e-3) and abs(hk - reduced) <= 1e-12
    return ok, f"upper {up.value:.6f}, lower {lo.value:.6f}, HK(1,1,1/2)-TIN {hk - reduced:.1e}"


def c10_properties():
    rng = np.random.default_rng(20240501)
    notes = []
    ok = True

    trip = rng.uniform(-10, 10, size=(10_000, 3))
    ident = all(min_of_max(x, y, z) == max(min(x, z), min(y, z)) for x, y, z in trip)
    ok &= ident
    notes.append(f"min/max identity {'holds' if ident else 'FAILS'} on 10^4 triples")

    order_ok = True
    for p in (5, 50, 500):
        for a in (0.05, 0.2, 0.5, 0.9):
            up, lo = best_sum_bounds(p, a)
            order_ok &= up.value >= lo.value - 1e-9
    ok &= order_ok
    notes.append(f"upper>=lower {'holds' if order_ok else 'FAILS'} on 12 grid points")

    member = True
    for _ in range(500):
        params = ChannelParams(*rng.uniform(0.1, 1e4, 2), *rng.uniform(1e-3, 0.999, 2))
        r = conjectured_corner_rates(params)
        reg = etw_region(params)
        member &= reg.contains((single_user_capacity(params.p1), r.r2))
        member &= reg.contains((r.r1, single_user_capacity(params.p2)))
    ok &= member
    notes.append(f"corner membership {'holds' if member else 'FAILS'} on 500 channels")

    f = lambda x, y: np.sin(7 * x) * np.cos(5 * y) + 0.1 * (x - y) ** 2  # noqa: E731
    box = [(-1, 2), (0, 1)]
    det = optimize(f, box, "min", GridSpec(21, 3)) == optimize(f, box, "min", GridSpec(21, 3))
    dom = all(optimize(f, box, "min", GridSpec(2 * n - 1, 0)).value
              <= optimize(f, box, "min", GridSpec(n, 0)).value for n in (3, 5, 11, 21))
    ok &= det and dom
    notes.append(f"optimizer determinism {det}, grid dominance {dom}")
    return bool(ok), "; ".join(notes)


CRITERIA = [
    (1, "ETW polytope constants", c1_region_constants),
    (2, "corner intervals", c2_corner_intervals),
    (3, "ETW vs Kramer threshold", c3_etw_vs_kramer),
    (4, "validity quartic", c4_validity_quartic),
    (5, "closed-form asymptotics", c5_closed_forms),
    (6, "convergence of normalized bounds", c6_convergence),
    (7, "improved excess-rate anchors", c7_improved_anchors),
    (8, "excess-rate extremes table", c8_table1),
    (9, "TIN-exact subclass oracle", c9_subclass_oracle),
    (10, "property suites", c10_properties),
]


def evaluate(check):
    t0 = time.perf_counter()
    ok, detail = check()
    return ok, detail, time.perf_counter() - t0


def line(num, title, ok, detail, secs):
    return f"{'PASS' if ok else 'FAIL'} criterion {num:2d} ({title}): {detail} [{secs:.1f}s]"


@pytest.mark.parametrize("num, title, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(num, title, check, capsys):
    ok, detail, secs = evaluate(check)
    with capsys.disabled():
        print("\n" + line(num, title, ok, detail, secs))
    assert ok, detail


if __name__ == "__main__":
    for num, title, check in CRITERIA:
        print(line(num, title, *evaluate(check)), flush=True)

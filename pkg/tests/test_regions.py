import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gicbounds.channel import ChannelParams, conjectured_corner_rates, single_user_capacity
from gicbounds.errors import DomainError, RegimeError
from gicbounds.regions import (KramerRegionParams, LinearRateConstraint, RateRegion,
                               boundary_to_csv, etw_region, kramer_beta,
                               kramer_boundary, kramer_r2_at_r1, kramer_region_point,
                               region_contains, region_to_csv, telatar_tse_region)

weak = st.builds(ChannelParams, st.floats(0.1, 1e4), st.floats(0.1, 1e4),
                 st.floats(1e-3, 0.999), st.floats(1e-3, 0.999))
EX2 = ChannelParams.symmetric(100, 0.5)


def test_example_region_constants():
    reg = etw_region(EX2)
    assert reg.by_tag("R1").bound == pytest.approx(3.3291, abs=5e-4)
    assert reg.sum_rate_bound() == pytest.approx(4.1121, abs=5e-4)
    assert reg.by_tag("2R1+R2").bound == pytest.approx(6.9755, abs=5e-4)


def test_sum_constraint_tightest_is_the_mac_term():
    reg = etw_region(EX2)
    sums = {c.tag: c.bound for c in reg if c.c1 == 1 and c.c2 == 1}
    assert min(sums.values()) == pytest.approx(0.5 * (math.log2(101) + math.log2(1 + 100 / 51)))


def test_weighted_constraint_at_small_gain():
    # three-term oracle: log((1+P)/(1+aP)) in place of the printed log(1 + P/(1+aP))
    p, a = 100, 0.1
    oracle = 0.5 * (math.log2(1 + p + a * p) + math.log2((1 + p) / (1 + a * p))
                    + math.log2(1 + a * p + p / (1 + a * p)))
    got = etw_region(ChannelParams.symmetric(p, a)).by_tag("2R1+R2").bound
    assert got == pytest.approx(oracle, abs=1e-12)
    assert got == pytest.approx(7.160833, abs=1e-6)


def test_telatar_tse_variant_values():
    tt = telatar_tse_region(EX2)
    sums = sorted(c.bound for c in tt if c.c1 == 1 and c.c2 == 1)
    assert sums == pytest.approx([4.402192, 4.402192, 5.726853], abs=1e-6)
    printed = 0.5 * (math.log2(151) + math.log2(1 + 100 / 51) + math.log2(51 + 100 / 51))
    assert tt.by_tag("2R1+R2").bound == pytest.approx(printed, abs=1e-12)


def test_symmetric_channel_constraints_swap():
    reg = etw_region(EX2)
    assert reg.by_tag("2R1+R2").bound == pytest.approx(reg.by_tag("R1+2R2").bound)
    assert reg.by_tag("R1").bound == pytest.approx(reg.by_tag("R2").bound)


def test_contains_examples():
    reg = etw_region(EX2)
    assert region_contains(reg, (3.3291, 0.2901))
    assert not region_contains(reg, (3.43, 0.29))
    assert region_contains(reg, (0, 0))


def test_etw_requires_weak():
    with pytest.raises(RegimeError):
        etw_region(ChannelParams(1, 1, 2, 0.5))


@given(weak)
def test_regions_contain_conjectured_corners(params):
    r = conjectured_corner_rates(params)
    c1, c2 = single_user_capacity(params.p1), single_user_capacity(params.p2)
    for reg in (etw_region(params), telatar_tse_region(params)):
        assert reg.contains((c1, r.r2))
        assert reg.contains((r.r1, c2))
        assert all(math.isfinite(c.bound) and c.bound >= 0 for c in reg)


def test_vertices_and_boundary():
    reg = etw_region(EX2)
    verts = reg.vertices()
    assert (0.0, 0.0) in [tuple(v) for v in verts]
    for v in verts:
        assert reg.contains(v, tol=1e-9)
    b = reg.boundary()
    assert b[0][0] == 0 and b[-1][1] == 0
    assert all(x[0] <= y[0] for x, y in zip(b, b[1:]))


def test_kramer_corner_values():
    small = kramer_r2_at_r1(ChannelParams.symmetric(100, 0.1))
    assert small.value == pytest.approx(0.4964, abs=5e-5)
    assert small.details["delta"] == 0
    eps = kramer_r2_at_r1(EX2, 0.01)
    oracle = 0.5 * math.log2(1 + (2 ** 0.02 - 1) * (100 + 101 / 0.5) / 201)
    assert eps.details["delta"] == pytest.approx(oracle, abs=1e-12)
    assert eps.details["delta"] == pytest.approx(0.014973, abs=1e-6)
    assert eps.value == pytest.approx(0.4964 + 0.0150, abs=1e-4)
    assert eps.details["delta"] <= eps.details["linear_cap"]


@given(weak, st.floats(0, 0.5), st.floats(0, 0.5))
def test_kramer_nondecreasing_in_epsilon(params, e1, e2):
    lo, hi = sorted((e1, e2))
    assert kramer_r2_at_r1(params, lo).value <= kramer_r2_at_r1(params, hi).value


@given(st.floats(1e-2, 1e8), st.floats(1e-3, 0.999))
def test_kramer_symmetric_at_most_half_bit(p, a):
    assert kramer_r2_at_r1(ChannelParams.symmetric(p, a)).value <= 0.5


@given(weak, st.floats(0, 0.05))
def test_kramer_beta_route_matches_delta_route(params, eps):
    beta = kramer_beta(params, eps)
    lo, hi = KramerRegionParams.beta_interval(params)
    if not lo <= beta <= hi:
        return
    r1, r2 = kramer_region_point(params, beta)
    assert r1 == pytest.approx(single_user_capacity(params.p1) - eps, abs=1e-9)
    assert r2 == pytest.approx(kramer_r2_at_r1(params, eps).value, abs=1e-9)


def test_kramer_boundary_shape():
    pts = kramer_boundary(EX2)
    assert pts.shape == (1001, 2)
    assert np.all(np.diff(pts[:, 0]) >= 0)
    assert pts[-1, 0] == pytest.approx(single_user_capacity(100))


def test_constraint_validation():
    with pytest.raises(DomainError):
        LinearRateConstraint(0, 0, 1, "bad")
    c = LinearRateConstraint(1, 1, 2, "s")
    assert c.slack(0.5, 0.5) == 1


def test_region_csv():
    text = region_to_csv(etw_region(EX2))
    lines = text.splitlines()
    assert lines[0] == "tag,c1,c2,bound"
    assert "R1,1.000000,0.000000,3.329106" in lines
    assert boundary_to_csv([(0, 1.5)]) == "r1,r2\n0.000000,1.500000\n"
    assert RateRegion(etw_region(EX2).constraints).sum_rate_bound() > 0

import math

import mpmath as mp
import pytest
import scipy.special as sp
from hypothesis import given, settings, strategies as st

from wradii import (
    BoundsReport,
    InvariantViolation,
    RadiusQuery,
    RayleighSums,
    Theorem,
    WrightParams,
    bounds_closed_form,
    bounds_from_sums,
    first_zeros,
    radius,
    rayleigh_sums,
    t2_bounds_as_printed,
)
from wradii.rayleigh import THEOREMS

params_st = st.builds(WrightParams, st.floats(0.25, 4.0), st.floats(0.25, 4.0))

# weights P(n) of the series in t (= z**2 or z) whose zeros each theorem uses
WEIGHTS = {
    Theorem.T2: lambda n, b: 2 * n + b,
    Theorem.T3: lambda n, b: 2 * n + 1,
    Theorem.T4: lambda n, b: n + 1,
    Theorem.T6: lambda n, b: (2 * n + 1) ** 2,
    Theorem.T7: lambda n, b: (n + 1) ** 2,
}


def newton_sums(theorem, rho, beta):
    """Power sums of reciprocal zeros from the first Taylor coefficients (Newton's identities)."""
    with mp.workdps(40):
        r, b = mp.mpf(rho), mp.mpf(beta)
        a = [WEIGHTS[theorem](n, b) * (-1) ** n / (mp.factorial(n) * mp.gamma(n * r + b)) for n in range(4)]
        e1, e2, e3 = -a[1] / a[0], a[2] / a[0], -a[3] / a[0]
        return float(e1), float(e1**2 - 2 * e2), float(e1**3 - 3 * e1 * e2 + 3 * e3)


@pytest.mark.parametrize("theorem", list(Theorem))
@given(params_st)
def test_sums_match_newton_identities(theorem, p):
    got = rayleigh_sums(theorem, p)
    ref = newton_sums(theorem, p.rho, p.beta)
    assert (got.s1, got.s2, got.s3) == pytest.approx(ref, rel=1e-12)


def test_t3_example_values():
    s = rayleigh_sums(Theorem.T3, WrightParams(1, 1))
    assert (s.s1, s.s2, s.s3) == pytest.approx((3.0, 6.5, 49 / 3), rel=1e-15)
    b = bounds_from_sums(s, Theorem.T3)
    assert b.lower_k1 == pytest.approx(math.sqrt(1 / 3), rel=1e-15)
    assert b.upper_k1 == pytest.approx(math.sqrt(6 / 13), rel=1e-15)
    assert b.upper_k2 == pytest.approx(math.sqrt(6.5 / (49 / 3)), rel=1e-15)


def test_t4_bessel_one_is_one_and_two():
    b = bounds_closed_form(Theorem.T4, WrightParams(1, 2))
    assert (b.lower_k1, b.upper_k1) == pytest.approx((1.0, 2.0), rel=1e-14)


@pytest.mark.parametrize("theorem", list(Theorem))
@pytest.mark.parametrize("rho, beta", [(0.5, 0.5), (1, 1), (2, 5), (0.1, 1.0), (3.0, 0.3)])
def test_closed_form_equals_power_sum_bounds(theorem, rho, beta):
    p = WrightParams(rho, beta)
    a = bounds_closed_form(theorem, p).as_tuple()
    b = bounds_from_sums(rayleigh_sums(theorem, p), theorem).as_tuple()
    assert a == pytest.approx(b, rel=1e-11)


@pytest.mark.parametrize("theorem", list(Theorem))
@given(params_st)
def test_ladder_property(theorem, p):
    b = bounds_closed_form(theorem, p)
    assert b.ladder_ok
    assert b.lower_k1 <= b.lower_k2 * (1 + 1e-12) < b.upper_k2 <= b.upper_k1 * (1 + 1e-12)


@pytest.mark.parametrize("theorem", list(Theorem))
@settings(max_examples=8)
@given(params_st)
def test_bounds_bracket_radius(theorem, p):
    info = THEOREMS[theorem]
    r = radius(RadiusQuery(info.kind, info.norm, p)).value
    assert bounds_closed_form(theorem, p).brackets(r)


def test_negative_delta_8_9_region():
    # 8 Gamma(b) Gamma(2r+b) < 9 Gamma(r+b)^2 at small rho; the T4 denominator stays positive
    p = WrightParams(0.1, 1.0)
    b = bounds_closed_form(Theorem.T4, p)
    r = radius(RadiusQuery(THEOREMS[Theorem.T4].kind, THEOREMS[Theorem.T4].norm, p)).value
    assert b.brackets(r) and b.ladder_ok


@pytest.mark.parametrize("theorem, family", [(Theorem.T3, "smallpsi"), (Theorem.T4, "omegacap"), (Theorem.T2, "psiprime")])
def test_sums_against_zeros(theorem, family):
    p = WrightParams(1.3, 0.9)
    power = THEOREMS[theorem].zero_power
    zs = first_zeros(family, p, 80).zeros
    s = rayleigh_sums(theorem, p)
    part1 = math.fsum(z ** -power for z in zs)
    part2 = math.fsum(z ** (-2 * power) for z in zs)
    part3 = math.fsum(z ** (-3 * power) for z in zs)
    assert 0.95 * s.s1 < part1 < s.s1
    assert part2 == pytest.approx(s.s2, rel=1e-5)
    assert part3 == pytest.approx(s.s3, rel=1e-8)


def test_t2_bessel_one_radius_oracle():
    # rho = 1, beta = 2: Psi'(z) = d/dz (z J1(2z)) = 2z J0(2z), so the radius is j_{0,1}/2
    p = WrightParams(1, 2)
    r = radius(RadiusQuery(THEOREMS[Theorem.T2].kind, THEOREMS[Theorem.T2].norm, p)).value
    assert r == pytest.approx(sp.jn_zeros(0, 1)[0] / 2, rel=1e-11)
    assert bounds_closed_form(Theorem.T2, p).brackets(r)
    # the expressions as published do not bound it
    printed = t2_bounds_as_printed(p)
    assert printed.upper_k2 < r and printed.upper_k1 < r


@pytest.mark.parametrize("rho", [0.5, 1.0, 2.0])
def test_t2_printed_agrees_at_beta_one(rho):
    p = WrightParams(rho, 1.0)
    assert t2_bounds_as_printed(p).as_tuple() == pytest.approx(bounds_closed_form(Theorem.T2, p).as_tuple(), rel=1e-12)


def test_large_beta_is_finite():
    # Gamma(3 rho + beta) overflows a double here
    for t in Theorem:
        b = bounds_closed_form(t, WrightParams(1.0, 180.0))
        assert all(math.isfinite(x) and x > 0 for x in b.as_tuple()) and b.ladder_ok


@pytest.mark.parametrize("sums", [(1.0, 2.0, 5.0), (1.0, 0.5, 0.01), (-1.0, 1.0, 1.0), (1.0, 1.0, 0.0)])
def test_sums_invariant_violation(sums):
    with pytest.raises(InvariantViolation):
        RayleighSums(*sums, 2)


def test_sums_power_validation():
    with pytest.raises(ValueError):
        RayleighSums(1.0, 0.5, 0.2, 3)


def test_single_zero_collapses_ladder():
    # one zero at t = 4: every bound equals the zero (power 1)
    b = bounds_from_sums(RayleighSums(0.25, 0.0625, 0.015625, 1))
    assert b.as_tuple() == pytest.approx((4.0, 4.0, 4.0, 4.0))
    assert b.ladder_ok and not b.brackets(4.0)


def test_report_helpers():
    b = BoundsReport(1.0, 2.0, 3.0, 4.0)
    assert b.brackets(2.5) and not b.brackets(2.0) and b.as_tuple() == (1.0, 2.0, 3.0, 4.0)
    assert not BoundsReport(2.0, 1.0, 3.0, 4.0).ladder_ok

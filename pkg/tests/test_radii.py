import math

import pytest
from hypothesis import given, settings, strategies as st

from wradii import (
    DomainError,
    Kind,
    Norm,
    RadiusQuery,
    WrightParams,
    alpha_profile,
    radius,
    radius_convex,
    radius_starlike,
    szasz_gap,
)
from wradii.radii import domain_zero, radius_target

KINDS_NORMS = [(k, n) for k in Kind for n in Norm]
params_st = st.builds(WrightParams, st.floats(0.3, 3.0), st.floats(0.3, 5.0))

# rho = 1, beta = 1: g(z) = z J0(2z), h(z) = z J0(2 sqrt z); scipy brentq / mpmath findroot
BESSEL_11 = {
    (Kind.STARLIKE, Norm.F): 0.6278918558972968,
    (Kind.STARLIKE, Norm.G): 0.6278918558972968,
    (Kind.STARLIKE, Norm.H): 0.6395594410329157,
    (Kind.CONVEX, Norm.F): 0.34787433005319986,
    (Kind.CONVEX, Norm.G): 0.34787433005319986,
    (Kind.CONVEX, Norm.H): 0.29669705716502412,
}

# rho = 0.5, beta = 2: mpmath series + mp.diff of the normalized functions, 40 digits
ORACLE_HALF_TWO = {
    (0.0, Kind.STARLIKE, Norm.F): 1.0837209231558547, (0.0, Kind.CONVEX, Norm.F): 0.58213304419439560,
    (0.0, Kind.STARLIKE, Norm.G): 0.79112924781454097, (0.0, Kind.CONVEX, Norm.G): 0.41682228633353746,
    (0.0, Kind.STARLIKE, Norm.H): 1.1744510392857779, (0.0, Kind.CONVEX, Norm.H): 0.47546555608502261,
    (0.5, Kind.STARLIKE, Norm.F): 0.79112924781454097, (0.5, Kind.CONVEX, Norm.F): 0.43909507110191956,
    (0.5, Kind.STARLIKE, Norm.G): 0.56801939320816786, (0.5, Kind.CONVEX, Norm.G): 0.31270844564467480,
    (0.5, Kind.STARLIKE, Norm.H): 0.62588548674760138, (0.5, Kind.CONVEX, Norm.H): 0.28045356583702904,
}


@pytest.mark.parametrize("kind, norm", KINDS_NORMS)
def test_bessel_case_values(kind, norm):
    assert radius(RadiusQuery(kind, norm, WrightParams(1, 1))).value == pytest.approx(BESSEL_11[kind, norm], rel=1e-11)


@pytest.mark.parametrize("alpha, kind, norm", list(ORACLE_HALF_TWO))
def test_oracle_values_rho_half(alpha, kind, norm):
    r = radius(RadiusQuery(kind, norm, WrightParams(0.5, 2.0), alpha)).value
    assert r == pytest.approx(ORACLE_HALF_TWO[alpha, kind, norm], rel=1e-11)


def test_starlike_g_example_bracket():
    r = radius_starlike(Norm.G, WrightParams(1, 1)).value
    assert math.sqrt(1 / 3) < r < math.sqrt(6 / 13)
    assert r == pytest.approx(0.6279, abs=1e-4)


def test_starlike_h_bessel_one():
    assert 1.0 < radius_starlike(Norm.H, WrightParams(1, 2)).value < 2.0


@settings(max_examples=15)
@given(params_st, st.sampled_from(KINDS_NORMS), st.floats(0.0, 0.95))
def test_result_invariants(p, kn, alpha):
    kind, norm = kn
    res = radius(RadiusQuery(kind, norm, p, alpha))
    lo, hi = res.bracket
    assert 0 < lo < res.value < hi < res.upper_domain_zero
    assert hi - lo <= 1e-12 * hi
    assert res.residual <= 1e-10
    f = radius_target(res.query)
    assert f(lo).value > 0 > f(hi).value


@settings(max_examples=10)
@given(params_st, st.sampled_from(list(Norm)), st.floats(0.0, 0.9))
def test_convex_radius_below_starlike(p, norm, alpha):
    assert radius_convex(norm, p, alpha).value < radius_starlike(norm, p, alpha).value


@settings(max_examples=8)
@given(params_st, st.sampled_from(KINDS_NORMS))
def test_alpha_profile_decreasing(p, kn):
    rs = [r.value for r in alpha_profile(*kn, p, [0.0, 0.2, 0.4, 0.6, 0.8, 0.95])]
    assert all(a > b for a, b in zip(rs, rs[1:]))


@pytest.mark.parametrize("kind, norm", KINDS_NORMS)
def test_alpha_near_one(kind, norm):
    # the radius shrinks to 0 without losing its bracket
    r = radius(RadiusQuery(kind, norm, WrightParams(1, 1), 1 - 1e-12)).value
    assert 0 < r < 1e-5


def test_target_at_origin_is_one_minus_alpha():
    q = RadiusQuery(Kind.CONVEX, Norm.F, WrightParams(0.8, 1.7), 0.25)
    assert radius_target(q)(1e-9).value == pytest.approx(0.75, abs=1e-12)


def test_domain_zero_convex_f_is_psi_prime_zero():
    p = WrightParams(1.0, 2.0)
    # Psi'(z) = d/dz (z J1(2z)) at rho = 1, beta = 2; its first zero is below j_{1,1}/2
    d = domain_zero(RadiusQuery(Kind.CONVEX, Norm.F, p))
    assert 0 < d < 1.9158529851037562


def test_rtol_argument():
    res = radius_starlike(Norm.G, WrightParams(1.2, 0.7), rtol=1e-6)
    lo, hi = res.bracket
    assert hi - lo <= 1e-6 * hi
    assert res.value == pytest.approx(radius_starlike(Norm.G, WrightParams(1.2, 0.7)).value, rel=1e-6)


@pytest.mark.parametrize("alpha", [1.0, -0.1, 1.5, math.nan])
def test_alpha_domain(alpha):
    with pytest.raises(DomainError):
        RadiusQuery(Kind.STARLIKE, Norm.G, WrightParams(1, 1), alpha)


def test_requires_positive_rho():
    with pytest.raises(DomainError):
        radius_starlike(Norm.G, WrightParams(-0.5, 1))


def test_string_enums_accepted():
    assert radius(RadiusQuery("starlike", "g", WrightParams(1, 1))).value == pytest.approx(BESSEL_11[Kind.STARLIKE, Norm.G], rel=1e-11)


# --- the inequality behind the real-axis reduction ------------------------------------------


def test_szasz_examples():
    assert szasz_gap(0.5, 1.0) == pytest.approx(0.0, abs=1e-15)
    assert szasz_gap(-0.5, 1.0) == pytest.approx(1.0 + 1 / 3)
    assert szasz_gap(0.5j, 1.0) > 0


@given(st.floats(0.01, 100.0), st.floats(0.0, 0.999), st.floats(-math.pi, math.pi))
def test_szasz_nonnegative(theta, frac, angle):
    z = complex(theta * frac * math.cos(angle), theta * frac * math.sin(angle))
    assert szasz_gap(z, theta) >= -1e-12 * (1 + abs(z) / (theta - abs(z)))


@pytest.mark.parametrize("z, theta", [(1.0, 1.0), (2j, 1.0), (-3, 2.0)])
def test_szasz_domain(z, theta):
    with pytest.raises(DomainError):
        szasz_gap(z, theta)

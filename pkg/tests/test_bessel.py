import math

import pytest
import scipy.special as sp
from hypothesis import given, strategies as st

from test_rayleigh import newton_sums
from wradii import DomainError, Norm, RayleighSums, Theorem, WrightParams, bounds_closed_form, bounds_from_sums
from wradii.bessel import (
    BesselOrder,
    bessel_j,
    bessel_j_derivative,
    corollary_bounds,
    starlike_equation_root,
    t2_corollary_corrected,
    verify_corollaries,
    verify_reduction,
)
from wradii.radii import Kind, RadiusQuery, radius


def test_frozen_values():
    # scipy.special.j0(2), j1(2)
    assert bessel_j(0, 2.0) == pytest.approx(0.22389077914123567, rel=1e-15)
    assert bessel_j(1, 2.0) == pytest.approx(0.5767248077568734, rel=1e-15)
    assert bessel_j(0, 0.0) == 1.0 and bessel_j(2, 0.0) == 0.0


@given(st.sampled_from([0.0, 0.5, 1.0, 2.0, 5.5, -0.5]), st.floats(0.01, 40.0))
def test_bessel_matches_scipy(nu, x):
    assert abs(bessel_j(nu, x) - sp.jv(nu, x)) <= 1e-13 * max(1.0, abs(sp.jv(nu, x)))


@given(st.sampled_from([0.0, 0.5, 1.0, 3.0]), st.floats(0.01, 30.0))
def test_derivative_matches_scipy(nu, x):
    assert abs(bessel_j_derivative(nu, x) - sp.jvp(nu, x)) <= 1e-13


@pytest.mark.parametrize("call", [
    lambda: bessel_j(-1.0, 1.0),
    lambda: bessel_j(0, -1.0),
    lambda: bessel_j(-0.5, 0.0),
    lambda: bessel_j_derivative(0, 0.0),
    lambda: BesselOrder(math.nan),
    lambda: verify_reduction(0, 0.0),
])
def test_domain(call):
    with pytest.raises(DomainError):
        call()


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.0])
def test_reduction(nu):
    worst = max(r / s for r, s in (verify_reduction(nu, 0.1 * i) for i in range(1, 31)))
    assert worst <= 1e-12


@pytest.mark.parametrize("theorem", [Theorem.T3, Theorem.T4, Theorem.T6, Theorem.T7])
@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.0, 5.0])
def test_published_bessel_forms_are_specializations(theorem, nu):
    got = bounds_closed_form(theorem, WrightParams(1.0, nu + 1.0)).as_tuple()
    assert got == pytest.approx(corollary_bounds(theorem, nu).as_tuple(), rel=1e-12)


@pytest.mark.parametrize("nu", [0.0, 0.5, 1.0, 2.0, 5.0])
def test_t2_corrected_bessel_form(nu):
    p = WrightParams(1.0, nu + 1.0)
    assert bounds_closed_form(Theorem.T2, p).as_tuple() == pytest.approx(t2_corollary_corrected(nu).as_tuple(), rel=1e-12)
    # independent: Newton's identities on the Taylor coefficients of z**(1-beta) Psi'
    ref = bounds_from_sums(RayleighSums(*newton_sums(Theorem.T2, 1.0, nu + 1.0), 2))
    assert t2_corollary_corrected(nu).as_tuple() == pytest.approx(ref.as_tuple(), rel=1e-12)


def test_t2_printed_matches_corrected_at_nu_zero():
    assert corollary_bounds(Theorem.T2, 0).as_tuple() == pytest.approx(t2_corollary_corrected(0).as_tuple(), rel=1e-14)


@pytest.mark.parametrize("nu, expected", [
    (0, (math.sqrt(1 / 3), math.sqrt(6 / 13))),
])
def test_t3_bessel_zero_example(nu, expected):
    b = corollary_bounds(Theorem.T3, nu)
    assert (b.lower_k1, b.upper_k1) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize("norm", list(Norm))
@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.7])
@pytest.mark.parametrize("nu", [0.0, 1.0, 2.5])
def test_starlike_equation_roots_equal_radii(norm, alpha, nu):
    bes = starlike_equation_root(norm, nu, alpha)
    wr = radius(RadiusQuery(Kind.STARLIKE, norm, WrightParams(1.0, nu + 1.0), alpha)).value
    assert bes == pytest.approx(wr, rel=1e-10)


def test_starlike_g_root_scipy_oracle():
    # J0(2r) - 2r J1(2r) = 0, solved with scipy brentq
    assert starlike_equation_root(Norm.G, 0.0) == pytest.approx(0.6278918558972968, rel=1e-12)


@pytest.mark.parametrize("nu", [0.0, 1.0, 2.0])
def test_verify_corollaries_report(nu):
    rep = verify_corollaries(nu)
    assert rep.ok, [c for c in rep.failures]
    assert not rep.failures
    info = [c for c in rep.checks if c.informational]
    assert len(info) == 2
    # the published T2 forms agree with the corrected ones only at nu = 0
    assert all(c.ok for c in info) == (nu == 0.0)

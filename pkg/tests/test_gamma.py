import math

import mpmath as mp
import pytest
from hypothesis import given, strategies as st

from wradii import DomainError, WrightParams, delta_ab, log_gamma, xi
from wradii.gamma import log_delta_ab, signed_log_sum

positive = st.floats(0.05, 40.0)
params = st.builds(WrightParams, st.floats(0.1, 4.0), st.floats(0.1, 6.0))


@pytest.mark.parametrize("x, expected", [
    (1.0, 0.0),
    (2.0, 0.0),
    (0.5, 0.5 * math.log(math.pi)),
    (10.0, math.log(362880.0)),
])
def test_log_gamma_values(x, expected):
    assert log_gamma(x) == pytest.approx(expected, rel=1e-15, abs=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.0, -0.5, math.inf, math.nan])
def test_log_gamma_rejects_non_positive(x):
    with pytest.raises(DomainError):
        log_gamma(x)


@given(positive)
def test_log_gamma_matches_mpmath(x):
    ref = float(mp.loggamma(mp.mpf(x)))
    assert log_gamma(x) == pytest.approx(ref, rel=1e-14, abs=1e-14)


@given(positive)
def test_log_gamma_recurrence(x):
    assert log_gamma(x + 1) == pytest.approx(log_gamma(x) + math.log(x), rel=1e-13, abs=1e-13)


@pytest.mark.parametrize("a, b, rho, beta, expected", [
    (9, 5, 1, 1, 13.0),        # 9*1*2 - 5*1
    (8, 9, 1, 1, 7.0),
    (4, 3, 1, 2, 12.0),        # 4*1*6 - 3*4
    (1, 1, 0.5, 1, 1 - math.pi / 4),
])
def test_delta_values(a, b, rho, beta, expected):
    assert delta_ab(a, b, WrightParams(rho, beta)) == pytest.approx(expected, rel=1e-14)


def test_delta_sign_when_b_exceeds_a_scaled():
    # 8 G(b) G(2r+b) < 9 G(r+b)^2 when rho is small: the combination is negative
    assert delta_ab(8, 9, WrightParams(0.1, 1.0)) < 0


@given(params, st.floats(1.0, 10.0), st.floats(0.01, 1.0))
def test_delta_positive_when_a_exceeds_b(p, a, frac):
    b = a * frac
    if frac == 1.0:
        return
    assert delta_ab(a, b, p) > 0


@given(params, st.floats(0.5, 20.0), st.floats(0.5, 20.0))
def test_delta_matches_mpmath(p, a, b):
    with mp.workdps(50):
        r, be = mp.mpf(p.rho), mp.mpf(p.beta)
        ref = a * mp.gamma(be) * mp.gamma(2 * r + be) - b * mp.gamma(r + be) ** 2
        scale = a * mp.gamma(be) * mp.gamma(2 * r + be)
    assert abs(delta_ab(a, b, p) - float(ref)) <= 1e-13 * float(scale)


def test_delta_large_beta_stays_finite():
    # Gamma(2 rho + beta) overflows a double here; the log form does not
    sign, lv = log_delta_ab(2.0, 1.0, WrightParams(2.0, 200.0))
    assert sign == 1.0 and math.isfinite(lv)


def test_delta_rejects_non_positive_weights():
    with pytest.raises(DomainError):
        delta_ab(0, 1, WrightParams(1, 1))


@pytest.mark.parametrize("rho, beta, expected", [(1, 1, 378.0), (1, 2, 9216.0)])
def test_xi_values(rho, beta, expected):
    assert xi(WrightParams(rho, beta)) == pytest.approx(expected, rel=1e-14)


@given(params)
def test_xi_positive(p):
    assert xi(p) > 0


def test_signed_log_sum():
    s, lv = signed_log_sum([(1.0, math.log(5.0)), (-1.0, math.log(3.0))])
    assert s == 1.0 and math.exp(lv) == pytest.approx(2.0)
    assert signed_log_sum([(1.0, 0.0), (-1.0, 0.0)]) == (0.0, -math.inf)
    assert signed_log_sum([]) == (0.0, -math.inf)


def test_gamma_kernel_needs_positive_rho():
    with pytest.raises(DomainError):
        delta_ab(2, 1, WrightParams(-0.5, 1.0))

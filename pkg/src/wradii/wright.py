"""Series evaluation of the Wright function and its companion entire functions.

Every function here reduces to a weighted series

    S_P(x) = sum_n P(n) (-1)**n x**n / (n! Gamma(n rho + beta))

with ``P`` a product of linear factors in ``n``.  Terms are formed in log space
(sign and log-magnitude) and summed with ``math.fsum``.  When the alternating
sum cancels too heavily for double precision, the same terms are re-summed
in MPFR arithmetic (gmpy2) at a working precision chosen from the cancellation depth, so the
result carries both a truncation bound and a rounding bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import gmpy2
import numpy as np

from .errors import ConvergenceError, DomainError
from .params import WrightParams

__all__ = [
    "Family",
    "SeriesValue",
    "WrightParams",
    "weighted_series",
    "phi",
    "evaluate",
    "derivative",
    "eval_derivative",
]

Factors = tuple[tuple[float, float], ...]

_EPS = 2.0**-52
_LN2 = math.log(2.0)
_STOP_REL = 1e-17
_MAX_TERMS = 200_000
# a double-precision sum is kept only if its rounding estimate is below this
_FLOAT_REL_TOL = 2.0**-46
# log(1 / min_{y>0} Gamma(y)), min attained at y = 1.4616...
_LOG_INV_GAMMA_MIN = math.log(1.0 / 0.8856031944108887) + 1e-12


class Family(str, Enum):
    """The real-analytic functions this package evaluates and hunts zeros of."""

    LAMBDA = "lambda"        # lambda(z) = phi(rho, beta, -z**2)
    PSI = "psi"              # Psi(z) = z**beta lambda(z)
    PSI_PRIME = "psiprime"   # Psi'(z)
    SMALL_PSI = "smallpsi"   # (z lambda(z))'
    OMEGA_CAP = "omegacap"   # (z lambda(sqrt z))'
    THETA = "theta"          # (z g'(z))'
    OMEGA_LOW = "omegalow"   # (z h'(z))'
    F = "f"                  # (z**beta Gamma(beta) lambda(z))**(1/beta)
    G = "g"                  # z Gamma(beta) lambda(z)
    H = "h"                  # z Gamma(beta) lambda(sqrt z)


@dataclass(frozen=True)
class SeriesValue:
    """A series value with certified truncation and estimated rounding error."""

    value: float
    truncation_bound: float
    terms_used: int
    rounding_bound: float = 0.0

    @property
    def error_bound(self) -> float:
        return self.truncation_bound + self.rounding_bound

    @property
    def sign_certain(self) -> bool:
        return abs(self.value) > self.error_bound

    def __float__(self) -> float:
        return self.value


# --- coefficient tables --------------------------------------------------------


def _gamma_sign(y: float) -> float:
    """Sign of Gamma(y); 0.0 at the poles (where 1/Gamma vanishes)."""
    if y > 0.0:
        return 1.0
    if y == math.floor(y):
        return 0.0
    return -1.0 if math.floor(y) % 2 else 1.0


class _FloatTable:
    """Per-term data for c_n = (-1)^n / (n! Gamma(n rho + beta)).

    ``log_c`` is log|c_n|, ``log_env`` a log-envelope of |c_n| whose ratio is
    eventually decreasing (equal to ``log_c`` for rho >= 0), and
    ``parts`` the sum of magnitudes of the logs entering ``log_c``, which
    drives the rounding estimate of exp(log_c).
    """

    def __init__(self, rho: float, beta: float):
        self.rho = rho
        self.beta = beta
        self.size = 0
        self.log_c = np.empty(0)
        self.log_env = np.empty(0)
        self.parts = np.empty(0)
        self.sign = np.empty(0)

    def extend(self, n_max: int) -> None:
        if n_max < self.size:
            return
        size = max(64, 2 * self.size)
        while size <= n_max:
            size *= 2
        rho, beta = self.rho, self.beta
        log_c, log_env, parts, sign = [], [], [], []
        for n in range(self.size, size):
            y = n * rho + beta
            lf = math.lgamma(n + 1.0)
            s = _gamma_sign(y)
            lg = math.lgamma(y) if s != 0.0 else math.inf
            sign.append(-s if n % 2 else s)
            log_c.append(-lf - lg)
            parts.append(lf + (abs(lg) if s != 0.0 else 0.0))
            if rho >= 0.0:
                log_env.append(-lf - lg)
            else:
                # for y = n rho + beta <= beta: 1/|Gamma(y)| <= max(1/min Gamma, Gamma(1 - y)/pi)
                # and Gamma(1 + n|rho|) <= (n!)**|rho| by log-convexity, so
                # |c_n| <= _INV_GAMMA_MIN * (n!)**-(1 + rho), whose ratio decreases
                log_env.append(_LOG_INV_GAMMA_MIN - (1.0 + rho) * lf)
        self.log_c = np.concatenate([self.log_c, log_c])
        self.log_env = np.concatenate([self.log_env, log_env])
        self.parts = np.concatenate([self.parts, parts])
        self.sign = np.concatenate([self.sign, sign])
        self.size = size


@lru_cache(maxsize=512)
def _float_table(rho: float, beta: float) -> _FloatTable:
    return _FloatTable(rho, beta)


class _MpTable:
    """c_n, and the weighted coefficients P(n) c_n, as MPFR numbers at one precision.

    Each c_n carries relative error at most (n + 3) ulps (n divisions for
    1/n!, one correctly rounded Gamma, one division, one product).
    """

    def __init__(self, rho: float, beta: float, prec: int):
        self.prec = prec
        self.rho = rho
        self.beta = beta
        self.coef: list = []
        self.weighted: dict[Factors, list] = {}
        self._inv_fact = None

    def extend(self, n_max: int) -> None:
        n = len(self.coef)
        if n > n_max:
            return
        with gmpy2.context(precision=self.prec):
            inv_fact = self._inv_fact if self._inv_fact is not None else gmpy2.mpfr(1)
            rho, beta = gmpy2.mpfr(self.rho), gmpy2.mpfr(self.beta)
            for k in range(n, n_max + 1):
                if k > 0:
                    inv_fact = inv_fact / k
                g = gmpy2.gamma(rho * k + beta)  # both inputs exact, so y rounds once
                c = inv_fact / g if gmpy2.is_finite(g) else gmpy2.mpfr(0)
                self.coef.append(-c if k % 2 else c)
            self._inv_fact = inv_fact

    def weighted_coefficients(self, factors: Factors, n_max: int) -> list:
        self.extend(n_max)
        out = self.weighted.setdefault(factors, [])
        with gmpy2.context(precision=self.prec):
            # the weights are formed in MPFR: a*k + b in doubles would round
            lins = [(gmpy2.mpfr(a), gmpy2.mpfr(b)) for a, b in factors]
            for k in range(len(out), n_max + 1):
                w = self.coef[k]
                for a, b in lins:
                    w = w * (a * k + b)
                out.append(w)
        return out


@lru_cache(maxsize=128)
def _mp_table(rho: float, beta: float, prec: int) -> _MpTable:
    return _MpTable(rho, beta, prec)


# --- the weighted series ---------------------------------------------------------


def _poly(factors: Factors, n: int) -> float:
    p = 1.0
    for a, b in factors:
        p *= a * n + b
    return p


def _first_monotone_index(factors: Factors, rho: float, beta: float) -> int:
    """Index past which every linear factor is positive."""
    n0 = 0
    for a, b in factors:
        if a <= 0:
            raise DomainError("weight factors must have positive slope in n")
        n0 = max(n0, math.floor(-b / a) + 1)
    return n0


def _logsumexp(values: np.ndarray) -> float:
    values = values[np.isfinite(values)]
    if values.size == 0:
        return -math.inf
    m = float(values.max())
    return m + math.log(math.fsum(np.exp(values - m).tolist()))


class _Terms:
    """Log-magnitudes and signs of the first terms of one weighted series."""

    def __init__(self, table: _FloatTable, factors: Factors, x: float, count: int):
        table.extend(count + 1)
        n = np.arange(count + 1, dtype=float)
        log_p = np.zeros(count + 1)
        sign_p = np.ones(count + 1)
        for a, b in factors:
            lin = a * n + b
            with np.errstate(divide="ignore"):
                log_p += np.log(np.abs(lin))
            sign_p *= np.sign(lin)
        log_x = math.log(abs(x))
        sx = np.where(n % 2 == 1, -1.0, 1.0) if x < 0 else 1.0
        self.sign = (table.sign[: count + 1] * sign_p * sx)[:count]
        self.log = (log_p + n * log_x + table.log_c[: count + 1])[:count]
        self.log[self.sign == 0.0] = -math.inf
        with np.errstate(invalid="ignore"):
            self.comp = (np.abs(log_p) + n * abs(log_x) + table.parts[: count + 1] + 1.0)[:count]
        self.comp[self.sign == 0.0] = 0.0
        with np.errstate(invalid="ignore"):
            self.env = log_p + n * log_x + table.log_env[: count + 1]


def _stop_index(terms: _Terms, n_mono: int, goal: float) -> tuple[int, float] | None:
    """First n where the tail bound meets ``goal`` for three consecutive terms."""
    env = terms.env
    with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
        ratio = np.exp(env[1:] - env[:-1])
        tail = np.where(env[:-1] > -745.0, np.exp(env[:-1]) * ratio / (1.0 - ratio), 0.0)
    idx = np.arange(ratio.size)
    ok = (idx >= n_mono) & (ratio < 0.5) & ((tail <= goal) | (tail == 0.0))
    run = ok[2:] & ok[1:-1] & ok[:-2]
    hits = np.flatnonzero(run)
    if hits.size == 0:
        return None
    n = int(hits[0]) + 2
    return n, float(tail[n])


def weighted_series(params: WrightParams, factors: Factors, x: float) -> SeriesValue:
    """Evaluate ``sum_n P(n) (-1)**n x**n / (n! Gamma(n rho + beta))``.

    ``factors`` lists the linear factors ``(a, b)`` of ``P(n) = prod(a*n + b)``;
    each slope ``a`` must be positive.  Summation stops once the geometric
    tail bound, taken from the ratio of the term envelope, is below ``1e-17``
    of the sum for three consecutive terms with ratio < 1/2.  For ``rho > 0``
    the envelope ratio decreases past the index where all factors are positive
    (log-convexity of Gamma), which makes the tail bound rigorous.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"series argument must be finite, got {x!r}")
    rho, beta = params.rho, params.beta
    if x == 0.0:
        return SeriesValue(_poly(factors, 0) / math.gamma(beta), 0.0, 1)

    table = _float_table(rho, beta)
    n_mono = _first_monotone_index(factors, rho, beta)
    count = 64
    goal = None
    while True:
        terms = _Terms(table, factors, x, count)
        if goal is None:
            goal = _STOP_REL * _magnitude_guess(terms)
        stop = _stop_index(terms, n_mono, goal)
        if stop is None:
            count *= 2
            if count > _MAX_TERMS:
                raise ConvergenceError(f"series did not converge within {_MAX_TERMS} terms at x={x!r}")
            continue
        n, tail = stop
        value, rounding = _resolve(params, factors, x, terms, n + 1)
        if tail <= _STOP_REL * abs(value) or tail == 0.0 or value == 0.0:
            return SeriesValue(value, tail, n + 1, rounding)
        goal = _STOP_REL * abs(value)


def _magnitude_guess(terms: _Terms) -> float:
    """A guess at |sum|: the first term, shrunk by as much as the terms grow.

    Alternating sums whose terms peak far above the first one typically
    cancel down by about that factor; the guess only sets where to look,
    the stopping rule is rechecked against the computed value.
    """
    finite = terms.log[np.isfinite(terms.log)]
    first, top = float(finite[0]), float(finite.max())
    return math.exp(max(2.0 * first - top, -700.0))


def _resolve(params, factors, x, terms: _Terms, count: int) -> tuple[float, float]:
    """Sum the first ``count`` terms; returns (value, rounding_bound)."""
    logs = terms.log[:count]
    top = float(logs.max())
    if top < 700.0:
        scaled = terms.sign[:count] * np.exp(logs - top)
        value = math.fsum(scaled.tolist()) * math.exp(top)
        abs_err = 4.0 * _EPS * math.exp(top) * math.fsum((np.exp(logs - top) * terms.comp[:count]).tolist())
        if value != 0.0 and abs_err <= _FLOAT_REL_TOL * abs(value):
            return value, abs_err
    first = float(logs[np.isfinite(logs)][0])
    return _resolve_mp(params, factors, x, logs, top, first)


def _resolve_mp(params, factors, x, logs: np.ndarray, top: float, first: float) -> tuple[float, float]:
    count = logs.size
    # coefficient error (count + 3 + 2 len(factors)) ulps, Horner adds 2 count more
    log_abs_sum = _logsumexp(logs) + math.log(4.0 * (count + 4 + len(factors)))
    prec = 53 + 40 + math.ceil(2.0 * max(0.0, top - first) / _LN2)
    cap = prec + 1024
    value = 0.0
    rounding = math.inf
    for _ in range(6):
        prec = 64 * math.ceil(prec / 64)
        table = _mp_table(params.rho, params.beta, prec)
        coef = table.weighted_coefficients(factors, count - 1)
        with gmpy2.context(precision=prec):
            xm = gmpy2.mpfr(x)
            acc = gmpy2.mpfr(0)
            for c in reversed(coef[:count]):
                acc = acc * xm + c
        value = float(acc)
        log_round = log_abs_sum - prec * _LN2
        # plus half an ulp for the conversion to a double
        rounding = (math.exp(log_round) if log_round < 709.0 else math.inf) + 0.5 * _EPS * abs(value)
        if acc == 0:
            if prec >= cap:
                return 0.0, rounding
            prec += 128
            continue
        log_value = float(gmpy2.log(abs(acc)))
        if log_round <= log_value - 50 * _LN2 or prec >= cap:
            return value, rounding
        prec = min(cap, prec + math.ceil((log_round - log_value) / _LN2) + 64)
    return value, rounding


# --- families ----------------------------------------------------------------------


@dataclass(frozen=True)
class _Shape:
    factors: Factors
    step: int          # the series runs over z**step
    offset: float      # outside power z**offset
    gamma_scaled: bool  # multiplied by Gamma(beta)
    real_line: bool    # defined for negative arguments


def _shape(family: Family, beta: float) -> _Shape:
    if family is Family.LAMBDA:
        return _Shape((), 2, 0.0, False, True)
    if family is Family.PSI:
        return _Shape((), 2, beta, False, False)
    if family is Family.PSI_PRIME:
        return _Shape(((2.0, beta),), 2, beta - 1.0, False, False)
    if family is Family.SMALL_PSI:
        return _Shape(((2.0, 1.0),), 2, 0.0, False, True)
    if family is Family.OMEGA_CAP:
        return _Shape(((1.0, 1.0),), 1, 0.0, False, False)
    if family is Family.THETA:
        return _Shape(((2.0, 1.0), (2.0, 1.0)), 2, 0.0, True, True)
    if family is Family.OMEGA_LOW:
        return _Shape(((1.0, 1.0), (1.0, 1.0)), 1, 0.0, True, False)
    if family is Family.G:
        return _Shape((), 2, 1.0, True, True)
    if family is Family.H:
        return _Shape((), 1, 1.0, True, False)
    raise DomainError(f"family {family!r} has no plain series shape")


def phi(params: WrightParams, z: float) -> SeriesValue:
    """The Wright function ``phi(rho, beta, z)`` for real ``z``."""
    return weighted_series(params, (), -float(z))


def _check_params(family: Family, params: WrightParams) -> None:
    if family is not Family.LAMBDA:
        params.require_positive()


def evaluate(family: Family, params: WrightParams, x: float) -> SeriesValue:
    """Value of ``family`` at the real point ``x``."""
    return derivative(family, params, x, 0)


def derivative(family: Family, params: WrightParams, x: float, order: int = 1) -> SeriesValue:
    """Term-wise derivative of order 0, 1 or 2 of ``family`` at ``x``."""
    family = Family(family)
    if order not in (0, 1, 2):
        raise DomainError(f"derivative order must be 0, 1 or 2, got {order!r}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {x!r}")
    _check_params(family, params)
    if family is Family.F:
        return _f_derivative(params, x, order)

    shape = _shape(family, params.beta)
    if x < 0 and not shape.real_line:
        raise DomainError(f"{family.value} is only defined for x >= 0, got {x!r}")
    k, e = shape.step, shape.offset
    factors = shape.factors + tuple((float(k), e - j) for j in range(order))
    power = e - order
    scale = math.gamma(params.beta) if shape.gamma_scaled else 1.0

    if x == 0.0:
        return SeriesValue(scale * _value_at_origin(params, factors, k, power), 0.0, 1)

    series = weighted_series(params, factors, x**k if k == 2 else x)
    if power == 0.0:
        pre = scale
    elif power == round(power):
        pre = scale * x ** int(power)
    else:
        pre = scale * x**power
    return SeriesValue(
        pre * series.value,
        abs(pre) * series.truncation_bound,
        series.terms_used,
        abs(pre) * series.rounding_bound,
    )


def _value_at_origin(params: WrightParams, factors: Factors, k: int, power: float) -> float:
    """Limit at x = 0 of ``x**power * S_P(x**k)``; only terms with total power <= 0 matter."""
    total = 0.0
    n = 0
    while k * n + power <= 0.0:
        weight = _poly(factors, n)
        if weight != 0.0:
            if k * n + power < 0.0:
                raise DomainError("the function is singular at x = 0 for these parameters")
            total += weight * (-1.0) ** n / (math.factorial(n) * math.gamma(n * params.rho + params.beta))
        n += 1
    return total


def _f_derivative(params: WrightParams, z: float, order: int) -> SeriesValue:
    """F(z) = z (Gamma(beta) lambda(z))**(1/beta) on 0 <= z < first zero of lambda."""
    beta = params.beta
    if z < 0.0:
        raise DomainError(f"f is only defined for z >= 0, got {z!r}")
    if z == 0.0:
        return SeriesValue((0.0, 1.0, 0.0)[order], 0.0, 1)
    x = z * z
    p0 = weighted_series(params, (), x)
    if p0.value <= 0.0:
        raise DomainError("f is only defined below the first positive zero of lambda")
    gp = math.gamma(beta) * p0.value
    root = gp ** (1.0 / beta)
    rel0 = p0.error_bound / p0.value
    if order == 0:
        value = z * root
        return SeriesValue(value, abs(value) * p0.truncation_bound / (beta * p0.value),
                           p0.terms_used, abs(value) * p0.rounding_bound / (beta * p0.value))
    p1 = weighted_series(params, ((2.0, beta),), x)
    q1 = p1.value / p0.value
    rel1 = p1.error_bound / abs(p1.value) if p1.value else math.inf
    if order == 1:
        value = root * q1 / beta
        err = abs(value) * (rel0 * (1.0 + 1.0 / beta) + rel1)
        return SeriesValue(value, err, max(p0.terms_used, p1.terms_used))
    p2 = weighted_series(params, ((2.0, beta), (2.0, beta - 1.0)), x)
    q2 = p2.value / p0.value
    bracket = (1.0 - beta) / beta**2 * q1 * q1 + q2 / beta
    value = root * bracket / z
    spread = (abs(q1 * q1) * (2 * rel1 + 2 * rel0) + abs(q2) * (p2.error_bound / max(abs(p2.value), 1e-300) + rel0))
    err = abs(root / z) * spread * max(1.0, 1.0 / beta**2) + abs(value) * rel0 / beta
    return SeriesValue(value, err, max(p0.terms_used, p1.terms_used, p2.terms_used))


eval_derivative = derivative

"""Gamma-function kernel: log-gamma and the gamma combinations used by the bounds.

All products of gamma values are formed in log space so that large ``beta``
(where ``Gamma(3*rho + beta)`` overflows a double) stays representable.
"""

from __future__ import annotations

import math
from typing import Iterable

from .errors import DomainError
from .params import WrightParams

__all__ = ["log_gamma", "delta_ab", "xi", "log_delta_ab", "signed_log_sum", "GammaLogs"]


def log_gamma(x: float) -> float:
    """Return ``ln Gamma(x)`` for finite ``x > 0``."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"log_gamma needs a finite positive argument, got {x!r}")
    return math.lgamma(x)


class GammaLogs:
    """``ln Gamma`` at beta, rho+beta, 2rho+beta and 3rho+beta for one parameter pair."""

    __slots__ = ("g", "a", "b", "c")

    def __init__(self, params: WrightParams):
        params.require_positive()
        rho, beta = params.rho, params.beta
        self.g = log_gamma(beta)
        self.a = log_gamma(rho + beta)
        self.b = log_gamma(2 * rho + beta)
        self.c = log_gamma(3 * rho + beta)


def signed_log_sum(terms: Iterable[tuple[float, float]]) -> tuple[float, float]:
    """Sum signed numbers given as ``(sign, log|value|)`` pairs.

    Returns ``(sign, log|sum|)``; a vanishing sum is reported as ``(0.0, -inf)``.
    """
    terms = [(s, lv) for s, lv in terms if s != 0.0]
    if not terms:
        return 0.0, -math.inf
    m = max(lv for _, lv in terms)
    total = math.fsum(s * math.exp(lv - m) for s, lv in terms)
    if total == 0.0:
        return 0.0, -math.inf
    return math.copysign(1.0, total), m + math.log(abs(total))


def log_delta_ab(a: float, b: float, params: WrightParams) -> tuple[float, float]:
    """``Delta_{a,b}`` as ``(sign, log|Delta|)``; see :func:`delta_ab`."""
    if not (a > 0 and b > 0):
        raise DomainError(f"delta_ab needs a > 0 and b > 0, got a={a!r}, b={b!r}")
    lg = GammaLogs(params)
    p = math.log(a) + lg.g + lg.b
    q = math.log(b) + 2.0 * lg.a
    if p == q:
        return 0.0, -math.inf
    # e**p - e**q = e**hi * (1 - e**(lo - hi)); expm1 keeps the digits when p ~ q
    hi, lo, sign = (p, q, 1.0) if p > q else (q, p, -1.0)
    return sign, hi + math.log(-math.expm1(lo - hi))


def delta_ab(a: float, b: float, params: WrightParams) -> float:
    """``a Gamma(beta) Gamma(2rho+beta) - b Gamma(rho+beta)**2``.

    Positive whenever ``a > b > 0`` by log-convexity of the gamma function.
    """
    sign, lv = log_delta_ab(a, b, params)
    return sign * math.exp(lv) if sign else 0.0


def xi(params: WrightParams) -> float:
    """``(beta+2)**2 Gamma(beta) Gamma(3rho+beta) Delta_{2(beta+2), beta+4}``."""
    beta = params.beta
    lg = GammaLogs(params)
    sign, ld = log_delta_ab(2.0 * (beta + 2.0), beta + 4.0, params)
    if sign == 0.0:
        return 0.0
    return sign * math.exp(2.0 * math.log(beta + 2.0) + lg.g + lg.c + ld)

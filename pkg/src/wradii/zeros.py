"""Positive zeros of the Wright-type entire functions.

Zeros are located by scanning for sign changes and refined by bisection, so
each reported zero comes with a bracket on which the function has certified
opposite signs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import DomainError, DoubleZeroError, ScanExhaustedError
from .gamma import log_gamma
from .params import WrightParams
from .roots import bisect, default_rtol
from .wright import Factors, Family, SeriesValue, weighted_series

__all__ = ["ZeroSequence", "InterlacingReport", "first_zeros", "check_interlacing", "zero_scale"]

# (weight factors, series runs over t**2?) of the positive-prefactor-free part
_REDUCED: dict[Family, tuple[Callable[[float], Factors], bool]] = {
    Family.LAMBDA: (lambda beta: (), True),
    Family.PSI: (lambda beta: (), True),
    Family.F: (lambda beta: (), True),
    Family.G: (lambda beta: (), True),
    Family.PSI_PRIME: (lambda beta: ((2.0, beta),), True),
    Family.SMALL_PSI: (lambda beta: ((2.0, 1.0),), True),
    Family.THETA: (lambda beta: ((2.0, 1.0), (2.0, 1.0)), True),
    Family.H: (lambda beta: (), False),
    Family.OMEGA_CAP: (lambda beta: ((1.0, 1.0),), False),
    Family.OMEGA_LOW: (lambda beta: ((1.0, 1.0), (1.0, 1.0)), False),
}


@dataclass(frozen=True)
class ZeroSequence:
    """The first positive zeros of a family with their sign-change brackets."""

    family: Family
    params: WrightParams
    zeros: tuple[float, ...]
    brackets: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if any(b <= a for a, b in zip(self.zeros, self.zeros[1:])):
            raise ValueError("zeros must be strictly increasing")
        if any(not lo < z < hi for z, (lo, hi) in zip(self.zeros, self.brackets)):
            raise ValueError("each zero must lie inside its bracket")

    def __len__(self) -> int:
        return len(self.zeros)

    def __getitem__(self, i: int) -> float:
        return self.zeros[i]


def zero_scale(params: WrightParams) -> float:
    """``sqrt(Gamma(rho+beta)/Gamma(beta))``, the size of the first zeros of lambda."""
    return math.exp(0.5 * (log_gamma(params.rho + params.beta) - log_gamma(params.beta)))


def reduced_function(family: Family, params: WrightParams) -> Callable[[float], SeriesValue]:
    """The family with its positive prefactors stripped; same positive zeros."""
    make_factors, squared = _REDUCED[Family(family)]
    factors = make_factors(params.beta)
    if squared:
        return lambda t: weighted_series(params, factors, t * t)
    return lambda t: weighted_series(params, factors, t)


def first_zeros(
    family: Family,
    params: WrightParams,
    n: int,
    *,
    rtol: float | None = None,
    max_ceiling: float | None = None,
) -> ZeroSequence:
    """The ``n`` smallest positive zeros of ``family``.

    The scan starts with step ``0.1 * zero_scale`` (squared for families of
    the variable ``z`` rather than ``z**2``), tightens the step to an eighth
    of the last zero gap, and stops after ``n`` sign changes, or with
    :class:`ScanExhaustedError` past ``max_ceiling`` (default ``1e9`` scales).
    Zeros of ``F``, ``G`` and ``Psi`` are those of ``lambda``; zeros of ``H``
    are the squared zeros of ``lambda``.
    """
    family = Family(family)
    params.require_positive()
    if n < 1:
        raise DomainError(f"need n >= 1 zeros, got {n!r}")
    rtol = default_rtol() if rtol is None else rtol
    return _hunt(family, params, int(n), float(rtol), max_ceiling)


@lru_cache(maxsize=1024)
def _hunt(family: Family, params: WrightParams, n: int, rtol: float, max_ceiling: float | None) -> ZeroSequence:
    squared = _REDUCED[family][1]
    scale = zero_scale(params)
    if not squared:
        scale *= scale
    f = reduced_function(family, params)
    max_ceiling = 1e9 * scale if max_ceiling is None else max_ceiling

    step = 0.1 * scale
    zeros: list[float] = []
    brackets: list[tuple[float, float]] = []
    t_prev, v_prev = 0.0, f(0.0)
    history: list[tuple[float, SeriesValue]] = [(t_prev, v_prev)]

    def record(lo: float, hi: float, f_lo: SeriesValue, f_hi: SeriesValue) -> None:
        br = bisect(f, lo, hi, rtol=rtol, f_lo=f_lo, f_hi=f_hi)
        zeros.append(br.mid)
        brackets.append((br.lo, br.hi))

    while len(zeros) < n:
        t = t_prev + step
        if t > max_ceiling:
            raise ScanExhaustedError(f"found {len(zeros)} of {n} zeros of {family.value} below {max_ceiling:g}")
        v = f(t)
        if not v.sign_certain:
            t += 1e-3 * step
            v = f(t)
        if (v.value > 0) != (v_prev.value > 0):
            record(t_prev, t, v_prev, v)
            history = [(t, v)]
            gap = zeros[-1] - (zeros[-2] if len(zeros) > 1 else 0.0)
            step = min(gap / 8.0, step) if len(zeros) == 1 else gap / 8.0
        else:
            history.append((t, v))
            if len(history) >= 3 and _dips(history[-3:]):
                found = _resolve_dip(f, history[-3][0], history[-1][0], rtol)
                for lo, hi, flo, fhi in found:
                    record(lo, hi, flo, fhi)
                history = [(t, v)]
        t_prev, v_prev = t, v

    return ZeroSequence(family, params, tuple(zeros[:n]), tuple(brackets[:n]))


def _dips(samples: list[tuple[float, SeriesValue]]) -> bool:
    """|f| has a local minimum inside a same-sign run.

    For these functions f'/f decreases strictly between consecutive zeros, so
    |f| is unimodal on a sign-constant interval; a dip means zeros were skipped.
    """
    (_, a), (_, b), (_, c) = samples
    return abs(b.value) < abs(a.value) and abs(b.value) < abs(c.value)


def _resolve_dip(f, lo: float, hi: float, rtol: float):
    for pieces in (64, 1024, 16384):
        ts = [lo + (hi - lo) * i / pieces for i in range(pieces + 1)]
        vs = [f(t) for t in ts]
        found = [
            (ts[i], ts[i + 1], vs[i], vs[i + 1])
            for i in range(pieces)
            if (vs[i].value > 0) != (vs[i + 1].value > 0)
        ]
        if found:
            return found
    raise DoubleZeroError(f"function touches zero without crossing near [{lo!r}, {hi!r}]")


@dataclass(frozen=True)
class InterlacingReport:
    """Outcome of comparing the zeros of Psi' with those of lambda."""

    ok: bool
    derivative_zeros: tuple[float, ...]
    zeros: tuple[float, ...]
    min_gap: float

    def __bool__(self) -> bool:
        return self.ok


def check_interlacing(params: WrightParams, n: int, *, tol: float = 0.0) -> InterlacingReport:
    """Check ``zeta'_1 < lambda_1 < zeta'_2 < lambda_2 < ...`` for the first ``n`` of each.

    ``tol`` is the smallest gap accepted between neighbours in the chain.
    """
    primes = first_zeros(Family.PSI_PRIME, params, n).zeros
    lams = first_zeros(Family.LAMBDA, params, n).zeros
    chain = [z for pair in zip(primes, lams) for z in pair]
    gaps = [b - a for a, b in zip(chain, chain[1:])]
    min_gap = min(gaps) if gaps else math.inf
    return InterlacingReport(min_gap > tol, primes, lams, min_gap)

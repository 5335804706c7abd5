"""Radii of starlikeness and convexity of order alpha for the normalizations f, g, h.

Each radius is the unique root of a strictly decreasing target on the interval
below the first zero of a denominator family.  Targets are logarithmic
derivatives written as ratios of weighted series, e.g. for starlikeness of g

    1 + r lambda'(r)/lambda(r) - alpha = (1 - alpha) + S_{2n}(r**2) / S_1(r**2),

where S_P is the series with weights P(n).  These vanish only at the radius,
unlike the cleared forms that also vanish at the zeros of lambda.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .errors import ConvergenceError, DomainError, InvariantViolation
from .params import WrightParams
from .roots import bisect, default_rtol
from .wright import Factors, Family, SeriesValue, weighted_series
from .zeros import first_zeros

__all__ = [
    "Kind",
    "Norm",
    "RadiusQuery",
    "RadiusResult",
    "radius",
    "radius_starlike",
    "radius_convex",
    "alpha_profile",
    "radius_target",
    "domain_zero",
    "szasz_gap",
]

# distance of the initial bracket from the ends of (0, domain zero)
_EDGE = 1e-8


class Kind(str, Enum):
    STARLIKE = "starlike"
    CONVEX = "convex"


class Norm(str, Enum):
    F = "f"
    G = "g"
    H = "h"


@dataclass(frozen=True)
class RadiusQuery:
    kind: Kind
    norm: Norm
    params: WrightParams
    alpha: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "norm", Norm(self.norm))
        alpha = float(self.alpha)
        if not (0.0 <= alpha < 1.0):
            raise DomainError(f"alpha must lie in [0, 1), got {alpha!r}")
        object.__setattr__(self, "alpha", alpha)
        self.params.require_positive()


@dataclass(frozen=True)
class RadiusResult:
    """A radius with the bisection bracket that certifies it.

    ``upper_domain_zero`` is the first zero of the family whose vanishing
    ends the search interval (lambda, Psi', psi or Omega, squared lambda for
    starlike h).
    """

    value: float
    bracket: tuple[float, float]
    residual: float
    upper_domain_zero: float
    iterations: int
    query: RadiusQuery


def _ratio(num: SeriesValue, den: SeriesValue) -> tuple[float, float]:
    """``num/den`` with a first-order error bound padded for the second-order term."""
    q = num.value / den.value
    rel_den = den.error_bound / abs(den.value)
    if rel_den >= 0.5:
        return q, math.inf
    err = (num.error_bound + abs(q) * den.error_bound) / abs(den.value) / (1.0 - rel_den)
    return q, err


def _target_pieces(kind: Kind, norm: Norm, beta: float) -> tuple[list[tuple[Factors, Factors, float]], bool]:
    """Terms ``coef * S_num/S_den`` that, added to ``1 - alpha``, form the target.

    Each ratio is the logarithmic derivative minus its value at r = 0, so it
    is O(r**2) and carries no cancellation when alpha is close to 1.
    Returns the term list and whether the series variable is r**2 (False: r).
    """
    n2 = (2.0, 0.0)
    if kind is Kind.STARLIKE:
        if norm is Norm.F:
            return [((n2,), (), 1.0 / beta)], True
        if norm is Norm.G:
            return [((n2,), (), 1.0)], True
        return [(((1.0, 0.0),), (), 1.0)], False
    if norm is Norm.F:
        b1 = ((2.0, beta),)
        return [(b1 + (n2,), b1, 1.0), ((n2,), (), 1.0 / beta - 1.0)], True
    if norm is Norm.G:
        return [(((2.0, 1.0), n2), ((2.0, 1.0),), 1.0)], True
    return [(((1.0, 1.0), (1.0, 0.0)), ((1.0, 1.0),), 1.0)], False


def radius_target(query: RadiusQuery) -> Callable[[float], SeriesValue]:
    """The decreasing function of ``r`` whose root is the radius.

    Starlike: ``z f'/f - alpha`` on the positive axis; convex:
    ``1 + z f''/f' - alpha``.
    """
    params, alpha = query.params, query.alpha
    pieces, squared = _target_pieces(query.kind, query.norm, params.beta)
    base = 1.0 - alpha

    def target(r: float) -> SeriesValue:
        x = r * r if squared else r
        total, err, size = base, 0.0, base
        for num, den, coef in pieces:
            if coef == 0.0:
                continue
            q, e = _ratio(weighted_series(params, num, x), weighted_series(params, den, x))
            total += coef * q
            err += abs(coef) * e
            size += abs(coef * q)
        return SeriesValue(total, err + 4.0 * 2.0**-52 * size, 1)

    return target


def domain_zero(query: RadiusQuery) -> float:
    """Right end of the interval holding the radius."""
    params = query.params
    if query.kind is Kind.STARLIKE:
        lam1 = first_zeros(Family.LAMBDA, params, 1)[0]
        return lam1 * lam1 if query.norm is Norm.H else lam1
    if query.norm is Norm.F:
        zp1 = first_zeros(Family.PSI_PRIME, params, 1)[0]
        lam1 = first_zeros(Family.LAMBDA, params, 1)[0]
        if not zp1 < lam1:
            raise InvariantViolation(
                f"first zero of Psi' ({zp1!r}) does not precede the first zero of lambda ({lam1!r})"
            )
        return zp1
    if query.norm is Norm.G:
        return first_zeros(Family.SMALL_PSI, params, 1)[0]
    return first_zeros(Family.OMEGA_CAP, params, 1)[0]


def radius(query: RadiusQuery, *, rtol: float | None = None) -> RadiusResult:
    """Solve the radius equation for ``query`` by certified bisection."""
    rtol = default_rtol() if rtol is None else rtol
    upper = domain_zero(query)
    f = radius_target(query)
    lo, hi = _EDGE * upper, (1.0 - _EDGE) * upper
    f_lo, f_hi = f(lo), f(hi)
    # for alpha very close to 1 the root can sit below the default left end
    while f_lo.sign_certain and f_lo.value < 0.0:
        hi, f_hi = lo, f_lo
        lo *= 1e-8
        if lo < 1e-300:
            raise ConvergenceError(f"no positive root found for {query!r}")
        f_lo = f(lo)
    if not (f_hi.sign_certain and f_hi.value < 0.0):
        raise ConvergenceError(f"target is not certifiably negative near the domain zero {upper!r}")
    br = bisect(f, lo, hi, rtol=rtol, f_lo=f_lo, f_hi=f_hi)
    value = br.mid
    return RadiusResult(value, (br.lo, br.hi), abs(f(value).value), upper, br.iterations, query)


def radius_starlike(norm: Norm, params: WrightParams, alpha: float = 0.0, **kw) -> RadiusResult:
    return radius(RadiusQuery(Kind.STARLIKE, norm, params, alpha), **kw)


def radius_convex(norm: Norm, params: WrightParams, alpha: float = 0.0, **kw) -> RadiusResult:
    return radius(RadiusQuery(Kind.CONVEX, norm, params, alpha), **kw)


def alpha_profile(kind: Kind, norm: Norm, params: WrightParams, alphas: Sequence[float], **kw) -> list[RadiusResult]:
    """Radii over a list of orders; the domain zero is shared, so it is found once."""
    return [radius(RadiusQuery(kind, norm, params, a), **kw) for a in alphas]


def szasz_gap(z: complex, theta: float) -> float:
    """``|z|/(theta - |z|) - Re(z/(theta - z))``, nonnegative whenever ``theta > |z|``.

    This is the inequality that turns each factor of a zero product into a
    bound on the real axis, which is why the radii are attained at real r.
    """
    z = complex(z)
    if not theta > abs(z):
        raise DomainError(f"need theta > |z|, got theta={theta!r}, |z|={abs(z)!r}")
    return abs(z) / (theta - abs(z)) - (z / (theta - z)).real

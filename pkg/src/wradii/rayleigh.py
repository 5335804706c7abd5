"""Rayleigh power sums of reciprocal zeros and the Euler-Rayleigh bounds they give.

For a real entire function ``1 + sum a_n t**n`` of genus zero with positive
zeros ``t_k``, the power sums ``s_m = sum t_k**-m`` follow from the first
coefficients by Newton's identities, and for every ``m``

    s_m**(-1/m) < t_1 < s_m / s_{m+1}.

Here ``t = z**2`` for the families whose series runs in ``z**2``
(``zero_power = 2``) and ``t = z`` for the ``h``-type families
(``zero_power = 1``), so the bounds are on the first zero itself.

Gamma products are formed in log space: ``u, v, w`` below stand for
``Gamma(beta)/Gamma(k*rho + beta)`` with ``k = 1, 2, 3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvariantViolation
from .gamma import GammaLogs, log_delta_ab, signed_log_sum
from .params import WrightParams
from .radii import Kind, Norm
from .wright import Family

__all__ = [
    "Theorem",
    "TheoremInfo",
    "THEOREMS",
    "RayleighSums",
    "BoundsReport",
    "rayleigh_sums",
    "bounds_from_sums",
    "bounds_closed_form",
    "t2_bounds_as_printed",
]

LADDER_TOL = 1e-12


class Theorem(str, Enum):
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T6 = "T6"
    T7 = "T7"


@dataclass(frozen=True)
class TheoremInfo:
    """Which radius a bound family brackets, and whose zeros it is built from."""

    kind: Kind
    norm: Norm
    zero_family: Family
    zero_power: int


THEOREMS: dict[Theorem, TheoremInfo] = {
    Theorem.T2: TheoremInfo(Kind.STARLIKE, Norm.F, Family.PSI_PRIME, 2),
    Theorem.T3: TheoremInfo(Kind.STARLIKE, Norm.G, Family.SMALL_PSI, 2),
    Theorem.T4: TheoremInfo(Kind.STARLIKE, Norm.H, Family.OMEGA_CAP, 1),
    Theorem.T6: TheoremInfo(Kind.CONVEX, Norm.G, Family.THETA, 2),
    Theorem.T7: TheoremInfo(Kind.CONVEX, Norm.H, Family.OMEGA_LOW, 1),
}


@dataclass(frozen=True)
class RayleighSums:
    """``s_k = sum zero**(-zero_power * k)`` for k = 1, 2, 3."""

    s1: float
    s2: float
    s3: float
    zero_power: int

    def __post_init__(self) -> None:
        if self.zero_power not in (1, 2):
            raise ValueError(f"zero_power must be 1 or 2, got {self.zero_power!r}")
        s1, s2, s3 = self.s1, self.s2, self.s3
        if not (s1 > 0 and s2 > 0 and s3 > 0):
            raise InvariantViolation(f"power sums must be positive, got {s1!r}, {s2!r}, {s3!r}")
        # power sums of positive reals: s2 <= s1**2 and s2**2 <= s1 s3
        if s2 > s1 * s1 * (1 + LADDER_TOL) or s2 * s2 > s1 * s3 * (1 + LADDER_TOL):
            raise InvariantViolation(f"sums {s1!r}, {s2!r}, {s3!r} are not power sums of positive reals")


@dataclass(frozen=True)
class BoundsReport:
    """Euler-Rayleigh bounds of order k = 1, 2 on the radius a theorem concerns."""

    lower_k1: float
    lower_k2: float
    upper_k2: float
    upper_k1: float
    theorem: Theorem | None = None

    @property
    def ladder_ok(self) -> bool:
        slack = 1 + LADDER_TOL
        return (
            self.lower_k1 <= self.lower_k2 * slack
            and self.lower_k2 <= self.upper_k2 * slack
            and self.upper_k2 <= self.upper_k1 * slack
        )

    def brackets(self, r: float) -> bool:
        """True when ``r`` lies strictly inside ``(lower_k2, upper_k2)``."""
        return self.lower_k2 < r < self.upper_k2

    def as_tuple(self) -> tuple[float, float, float, float]:
        return self.lower_k1, self.lower_k2, self.upper_k2, self.upper_k1


def _exp(sign_log: tuple[float, float]) -> float:
    sign, lv = sign_log
    return sign * math.exp(lv) if sign else 0.0


def _sum_pair(c1: float, c2: float, lg: GammaLogs, params: WrightParams) -> float:
    """``c1**2 u**2 - c2 v`` without cancellation: ``Gamma(beta) Delta_{c1^2, c2} / (A^2 B)``."""
    sign, ld = log_delta_ab(c1 * c1, c2, params)
    return _exp((sign, lg.g + ld - 2 * lg.a - lg.b))


def _sum_triple(c1: float, c2: float, c3: float, lg: GammaLogs) -> float:
    """``c1 u**3 - c2 u v + c3 w``."""
    u, v, w = lg.g - lg.a, lg.g - lg.b, lg.g - lg.c
    return _exp(signed_log_sum([
        (1.0, math.log(c1) + 3 * u),
        (-1.0, math.log(c2) + u + v),
        (1.0, math.log(c3) + w),
    ]))


def rayleigh_sums(theorem: Theorem, params: WrightParams) -> RayleighSums:
    """Closed-form power sums of the reciprocal zeros behind ``theorem``.

    T3 (zeros of psi):      3u,   9u^2 - 5v,   27u^3 - 45/2 uv + 7/2 w
    T4 (zeros of Omega):    2u,   4u^2 - 3v,   8u^3 - 9uv + 2w
    T6 (zeros of Theta):    9u,  81u^2 - 25v, 729u^3 - 675/2 uv + 49/2 w
    T7 (zeros of omega):    4u,  16u^2 - 9v,   64u^3 - 54uv + 8w
    T2 (zeros of Psi'):     with b = beta,
        (b+2)u/b,  ((b+2)^2 u^2 - b(b+4) v)/b^2,
        (b+2)^3 u^3/b^3 - 3(b+2)(b+4) uv/(2b^2) + (b+6) w/(2b)
    """
    theorem = Theorem(theorem)
    lg = GammaLogs(params)
    u = math.exp(lg.g - lg.a)
    power = THEOREMS[theorem].zero_power
    if theorem is Theorem.T2:
        b = params.beta
        s1 = (b + 2) * u / b
        s2 = _sum_pair(b + 2, b * (b + 4), lg, params) / (b * b)
        s3 = _sum_triple((b + 2) ** 3 / b**3, 3 * (b + 2) * (b + 4) / (2 * b * b), (b + 6) / (2 * b), lg)
        return RayleighSums(s1, s2, s3, power)
    c1, c2, (t1, t2, t3) = {
        Theorem.T3: (3.0, 5.0, (27.0, 22.5, 3.5)),
        Theorem.T4: (2.0, 3.0, (8.0, 9.0, 2.0)),
        Theorem.T6: (9.0, 25.0, (729.0, 337.5, 24.5)),
        Theorem.T7: (4.0, 9.0, (64.0, 54.0, 8.0)),
    }[theorem]
    return RayleighSums(c1 * u, _sum_pair(c1, c2, lg, params), _sum_triple(t1, t2, t3, lg), power)


def bounds_from_sums(sums: RayleighSums, theorem: Theorem | None = None) -> BoundsReport:
    """``s_k**(-1/(p k))`` below and ``(s_k/s_{k+1})**(1/p)`` above, p = zero_power."""
    p = sums.zero_power
    s1, s2, s3 = sums.s1, sums.s2, sums.s3
    report = BoundsReport(
        s1 ** (-1.0 / p),
        s2 ** (-1.0 / (2 * p)),
        (s2 / s3) ** (1.0 / p),
        (s1 / s2) ** (1.0 / p),
        theorem,
    )
    if not report.ladder_ok:
        raise InvariantViolation(f"Euler-Rayleigh ladder out of order: {report.as_tuple()!r}")
    return report


# --- packaged closed forms ------------------------------------------------------
# Each bound is a product of powers of gamma values and Delta terms; they are
# assembled as logs.  ``G, A, B, C`` are ln Gamma at beta, rho+beta, 2rho+beta,
# 3rho+beta.


def _log_delta(a: float, b: float, params: WrightParams) -> float:
    sign, ld = log_delta_ab(a, b, params)
    if sign <= 0:
        raise InvariantViolation(f"Delta_{{{a:g},{b:g}}} is not positive at {params!r}")
    return ld


def _log_pos(terms: list[tuple[float, float]]) -> float:
    sign, lv = signed_log_sum(terms)
    if sign <= 0:
        raise InvariantViolation("bound denominator is not positive")
    return lv


def _signed_delta_term(coef_log: float, a: float, b: float, params: WrightParams) -> tuple[float, float]:
    """``exp(coef_log) * Delta_{a,b}`` as a signed log; Delta may be negative."""
    sign, ld = log_delta_ab(a, b, params)
    return sign, coef_log + ld


def bounds_closed_form(theorem: Theorem, params: WrightParams) -> BoundsReport:
    """The packaged bound expressions, evaluated in log space.

    T3, T4, T6 and T7 follow the published expressions term for term,
    including the Delta_{8,9} of T4, which is negative for some parameters
    and is summed with its sign.  T2 uses the expressions that follow from
    the power sums of the zeros of Psi' (see :func:`rayleigh_sums`); they
    coincide with the published ones at beta = 1 only (compare
    :func:`t2_bounds_as_printed`).
    """
    theorem = Theorem(theorem)
    lg = GammaLogs(params)
    G, A, B, C = lg.g, lg.a, lg.b, lg.c
    half, quarter = 0.5, 0.25
    ln = math.log

    if theorem is Theorem.T3:
        d = _log_delta(9, 5, params)
        den = _log_pos([_signed_delta_term(ln(9) + G + C, 6, 5, params), (1.0, ln(7) + 3 * A + B)])
        logs = (half * (A - ln(3) - G), quarter * (2 * A + B - G - d),
                half * (ln(2) + A + C + d - den), half * (ln(3) + A + B - d))
    elif theorem is Theorem.T4:
        d = _log_delta(4, 3, params)
        den = _log_pos([_signed_delta_term(G + C, 8, 9, params), (1.0, ln(2) + 3 * A + B)])
        logs = (A - ln(2) - G, half * (2 * A + B - G - d), A + C + d - den, ln(2) + A + B - d)
    elif theorem is Theorem.T6:
        d = _log_delta(81, 25, params)
        den = _log_pos([_signed_delta_term(G + C, 1458, 675, params), (1.0, ln(49) + 3 * A + B)])
        logs = (half * (A - ln(9) - G), quarter * (2 * A + B - G - d),
                half * (ln(2) + A + C + d - den), half * (ln(9) + A + B - d))
    elif theorem is Theorem.T7:
        d = _log_delta(16, 9, params)
        den = _log_pos([(1.0, ln(8) + 3 * A + B), _signed_delta_term(ln(2) + G + C, 32, 27, params)])
        logs = (A - ln(4) - G, half * (2 * A + B - G - d), A + C + d - den, ln(4) + A + B - d)
    else:
        b = params.beta
        d = _log_delta((b + 2) ** 2, b * (b + 4), params)
        den = _log_pos([
            _signed_delta_term(ln(b + 2) + G + C, 2 * (b + 2) ** 2, 3 * b * (b + 4), params),
            (1.0, 2 * ln(b) + ln(b + 6) + 3 * A + B),
        ])
        logs = (half * (ln(b) + A - ln(b + 2) - G),
                quarter * (2 * ln(b) + 2 * A + B - G - d),
                half * (ln(2 * b) + A + C + d - den),
                half * (ln(b) + ln(b + 2) + A + B - d))
    lower_k1, lower_k2, upper_k2, upper_k1 = (math.exp(x) for x in logs)
    return BoundsReport(lower_k1, lower_k2, upper_k2, upper_k1, theorem)


def t2_bounds_as_printed(params: WrightParams) -> BoundsReport:
    """The published T2 expressions, built on Delta_{(b+2)^2, b+4} and Xi.

    Kept for comparison only.  For beta != 1 they do not bound the radius;
    for instance at rho = 1, beta = 2 both upper bounds fall below the
    radius j_{0,1}/2 = 1.2024...  No ladder check is applied.
    """
    from .gamma import xi

    lg = GammaLogs(params)
    G, A, B, C = lg.g, lg.a, lg.b, lg.c
    b = params.beta
    ln = math.log
    d = _log_delta((b + 2) ** 2, b + 4, params)
    x = xi(params)
    den = _log_pos([(1.0, ln(b) + ln(b + 6) + 3 * A + B), (math.copysign(1.0, x), ln(abs(x)))])
    return BoundsReport(
        math.exp(0.5 * (A - ln(b + 2) - G)),
        math.exp(0.25 * (ln(b) + 2 * A + B - G - d)),
        math.exp(0.5 * (ln(2 * b) + A + C + d - den)),
        math.exp(0.5 * (ln(b) + ln(b + 2) + A + B - d)),
        Theorem.T2,
    )

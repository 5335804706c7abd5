"""Bessel functions of the first kind, and the rho = 1 cross-check of the pipeline.

At rho = 1, beta = nu + 1 the Wright companion is ``lambda(z) = z**-nu J_nu(2z)``,
so every radius and bound has a classical Bessel counterpart.  ``J_nu`` is
summed here from its own ascending series in mpmath, sharing no code with the
Wright evaluator, so agreement between the two is evidence rather than
tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath

from .errors import DomainError
from .params import WrightParams
from .radii import Kind, Norm, RadiusQuery, radius
from .rayleigh import BoundsReport, Theorem, THEOREMS, bounds_closed_form, t2_bounds_as_printed
from .roots import bisect
from .wright import Family, evaluate

__all__ = [
    "BesselOrder",
    "bessel_j",
    "bessel_j_derivative",
    "verify_reduction",
    "corollary_bounds",
    "t2_corollary_corrected",
    "starlike_equation_root",
    "CheckResult",
    "CorollaryReport",
    "verify_corollaries",
]


@dataclass(frozen=True)
class BesselOrder:
    nu: float

    def __post_init__(self) -> None:
        nu = float(self.nu)
        if not (math.isfinite(nu) and nu > -1.0):
            raise DomainError(f"Bessel order must exceed -1, got {self.nu!r}")
        object.__setattr__(self, "nu", nu)


def _order(nu) -> float:
    return nu.nu if isinstance(nu, BesselOrder) else BesselOrder(nu).nu


def _ascending(nu: float, x: float, weight) -> mpmath.mpf:
    """``sum_k weight(k) (-1)**k (x/2)**(2k) / (k! Gamma(k + nu + 1))`` in mpmath.

    The largest term is about ``exp(x)`` times the result at worst, so the
    working precision grows with ``x``.
    """
    with mpmath.workdps(30 + int(x / math.log(10)) + 10):
        h2 = (mpmath.mpf(x) / 2) ** 2
        term = 1 / mpmath.gamma(nu + 1)
        total = weight(0) * term
        k = 0
        while True:
            k += 1
            term = -term * h2 / (k * (k + nu))
            add = weight(k) * term
            total += add
            if k > h2 and abs(add) < mpmath.eps * abs(total) * mpmath.mpf(2) ** -20:
                return +total


def bessel_j(nu, x: float) -> float:
    """``J_nu(x)`` for ``x >= 0`` and ``nu > -1`` from the ascending series."""
    nu = _order(nu)
    x = float(x)
    if not (math.isfinite(x) and x >= 0.0):
        raise DomainError(f"bessel_j needs finite x >= 0, got {x!r}")
    if x == 0.0:
        if nu < 0.0:
            raise DomainError("J_nu is unbounded at 0 for nu < 0")
        return 1.0 if nu == 0.0 else 0.0
    with mpmath.workdps(30 + int(x / math.log(10)) + 10):
        return float(_ascending(nu, x, lambda k: 1) * (mpmath.mpf(x) / 2) ** nu)


def bessel_j_derivative(nu, x: float) -> float:
    """``J_nu'(x)`` by differentiating the ascending series term by term."""
    nu = _order(nu)
    x = float(x)
    if not (math.isfinite(x) and x > 0.0):
        raise DomainError(f"bessel_j_derivative needs finite x > 0, got {x!r}")
    with mpmath.workdps(30 + int(x / math.log(10)) + 10):
        s = _ascending(nu, x, lambda k: (2 * k + nu) / 2)
        return float(s * (mpmath.mpf(x) / 2) ** (nu - 1))


def verify_reduction(nu, z: float) -> tuple[float, float]:
    """``(residual, scale)``: ``|lambda_{1,nu+1}(z) - z**-nu J_nu(2z)|`` and ``|z**-nu J_nu(2z)|``."""
    nu = _order(nu)
    z = float(z)
    if not z > 0.0:
        raise DomainError(f"verify_reduction needs z > 0, got {z!r}")
    lam = evaluate(Family.LAMBDA, WrightParams(1.0, nu + 1.0), z).value
    ref = z**-nu * bessel_j(nu, 2.0 * z)
    return abs(lam - ref), abs(ref)


# --- the rho = 1 corollaries ------------------------------------------------------


def corollary_bounds(theorem: Theorem, nu) -> BoundsReport:
    """The published Bessel-case bounds (rho = 1, beta = nu + 1), as printed.

    For T2 the upper k = 2 denominator is taken as printed,
    ``nu^5 + 15 nu^4 + 80 nu^3 + 222 nu^2 + 319 nu + 196``; the published
    T2 expressions themselves reduce to ``14 nu^4`` there.
    """
    theorem = Theorem(theorem)
    v = _order(nu)
    sq = math.sqrt
    if theorem is Theorem.T2:
        p3 = v**3 + 7 * v**2 + 15 * v + 13
        p5 = v**5 + 15 * v**4 + 80 * v**3 + 222 * v**2 + 319 * v + 196
        b = (sq((v + 1) / (v + 3)),
             ((v + 1) ** 3 * (v + 2) / p3) ** 0.25,
             (v + 1) * sq(2 * (v + 3) * p3 / p5),
             (v + 1) * sq((v + 2) * (v + 3) / p3))
    elif theorem is Theorem.T3:
        b = (sq((v + 1) / 3),
             ((v + 1) ** 2 * (v + 2) / (4 * v + 13)) ** 0.25,
             sq((v + 1) * (v + 3) * (4 * v + 13) / (2 * (4 * v**2 + 26 * v + 49))),
             sq(3 * (v + 1) * (v + 2) / (4 * v + 13)))
    elif theorem is Theorem.T4:
        b = ((v + 1) / 2,
             (v + 1) * sq(v + 2) / sq(v + 5),
             (v + 1) * (v + 3) * (v + 5) / (v**2 + 8 * v + 23),
             2 * (v + 1) * (v + 2) / (v + 5))
    elif theorem is Theorem.T6:
        b = (sq(v + 1) / 3,
             ((v + 1) ** 2 * (v + 2) / (56 * v + 137)) ** 0.25,
             sq((v + 1) * (v + 3) * (56 * v + 137) / (2 * (208 * v**2 + 1172 * v + 1693))),
             3 * sq((v + 1) * (v + 2) / (56 * v + 137)))
    else:
        b = ((v + 1) / 4,
             sq((v + 1) ** 2 * (v + 2) / (7 * v + 23)),
             (v + 1) * (v + 3) * (7 * v + 23) / (2 * (9 * v**2 + 60 * v + 115)),
             4 * (v + 1) * (v + 2) / (7 * v + 23))
    return BoundsReport(*b, theorem)


def t2_corollary_corrected(nu) -> BoundsReport:
    """Bessel case of the T2 bounds built from the power sums of the zeros of Psi'.

    With ``q = nu^2 + 10 nu + 13``:
    ``(nu+1)/sqrt(nu+3)``, ``((nu+1)^4 (nu+2)/q)^(1/4)``,
    ``(nu+1) sqrt((nu+3) q / (2 (nu^3 + 19 nu^2 + 59 nu + 49)))``,
    ``(nu+1) sqrt((nu+2)(nu+3)/q)``.  At nu = 0 these equal the printed values.
    """
    v = _order(nu)
    q = v**2 + 10 * v + 13
    return BoundsReport(
        (v + 1) / math.sqrt(v + 3),
        ((v + 1) ** 4 * (v + 2) / q) ** 0.25,
        (v + 1) * math.sqrt((v + 3) * q / (2 * (v**3 + 19 * v**2 + 59 * v + 49))),
        (v + 1) * math.sqrt((v + 2) * (v + 3) / q),
        Theorem.T2,
    )


def _bessel_equation(norm: Norm, nu: float, alpha: float):
    """Left side of the Bessel form of the starlikeness equation, in s = z or sqrt(z)."""
    coef = {
        Norm.F: 1.0 - alpha * (nu + 1.0),
        Norm.G: 1.0 - alpha - nu,
        Norm.H: 2.0 - 2.0 * alpha - nu,
    }[norm]

    def e(s: float) -> float:
        return 2.0 * s * bessel_j_derivative(nu, 2.0 * s) + coef * bessel_j(nu, 2.0 * s)

    return e


def starlike_equation_root(norm: Norm, nu, alpha: float = 0.0, *, rtol: float = 1e-14) -> float:
    """Smallest positive root of the Bessel form of the starlikeness equation.

    f: ``2z J'(2z) + (1 - alpha(nu+1)) J(2z) = 0``
    g: ``2z J'(2z) + (1 - alpha - nu) J(2z) = 0``
    h: ``2 sqrt(z) J'(2 sqrt(z)) + (2 - 2alpha - nu) J(2 sqrt(z)) = 0``
    """
    norm = Norm(norm)
    nu = _order(nu)
    e = _bessel_equation(norm, nu, float(alpha))
    step = 0.01 * math.sqrt(nu + 1.0)
    lo, f_lo = step, e(step)
    if not f_lo > 0.0:
        raise DomainError("equation is not positive near 0; alpha out of range?")
    while True:
        hi = lo + step
        f_hi = e(hi)
        if f_hi < 0.0:
            break
        lo, f_lo = hi, f_hi
        if lo > 1e4 * (nu + 1.0):
            raise DomainError("no sign change found")
    s = bisect(e, lo, hi, rtol=rtol, f_lo=f_lo, f_hi=f_hi).mid
    return s * s if norm is Norm.H else s


# --- the report ------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    """One comparison: ``error`` against ``tolerance``; informational checks never fail a report."""

    name: str
    ok: bool
    error: float
    tolerance: float
    detail: str = ""
    informational: bool = False


@dataclass
class CorollaryReport:
    nu: float
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks if not c.informational)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.ok and not c.informational]


def _max_rel(a: BoundsReport, b: BoundsReport) -> float:
    return max(abs(x - y) / abs(y) for x, y in zip(a.as_tuple(), b.as_tuple()))


def verify_corollaries(nu, *, alphas=(0.0, 0.3, 0.7)) -> CorollaryReport:
    """Check every rho = 1 specialization at order ``nu``.

    Covers the Bessel reduction of lambda, the bound formulas against their
    Bessel forms, bracketing of the computed radii, the Bessel forms of the
    starlikeness equations, and the two rescalings tying g and h to the
    classical normalized Bessel functions.
    """
    nu = _order(nu)
    params = WrightParams(1.0, nu + 1.0)
    rep = CorollaryReport(nu)
    add = rep.checks.append

    worst = 0.0
    for i in range(1, 31):
        res, scale = verify_reduction(nu, 0.1 * i)
        worst = max(worst, res / scale)
    add(CheckResult("reduction lambda = z^-nu J_nu(2z)", worst <= 1e-12, worst, 1e-12))

    for theorem, info in THEOREMS.items():
        closed = bounds_closed_form(theorem, params)
        target = t2_corollary_corrected(nu) if theorem is Theorem.T2 else corollary_bounds(theorem, nu)
        err = _max_rel(closed, target)
        add(CheckResult(f"{theorem.value} closed form vs Bessel form", err <= 1e-12, err, 1e-12))
        r = radius(RadiusQuery(info.kind, info.norm, params, 0.0)).value
        inside = target.brackets(r) and target.ladder_ok
        gap = min(r - target.lower_k2, target.upper_k2 - r)
        add(CheckResult(
            f"{theorem.value} brackets r={r:.12g}", inside, max(0.0, -gap), 0.0,
            f"({target.lower_k2:.12g}, {target.upper_k2:.12g})",
        ))
    printed = corollary_bounds(Theorem.T2, nu)
    err = _max_rel(t2_bounds_as_printed(params), printed)
    add(CheckResult("T2 as published vs its printed Bessel form", err <= 1e-12, err, 1e-12,
                    "upper k=2 differs unless nu = 0 (15 nu^4 printed, 14 nu^4 implied)", True))
    err = _max_rel(printed, t2_corollary_corrected(nu))
    add(CheckResult("T2 printed Bessel form vs zeros of Psi'", err <= 1e-12, err, 1e-12,
                    "agree only at nu = 0", True))

    for norm in Norm:
        for alpha in alphas:
            bes = starlike_equation_root(norm, nu, alpha)
            wr = radius(RadiusQuery(Kind.STARLIKE, norm, params, alpha)).value
            err = abs(bes - wr) / wr
            add(CheckResult(f"starlike {norm.value} alpha={alpha:g}: Bessel root vs radius", err <= 1e-10, err, 1e-10))

    c = 2.0**nu * math.gamma(nu + 1.0)
    worst_g = worst_h = 0.0
    for i in range(1, 11):
        z = 0.1 * i
        small_phi = c * (2 * z) ** (1 - nu) * bessel_j(nu, 2 * z)
        g = evaluate(Family.G, params, z).value
        worst_g = max(worst_g, abs(small_phi - 2 * g) / abs(2 * g))
        big_phi = c * (4 * z) ** (1 - nu / 2) * bessel_j(nu, math.sqrt(4 * z))
        h = evaluate(Family.H, params, z).value
        worst_h = max(worst_h, abs(big_phi - 4 * h) / abs(4 * h))
    add(CheckResult("phi_nu(2z) = 2 g(z)", worst_g <= 1e-12, worst_g, 1e-12))
    add(CheckResult("Phi_nu(4z) = 4 h(z)", worst_h <= 1e-12, worst_h, 1e-12))
    return rep

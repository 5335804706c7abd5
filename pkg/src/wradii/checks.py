"""Invariant suites run by ``wradii verify``.

Each suite returns a list of :class:`CheckResult`; randomized suites draw from
a ``random.Random`` seeded by the caller so reports are reproducible.
"""

from __future__ import annotations

import cmath
import math
import random
from typing import Callable, Sequence

from .bessel import CheckResult, verify_corollaries, verify_reduction
from .params import WrightParams
from .radii import Kind, Norm, RadiusQuery, alpha_profile, radius, szasz_gap
from .rayleigh import THEOREMS, Theorem, bounds_closed_form, bounds_from_sums, rayleigh_sums
from .wright import Family, derivative, evaluate
from .zeros import check_interlacing, first_zeros

__all__ = ["SUITES", "run_suite", "GRID_RHO", "GRID_BETA"]

GRID_RHO = (0.5, 1.0, 2.0)
GRID_BETA = (0.5, 1.0, 2.0, 5.0)


def _grid():
    for rho in GRID_RHO:
        for beta in GRID_BETA:
            yield WrightParams(rho, beta)


def suite_reduction(rng, nus) -> list[CheckResult]:
    out = []
    for nu in (0.0, 0.5, 1.0, 2.0):
        worst = 0.0
        for i in range(1, 31):
            res, scale = verify_reduction(nu, 0.1 * i)
            worst = max(worst, res / scale)
        out.append(CheckResult(f"lambda_(1,{nu + 1:g}) vs z^-nu J_nu(2z) on z=0.1..3", worst <= 1e-12, worst, 1e-12))
    return out


def suite_corollaries(rng, nus) -> list[CheckResult]:
    out = []
    for nu in nus:
        for c in verify_corollaries(nu).checks:
            out.append(CheckResult(f"nu={nu:g} {c.name}", c.ok, c.error, c.tolerance, c.detail, c.informational))
    return out


def suite_bracketing(rng, nus) -> list[CheckResult]:
    out = []
    for p in _grid():
        for theorem, info in THEOREMS.items():
            r = radius(RadiusQuery(info.kind, info.norm, p, 0.0)).value
            b = bounds_closed_form(theorem, p)
            ok = b.brackets(r) and b.ladder_ok
            gap = min(r - b.lower_k2, b.upper_k2 - r)
            out.append(CheckResult(
                f"{theorem.value} rho={p.rho:g} beta={p.beta:g}", ok, max(0.0, -gap), 0.0,
                f"{b.lower_k1:.10g} <= {b.lower_k2:.10g} < r={r:.10g} < {b.upper_k2:.10g} <= {b.upper_k1:.10g}",
            ))
    return out


def suite_interlacing(rng, nus) -> list[CheckResult]:
    out = []
    for p in _grid():
        rep = check_interlacing(p, 5, tol=1e-10)
        out.append(CheckResult(f"zeros of Psi' and lambda interlace, rho={p.rho:g} beta={p.beta:g}",
                               rep.ok, max(0.0, 1e-10 - rep.min_gap), 0.0, f"min gap {rep.min_gap:.3g}"))
    return out


_CONSISTENCY = (
    (Kind.STARLIKE, Norm.G, Family.SMALL_PSI),
    (Kind.STARLIKE, Norm.H, Family.OMEGA_CAP),
    (Kind.CONVEX, Norm.G, Family.THETA),
    (Kind.CONVEX, Norm.H, Family.OMEGA_LOW),
)


def suite_consistency(rng, nus) -> list[CheckResult]:
    out = []
    for p in _grid():
        for kind, norm, fam in _CONSISTENCY:
            r = radius(RadiusQuery(kind, norm, p, 0.0)).value
            z = first_zeros(fam, p, 1)[0]
            err = abs(r - z)
            out.append(CheckResult(f"{kind.value} {norm.value} radius = first zero of {fam.value}, "
                                   f"rho={p.rho:g} beta={p.beta:g}", err <= 1e-10, err, 1e-10))
    return out


def suite_equivalence(rng, nus) -> list[CheckResult]:
    worst = {t: 0.0 for t in Theorem}
    for _ in range(100):
        p = WrightParams(rng.uniform(0.25, 4.0), rng.uniform(0.25, 4.0))
        for t in Theorem:
            a = bounds_closed_form(t, p).as_tuple()
            b = bounds_from_sums(rayleigh_sums(t, p), t).as_tuple()
            worst[t] = max(worst[t], max(abs(x - y) / abs(y) for x, y in zip(a, b)))
    return [CheckResult(f"{t.value} closed form = power-sum bounds on 100 draws", e <= 1e-11, e, 1e-11)
            for t, e in worst.items()]


def suite_monotonicity(rng, nus) -> list[CheckResult]:
    alphas = [i / 10 for i in range(10)]
    out = []
    for p in (WrightParams(1.0, 1.0), WrightParams(0.5, 2.0)):
        for kind in Kind:
            for norm in Norm:
                rs = [r.value for r in alpha_profile(kind, norm, p, alphas)]
                steps = [a - b for a, b in zip(rs, rs[1:])]
                out.append(CheckResult(f"{kind.value} {norm.value} decreasing in alpha, rho={p.rho:g} beta={p.beta:g}",
                                       min(steps) > 0, max(0.0, -min(steps)), 0.0))
    return out


def suite_rayleigh(rng, nus) -> list[CheckResult]:
    out = []
    for rho in GRID_RHO:
        for beta in (0.5, 1.0, 2.0):
            p = WrightParams(rho, beta)
            for theorem, fam, power in ((Theorem.T3, Family.SMALL_PSI, 2), (Theorem.T4, Family.OMEGA_CAP, 1)):
                s1 = rayleigh_sums(theorem, p).s1
                part = math.fsum(z ** -power for z in first_zeros(fam, p, 50).zeros)
                ratio = part / s1
                out.append(CheckResult(f"sum of 50 zeros of {fam.value} vs s1, rho={rho:g} beta={beta:g}",
                                       0.9 < ratio < 1.0, ratio, 0.9, f"ratio {ratio:.6f} must lie in (0.9, 1)"))
    return out


def suite_szasz(rng, nus) -> list[CheckResult]:
    worst = math.inf
    for _ in range(1000):
        theta = rng.uniform(0.01, 10.0)
        z = cmath.rect(theta * rng.random(), rng.uniform(-math.pi, math.pi))
        worst = min(worst, szasz_gap(z, theta))
    return [CheckResult("|z|/(theta-|z|) >= Re z/(theta-z) on 1000 draws", worst >= 0.0, max(0.0, -worst), 0.0,
                        f"smallest slack {worst:.3g}")]


def suite_derivatives(rng, nus) -> list[CheckResult]:
    h = 1e-5
    worst = {f: 0.0 for f in (Family.LAMBDA, Family.PSI, Family.G, Family.H)}
    for _ in range(20):
        p = WrightParams(rng.uniform(0.5, 2.0), rng.uniform(0.5, 3.0))
        x = rng.uniform(0.2, 2.0)
        for fam in worst:
            for order in (1, 2):
                exact = derivative(fam, p, x, order).value
                lo = derivative(fam, p, x - h, order - 1).value
                hi = derivative(fam, p, x + h, order - 1).value
                fd = (hi - lo) / (2 * h)
                worst[fam] = max(worst[fam], abs(exact - fd) / abs(exact))
    return [CheckResult(f"{f.value}: derivatives of order 1, 2 vs central differences", e <= 1e-7, e, 1e-7)
            for f, e in worst.items()]


SUITES: dict[str, Callable[[random.Random, Sequence[float]], list[CheckResult]]] = {
    "reduction": suite_reduction,
    "corollaries": suite_corollaries,
    "bracketing": suite_bracketing,
    "interlacing": suite_interlacing,
    "consistency": suite_consistency,
    "equivalence": suite_equivalence,
    "monotonicity": suite_monotonicity,
    "rayleigh": suite_rayleigh,
    "szasz": suite_szasz,
    "derivatives": suite_derivatives,
}


def run_suite(name: str, seed: int, nus: Sequence[float] = (0.0, 1.0, 2.0)) -> list[tuple[str, CheckResult]]:
    """Run one suite, or every suite for ``name == "all"``, each with its own seeded RNG."""
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        rng = random.Random(seed)
        out.extend((n, c) for c in SUITES[n](rng, nus))
    return out

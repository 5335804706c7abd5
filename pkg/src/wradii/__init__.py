"""Radii of starlikeness and convexity for normalized Wright functions.

The Wright function ``phi(rho, beta, z) = sum z**n / (n! Gamma(n rho + beta))``
with ``rho, beta > 0`` gives, through ``lambda(z) = phi(rho, beta, -z**2)``,
three normalized univalent-function candidates

    f(z) = (z**beta Gamma(beta) lambda(z))**(1/beta),
    g(z) = z Gamma(beta) lambda(z),
    h(z) = z Gamma(beta) lambda(sqrt z).

This package evaluates these functions and their companions with certified
error bounds, finds their zeros, solves for the radii of starlikeness and
convexity of any order alpha in [0, 1), and computes the Euler-Rayleigh
bounds on those radii.
"""

from .bessel import bessel_j, bessel_j_derivative, verify_corollaries, verify_reduction
from .errors import (
    ConvergenceError,
    DomainError,
    DoubleZeroError,
    InvariantViolation,
    ScanExhaustedError,
    WradiiError,
)
from .gamma import delta_ab, log_gamma, xi
from .params import WrightParams
from .radii import (
    Kind,
    Norm,
    RadiusQuery,
    RadiusResult,
    alpha_profile,
    radius,
    radius_convex,
    radius_starlike,
    szasz_gap,
)
from .rayleigh import (
    BoundsReport,
    RayleighSums,
    Theorem,
    bounds_closed_form,
    bounds_from_sums,
    rayleigh_sums,
    t2_bounds_as_printed,
)
from .wright import Family, SeriesValue, derivative, eval_derivative, evaluate, phi, weighted_series
from .zeros import ZeroSequence, check_interlacing, first_zeros

__version__ = "0.1.0"

__all__ = [
    "WrightParams", "Family", "SeriesValue", "phi", "evaluate", "derivative", "eval_derivative",
    "weighted_series", "log_gamma", "delta_ab", "xi", "ZeroSequence", "first_zeros",
    "check_interlacing", "Kind", "Norm", "RadiusQuery", "RadiusResult", "radius", "radius_starlike",
    "radius_convex", "alpha_profile", "szasz_gap", "Theorem", "RayleighSums", "BoundsReport",
    "rayleigh_sums", "bounds_from_sums", "bounds_closed_form", "t2_bounds_as_printed", "bessel_j",
    "bessel_j_derivative", "verify_reduction", "verify_corollaries", "WradiiError", "DomainError",
    "ConvergenceError", "ScanExhaustedError", "DoubleZeroError", "InvariantViolation",
]

"""
Evaluating Wright functions with error bounds
=============================================

The Wright function ``phi(rho, beta, z) = sum z**n / (n! Gamma(n rho + beta))``
is entire.  ``wradii`` sums it term by term and returns every value with a
certified truncation bound and a rounding estimate.
"""

# %%
# Start with the plain series.  At rho = 1, beta = 1 it is the modified Bessel
# function I0(2 sqrt z), and at rho = 0 it collapses to exp(z) / Gamma(beta).
import math

from wradii import Family, WrightParams, derivative, evaluate, phi

v = phi(WrightParams(1.0, 1.0), 1.0)
print(f"phi(1, 1, 1) = {v.value!r}  (I0(2) = 2.2795853023360673)")
print(f"  truncation bound {v.truncation_bound:.2e}, rounding {v.rounding_bound:.2e}, {v.terms_used} terms")
print(f"phi(0, 1, 1) = {phi(WrightParams(0.0, 1.0), 1.0).value!r}  (e = {math.e!r})")

# %%
# The functions behind the radii live on the negative real axis of phi:
# lambda(z) = phi(rho, beta, -z**2).  For large z the terms grow far beyond
# the result and cancel.  When double precision cannot certify the sum, the
# evaluator switches to MPFR arithmetic with enough extra bits.
p = WrightParams(1.0, 1.0)
for z in (1.0, 10.0, 30.0):
    s = evaluate(Family.LAMBDA, p, z)
    print(f"lambda({z:4.1f}) = {s.value: .17g}   error bound {s.error_bound:.1e}")
print("J0(60) = -0.09147180408906201 for comparison")

# %%
# Each family is a companion of lambda.  The normalized functions f, g and h
# vanish at 0 with unit slope, and psi = (z lambda)' is available directly.
q = WrightParams(0.7, 1.6)
for fam in (Family.F, Family.G, Family.H):
    print(f"{fam.value}: value(0) = {evaluate(fam, q, 0.0).value}, slope(0) = {derivative(fam, q, 0.0, 1).value:.15f}")

x = 0.8
lam = evaluate(Family.LAMBDA, q, x).value
dlam = derivative(Family.LAMBDA, q, x, 1).value
print(f"psi(0.8) = {evaluate(Family.SMALL_PSI, q, x).value!r}")
print(f"lambda + x lambda' = {lam + x * dlam!r}")

# %%
# Negative rho is allowed for the bare series (rho > -1).  Close to -1 the
# term ratio decays only like n**(rho + 1), and the evaluator reports a
# ConvergenceError instead of returning an uncertified number.
print(phi(WrightParams(-0.5, 1.0), 3.0))

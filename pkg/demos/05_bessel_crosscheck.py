"""
The Bessel special case as an end-to-end check
==============================================

At rho = 1 and beta = nu + 1 the Wright companion is a Bessel function,
``lambda(z) = z**-nu J_nu(2z)``.  Every quantity the package computes then
has a classical counterpart.  ``wradii.bessel`` sums J_nu from its own
series, which shares no code with the Wright evaluator, and compares the two.
"""

# %%
from wradii import Norm, WrightParams
from wradii.bessel import bessel_j, starlike_equation_root, verify_corollaries, verify_reduction
from wradii.radii import Kind, RadiusQuery, radius

for nu in (0.0, 0.5, 2.0):
    worst = max(r / s for r, s in (verify_reduction(nu, 0.1 * i) for i in range(1, 31)))
    print(f"nu = {nu}: worst relative gap between lambda and z^-nu J_nu(2z): {worst:.1e}")

# %%
# The starlikeness equations become Bessel equations.  For g, the condition
# is 2z J'(2z) + (1 - alpha - nu) J(2z) = 0.  Its smallest root is the radius
# found by the Wright pipeline.
for alpha in (0.0, 0.3, 0.7):
    a = starlike_equation_root(Norm.G, 1.0, alpha)
    b = radius(RadiusQuery(Kind.STARLIKE, Norm.G, WrightParams(1.0, 2.0), alpha)).value
    print(f"alpha = {alpha}: Bessel root {a:.15f}, radius {b:.15f}")

# %%
# ``verify_corollaries`` bundles all such checks for one order.  Informational
# lines record where the published T2 Bessel expressions differ from the ones
# implied by the zeros of Psi'.
rep = verify_corollaries(1.0)
for c in rep.checks:
    tag = "INFO" if c.informational else ("ok  " if c.ok else "FAIL")
    print(f"{tag} {c.name}: {c.error:.2e}")
print("report ok:", rep.ok)
print("J_1(2) =", bessel_j(1.0, 2.0))

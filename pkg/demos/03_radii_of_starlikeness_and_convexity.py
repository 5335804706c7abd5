"""
Radii of starlikeness and convexity
===================================

Consider a normalized function f.  Its radius of starlikeness of order alpha
is the largest r such that Re(z f'/f) > alpha on the disk |z| < r.  Its
radius of convexity uses 1 + z f''/f' instead.  For the Wright
normalizations, both extremes occur on the positive real axis.  Each radius is
therefore the root of a decreasing real function, and ``radius`` solves for
it by certified bisection.
"""

# %%
from wradii import Kind, Norm, RadiusQuery, WrightParams, alpha_profile, radius

p = WrightParams(1.0, 1.0)
for kind in Kind:
    for norm in Norm:
        res = radius(RadiusQuery(kind, norm, p))
        print(f"{kind.value:8s} {norm.value}: r = {res.value:.15f}  bracket width {res.bracket[1] - res.bracket[0]:.1e}"
              f"  below {res.upper_domain_zero:.6f}")

# %%
# Raising the order alpha shrinks every radius.  Near alpha = 1 the radius
# goes to 0.  The targets are written as (1 - alpha) plus ratios that vanish
# at r = 0, so this limit costs no accuracy.
q = WrightParams(0.5, 2.0)
alphas = [0.0, 0.25, 0.5, 0.75, 0.9, 0.99, 0.999999]
for kind in Kind:
    rs = alpha_profile(kind, Norm.G, q, alphas)
    print(kind.value, " ".join(f"{r.value:.6g}" for r in rs))

# %%
# The same radii show how the three normalizations differ.  For beta > 1,
# taking the beta-th root in f enlarges the disk.
for beta in (0.5, 1.0, 2.0, 5.0):
    w = WrightParams(1.0, beta)
    row = [radius(RadiusQuery(Kind.STARLIKE, n, w)).value for n in Norm]
    print(f"beta = {beta:3}: f {row[0]:.6f}  g {row[1]:.6f}  h {row[2]:.6f}")

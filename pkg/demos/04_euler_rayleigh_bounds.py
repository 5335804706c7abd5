"""
Euler-Rayleigh bounds
=====================

Suppose a radius is the first zero z1 of an entire function with only real
zeros.  The power sums s_k of the reciprocal zeros then bound it from both
sides:

    s_k**(-1/k) < z1**p < s_k / s_{k+1}

The sums s_1, s_2 and s_3 follow from the first Taylor coefficients.  This
gives closed-form bounds in terms of gamma values.
"""

# %%
import math

from wradii import Theorem, WrightParams, bounds_closed_form, bounds_from_sums, first_zeros, rayleigh_sums
from wradii.rayleigh import THEOREMS
from wradii.radii import RadiusQuery, radius

p = WrightParams(1.0, 1.0)
for t, info in THEOREMS.items():
    b = bounds_closed_form(t, p)
    r = radius(RadiusQuery(info.kind, info.norm, p)).value
    print(f"{t.value} ({info.kind.value} {info.norm.value}): "
          f"{b.lower_k1:.6f} <= {b.lower_k2:.6f} < r = {r:.6f} < {b.upper_k2:.6f} <= {b.upper_k1:.6f}")

# %%
# The closed forms are evaluated in log space.  They agree with the bounds
# obtained from the sums themselves.
q = WrightParams(2.7, 0.4)
for t in Theorem:
    a = bounds_closed_form(t, q).as_tuple()
    b = bounds_from_sums(rayleigh_sums(t, q), t).as_tuple()
    print(t.value, max(abs(x - y) / y for x, y in zip(a, b)))

# %%
# The sums really are sums over the zeros.  With 50 zeros the first power sum
# is nearly exhausted, and the higher ones converge much faster.
w = WrightParams(1.0, 0.5)
s = rayleigh_sums(Theorem.T3, w)
zs = first_zeros("smallpsi", w, 50).zeros
for k, sk in enumerate((s.s1, s.s2, s.s3), start=1):
    part = math.fsum(z ** (-2 * k) for z in zs)
    print(f"s{k} = {sk:.12f}   50 zeros give {part:.12f}")

# %%
# For starlikeness of f, the bounds come from the zeros of Psi'.  The T2
# expressions here are built from those power sums.  The other printed
# variant, ``t2_bounds_as_printed``, agrees with them at beta = 1 only.
from wradii import t2_bounds_as_printed

for beta in (1.0, 2.0):
    v = WrightParams(1.0, beta)
    r = radius(RadiusQuery("starlike", "f", v)).value
    print(f"beta={beta}: r={r:.6f}  bounds {bounds_closed_form(Theorem.T2, v).as_tuple()}")
    print(f"           printed variant {t2_bounds_as_printed(v).as_tuple()}")

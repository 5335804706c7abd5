"""
Zeros and interlacing
=====================

Every radius is fixed by the first positive zero of some companion of lambda.
``first_zeros`` scans for sign changes and refines each one by bisection.
Each zero therefore comes with a bracket whose endpoints have certified
opposite signs.
"""

# %%
from wradii import Family, WrightParams, check_interlacing, first_zeros

p = WrightParams(1.0, 1.0)
seq = first_zeros(Family.LAMBDA, p, 4)
for z, (lo, hi) in zip(seq.zeros, seq.brackets):
    print(f"{z:.15f}  in [{lo:.15f}, {hi:.15f}]")
print("at rho = beta = 1 these are half the zeros of J0: 1.2024127788478862, 2.7600390551431553, ...")

# %%
# For rho = 0.5 there is no classical closed form.  The scan adapts its step
# to the spacing of the zeros it has already found.
q = WrightParams(0.5, 2.0)
print([round(z, 10) for z in first_zeros(Family.LAMBDA, q, 6).zeros])

# %%
# The zeros of Psi' = (z**beta lambda)' and of lambda alternate.  Because of
# this, the convexity radius of f is governed by a zero that comes strictly
# before the first zero of lambda.
rep = check_interlacing(WrightParams(2.0, 0.5), 5, tol=1e-10)
chain = sorted([(z, "Psi'") for z in rep.derivative_zeros] + [(z, "lambda") for z in rep.zeros])
print(" < ".join(f"{name}:{z:.4f}" for z, name in chain))
print("interlaced:", rep.ok, " smallest gap:", f"{rep.min_gap:.3g}")

# %%
# The functions of sqrt(z) (h, Omega, omega) have zeros in the variable z
# itself.  Those of h are the squared zeros of lambda.
print(first_zeros(Family.H, p, 2).zeros, [z * z for z in seq.zeros[:2]])

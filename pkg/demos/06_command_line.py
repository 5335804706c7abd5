"""
Batch use from the shell
========================

The ``wradii`` command (also ``python -m wradii``) wraps the library for
scripted runs.  Tables are written as CSV with a fixed header, or as JSON.
Numbers are written with 17 significant digits, so files round-trip exactly.
"""

# %%
import subprocess
import sys


def wradii(*args: str) -> str:
    out = subprocess.run([sys.executable, "-m", "wradii", *args], capture_output=True, text=True)
    return out.stdout + out.stderr + f"[exit {out.returncode}]\n"


print(wradii("radius", "--kind", "starlike", "--norm", "g", "--rho", "1", "--beta", "1", "--format", "json"))

# %%
# A grid sweep: grids are ``start:stop:step``, inclusive of stop.  Bounds are
# filled in for alpha = 0, where a bound family exists.
print(wradii("table", "--kind", "convex", "--norm", "h", "--rho-grid", "0.5:1:0.5", "--beta-grid", "1:2:1",
             "--alpha-grid", "0:0.5:0.5"))

# %%
# Errors map to exit codes: 2 for bad flags, 3 for values outside the domain.
print(wradii("radius", "--kind", "starlike", "--norm", "g", "--rho", "1", "--beta", "1", "--alpha", "1"))

# %%
# ``verify`` runs the invariant suites with a printed seed.  It exits non-zero
# and writes a JSON failure list to stderr if any check fails.
print(wradii("verify", "--suite", "szasz"))

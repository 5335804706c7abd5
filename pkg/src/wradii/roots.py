"""Sign-certified bisection shared by the zero finder and the radius solver."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable, Union

from .errors import ConvergenceError
from .wright import SeriesValue

__all__ = ["Bracket", "bisect", "default_rtol"]

Value = Union[float, SeriesValue]

MAX_ITER = 200


def default_rtol() -> float:
    """Relative bracket width; the ``WRADII_TOL`` environment variable overrides 1e-12."""
    raw = os.environ.get("WRADII_TOL")
    if raw is None:
        return 1e-12
    tol = float(raw)
    if not (0.0 < tol < 1.0):
        raise ValueError(f"WRADII_TOL must lie in (0, 1), got {raw!r}")
    return tol


@dataclass(frozen=True)
class Bracket:
    """An interval whose endpoints carry opposite, certified signs."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float
    iterations: int

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo


def _sign(v: Value) -> tuple[float, bool]:
    if isinstance(v, SeriesValue):
        return math.copysign(1.0, v.value), v.sign_certain
    if math.isnan(v):
        return 0.0, False
    return math.copysign(1.0, v), v != 0.0


def bisect(
    f: Callable[[float], Value],
    lo: float,
    hi: float,
    *,
    rtol: float | None = None,
    f_lo: Value | None = None,
    f_hi: Value | None = None,
) -> Bracket:
    """Shrink ``[lo, hi]`` around a sign change until ``hi - lo <= rtol * |hi|``.

    Plain bisection keeps the sign-change certificate at every step.  When a
    midpoint lies so close to the root that its sign is uncertain, the points
    ``mid -+ rtol*|hi|/4`` are probed instead; if those are uncertain too,
    :class:`ConvergenceError` is raised with the bracket state.
    """
    rtol = default_rtol() if rtol is None else rtol
    f_lo = f(lo) if f_lo is None else f_lo
    f_hi = f(hi) if f_hi is None else f_hi
    s_lo, ok_lo = _sign(f_lo)
    s_hi, ok_hi = _sign(f_hi)
    if not (ok_lo and ok_hi) or s_lo == s_hi:
        raise ConvergenceError(
            f"no certified sign change on [{lo!r}, {hi!r}]: f(lo)={float(f_lo)!r}, f(hi)={float(f_hi)!r}"
        )
    it = 0
    while hi - lo > rtol * abs(hi):
        if it >= MAX_ITER:
            raise ConvergenceError(f"bisection hit {MAX_ITER} iterations on [{lo!r}, {hi!r}]")
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        f_mid = f(mid)
        s_mid, ok = _sign(f_mid)
        it += 1
        if not ok:
            # mid sits within rounding of the root: certify a short bracket around it
            lo, hi, f_lo, f_hi = _straddle(f, lo, hi, f_lo, f_hi, s_lo, mid, 0.25 * rtol * abs(hi))
            it += 2
            continue
        if s_mid == s_lo:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return Bracket(lo, hi, float(f_lo), float(f_hi), it)


def _straddle(f, lo, hi, f_lo, f_hi, s_lo, mid, delta):
    """Replace an uncertain midpoint by certified probes at ``mid -+ delta``."""
    a, b = max(lo, mid - delta), min(hi, mid + delta)
    f_a, f_b = f(a) if a > lo else f_lo, f(b) if b < hi else f_hi
    (s_a, ok_a), (s_b, ok_b) = _sign(f_a), _sign(f_b)
    if not (ok_a and ok_b):
        raise ConvergenceError(
            f"sign of f undetermined near {mid!r}: rounding exceeds the requested tolerance"
        )
    if s_a != s_lo:
        return lo, a, f_lo, f_a
    if s_b == s_lo:
        return b, hi, f_b, f_hi
    return a, b, f_a, f_b

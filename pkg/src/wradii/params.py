"""The (rho, beta) parameter pair of a Wright function."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class WrightParams:
    """Parameters of ``phi(rho, beta, z) = sum z**n / (n! Gamma(n*rho + beta))``.

    Bare series evaluation accepts ``rho > -1`` and ``beta > 0``.  Everything
    that relies on the zeros being real (zero hunting, radii, bounds) needs
    ``rho > 0`` as well; call :meth:`require_positive` there.
    """

    rho: float
    beta: float

    def __post_init__(self) -> None:
        rho, beta = float(self.rho), float(self.beta)
        if not (math.isfinite(rho) and math.isfinite(beta)):
            raise DomainError(f"parameters must be finite, got rho={rho!r}, beta={beta!r}")
        if rho <= -1.0:
            raise DomainError(f"rho must exceed -1, got {rho!r}")
        if beta <= 0.0:
            raise DomainError(f"beta must be positive, got {beta!r}")
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "beta", beta)

    def require_positive(self) -> "WrightParams":
        if self.rho <= 0.0:
            raise DomainError(f"rho must be positive for zero-based results, got {self.rho!r}")
        return self

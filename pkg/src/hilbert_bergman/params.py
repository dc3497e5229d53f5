"""The (p, alpha) parameter pair for the weighted Bergman space."""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["SpaceParams"]


@dataclass(frozen=True)
class SpaceParams:
    """Integrability exponent p and radial weight exponent alpha.

    The weight (1 - |z|^2)^alpha defines a finite measure only for
    alpha > -1; the Hilbert matrix operator is bounded on the space
    exactly when 1 < alpha + 2 < p.
    """

    p: float
    alpha: float

    def __post_init__(self):
        if self.p <= 0.0:
            raise ValueError("p must be positive")
        if self.alpha <= -1.0:
            raise ValueError("alpha must exceed -1")

    def is_bounded(self) -> bool:
        return 1.0 < self.alpha + 2.0 < self.p

    @property
    def a(self) -> float:
        """The recurring exponent (alpha + 2) / p."""
        return (self.alpha + 2.0) / self.p

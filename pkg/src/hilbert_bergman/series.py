"""Truncated power series on the unit disk.

Functions analytic in the open unit disk are represented by their
Taylor coefficient vectors, truncated at a finite degree.  The test
functions used for operator-norm lower bounds are binomial series
(1 - z)^(-gamma), whose coefficients are real and nonnegative for
gamma >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["PowerSeries", "TestFunctionSpec", "binomial_series", "evaluate"]


@dataclass(frozen=True)
class PowerSeries:
    """Taylor coefficient vector; index n holds the coefficient of z^n."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coeffs))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficient vector must be 1-d and nonempty")
        if not np.issubdtype(c.dtype, np.complexfloating):
            c = c.astype(np.float64)
        object.__setattr__(self, "coeffs", c)
        self.coeffs.setflags(write=False)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    @property
    def is_real(self) -> bool:
        return not np.issubdtype(self.coeffs.dtype, np.complexfloating)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        a, b = self.coeffs, other.coeffs
        if a.size < b.size:
            a, b = b, a
        out = a.copy()
        out[: b.size] += b
        return PowerSeries(out)

    def scale(self, c) -> "PowerSeries":
        return PowerSeries(c * self.coeffs)

    def truncate(self, degree: int) -> "PowerSeries":
        if degree >= self.degree:
            return self
        return PowerSeries(self.coeffs[: degree + 1])

    def __call__(self, z):
        return evaluate(self, z)


@dataclass(frozen=True)
class TestFunctionSpec:
    """Lower-bound test function f(z) = (1 - z)^(-gamma), truncated.

    Membership in the space with exponent p and weight alpha requires
    p * gamma < alpha + 2.
    """

    gamma: float
    degree: int = 512

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")

    def in_space(self, p: float, alpha: float) -> bool:
        return p * self.gamma < alpha + 2.0

    def build(self) -> PowerSeries:
        return binomial_series(self.gamma, self.degree)


def binomial_series(gamma: float, degree: int) -> PowerSeries:
    """Taylor coefficients of (1 - z)^(-gamma) up to the given degree.

    c_0 = 1 and c_{n+1} = c_n * (n + gamma) / (n + 1).  The principal
    branch is intended: on the real interval [0, 1) the function is the
    positive real power.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    n = np.arange(degree, dtype=np.float64)
    # cumulative product of the ratio law; exact at n = 0
    c = np.empty(degree + 1)
    c[0] = 1.0
    if degree > 0:
        c[1:] = np.cumprod((n + gamma) / (n + 1.0))
    return PowerSeries(c)


def evaluate(f: PowerSeries, z):
    """Evaluate the truncated series at z (scalar or array), |z| < 1.

    Horner's nested form; the series only represents the function inside
    the unit disk, so |z| >= 1 is rejected.
    """
    z = np.asarray(z)
    if np.any(np.abs(z) >= 1.0):
        raise ValueError("evaluation requires |z| < 1")
    acc = np.zeros_like(z, dtype=np.result_type(f.coeffs.dtype, z.dtype, float))
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    if acc.ndim == 0:
        return complex(acc) if np.iscomplexobj(acc) else float(acc)
    return acc

"""Gamma/Beta evaluations and the singular Beta-type partial integral.

The central quantity is

    beta_partial(x, a) = int_0^x t^(a-1) (1-t)^(-a) dt,   0 < a < 1,

whose value at x = 1 is B(a, 1-a) = pi / sin(pi a).  Both endpoint
exponents lie in (-1, 0), so the integral is evaluated by splitting at
1/2 and summing the binomial expansion of the regular factor on each
half; the resulting series converge geometrically with ratio <= 1/2.

A general weighted integral int_0^1 t^(a-1) (1-t)^(-a) h(t) dt is also
provided for smooth h, using the regularizing substitutions u = t^a
near 0 and v = (1-t)^(1-a) near 1 followed by Gauss-Legendre.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .params import SpaceParams

__all__ = [
    "beta",
    "target_norm",
    "beta_partial",
    "weighted_unit_integral",
]

_SERIES_TERMS = 80


def beta(x: float, y: float) -> float:
    """Beta function B(x, y) via log-Gamma, for positive arguments."""
    if x <= 0.0 or y <= 0.0:
        raise ValueError("beta requires positive arguments")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def target_norm(params: SpaceParams) -> float:
    """The conjectured operator norm pi / sin((alpha+2) pi / p).

    Only defined in the boundedness regime 1 < alpha + 2 < p.
    """
    if not params.is_bounded():
        raise ValueError(
            "unbounded: requires 1 < alpha+2 < p (got p=%g, alpha=%g)"
            % (params.p, params.alpha)
        )
    return math.pi / math.sin((params.alpha + 2.0) * math.pi / params.p)


def _lower_series(x, a: float):
    """int_0^x t^(a-1) (1-t)^(-a) dt for 0 <= x <= 1/2, elementwise.

    Expands (1-t)^(-a) = sum_k C_k t^k and integrates termwise:
    sum_k C_k x^(k+a) / (k+a), with C_0 = 1, C_{k+1} = C_k (k+a)/(k+1).
    All terms are nonnegative and decay at least like 2^(-k).
    """
    x = np.asarray(x, dtype=np.float64)
    k = np.arange(_SERIES_TERMS, dtype=np.float64)
    coeff = np.empty(_SERIES_TERMS)
    coeff[0] = 1.0
    coeff[1:] = np.cumprod((k[:-1] + a) / (k[:-1] + 1.0))
    pos = x > 0.0
    out = np.zeros_like(x)
    if np.any(pos):
        xp = x[pos][..., None]
        terms = coeff / (k + a) * xp ** (k + a)
        out[pos] = terms.sum(axis=-1)
    return out


def beta_partial(x, a: float):
    """int_0^x t^(a-1) (1-t)^(-a) dt for x in [0, 1], 0 < a < 1.

    For x > 1/2 the tail is evaluated through the reflection t -> 1-t,
    which swaps a and 1-a; the full integral is assembled from the two
    half-interval series so that beta_partial(1, a) is computed rather
    than taken from the reflection formula.

    Accepts scalar or array x.
    """
    if not 0.0 < a < 1.0:
        raise ValueError("beta_partial requires 0 < a < 1")
    x_arr = np.asarray(x, dtype=np.float64)
    if np.any(x_arr < 0.0) or np.any(x_arr > 1.0):
        raise ValueError("beta_partial requires 0 <= x <= 1")
    lo = _lower_series(np.minimum(x_arr, 0.5), a)
    out = lo
    hi = x_arr > 0.5
    if np.any(hi):
        half = _lower_series(np.asarray(0.5), a) + _lower_series(np.asarray(0.5), 1.0 - a)
        out = lo.copy()
        out[hi] = half - _lower_series(1.0 - x_arr[hi], 1.0 - a)
    if out.ndim == 0:
        return float(out)
    return out


@lru_cache(maxsize=32)
def _leggauss(n: int):
    x, w = np.polynomial.legendre.leggauss(n)
    return x, w


def _gl_on(lo: float, hi: float, n: int):
    x, w = _leggauss(n)
    mid, rad = 0.5 * (hi + lo), 0.5 * (hi - lo)
    return mid + rad * x, rad * w


def weighted_unit_integral(h, a: float, tol: float = 1e-10, max_nodes: int = 4096) -> float:
    """int_0^1 t^(a-1) (1-t)^(-a) h(t) dt for smooth vectorized h.

    Splits at t = 1/2; the substitution u = t^a regularizes the left
    half and v = (1-t)^(1-a) the right half, after which Gauss-Legendre
    is applied with node doubling until two successive values agree to
    tol / 10.
    """
    if not 0.0 < a < 1.0:
        raise ValueError("weighted_unit_integral requires 0 < a < 1")

    def attempt(n):
        # left half: t = u^(1/a), integrand (1/a) (1-t)^(-a) h(t)
        u, wu = _gl_on(0.0, 0.5 ** a, n)
        t = u ** (1.0 / a)
        left = np.sum(wu * (1.0 - t) ** (-a) * np.asarray(h(t))) / a
        # right half: 1 - t = v^(1/(1-a)), integrand t^(a-1) h(t) / (1-a)
        b = 1.0 - a
        v, wv = _gl_on(0.0, 0.5 ** b, n)
        t = 1.0 - v ** (1.0 / b)
        right = np.sum(wv * t ** (a - 1.0) * np.asarray(h(t))) / b
        return left + right

    n = 64
    prev = attempt(n)
    while n < max_nodes:
        n *= 2
        cur = attempt(n)
        if abs(cur - prev) < tol / 10.0:
            return cur
        prev = cur
    raise ArithmeticError(
        "weighted t-integral did not converge to %g with %d nodes" % (tol, max_nodes)
    )

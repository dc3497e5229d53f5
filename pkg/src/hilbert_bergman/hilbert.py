"""The Hilbert matrix operator and its weighted-composition building blocks.

Two representations are implemented: the coefficient form

    (H a)_n = sum_k a_k / (n + k + 1),

and the integral form H(f)(z) = int_0^1 w_t(z) f(phi_t(z)) dt with
w_t(z) = 1 / (1 - (1-t) z) and phi_t(z) = t / (1 - (1-t) z).

The norm of the weighted composition piece T_t(f) = w_t (f o phi_t) is
computed by the change-of-variables formula over the disk D_t with
center 1/(2-t) and radius (1-t)/(2-t), on whose boundary the auxiliary
density g_t vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import SpaceParams
from .quadrature import QuadratureScheme, _jacobi_01, _mean_profile
from .series import PowerSeries, evaluate
from .special import _gl_on, beta

__all__ = [
    "CompositionData",
    "apply_coeff",
    "apply_tail_bound",
    "apply_integral",
    "comp_norm",
    "k_func",
    "j_func",
    "monomial_norm",
    "truncation_norm_bound",
]

@dataclass(frozen=True)
class CompositionData:
    """Geometry of the weighted composition at parameter t in (0, 1)."""

    t: float

    def __post_init__(self):
        if not 0.0 < self.t < 1.0:
            raise ValueError("t must lie in (0, 1)")

    @property
    def center(self) -> float:
        return 1.0 / (2.0 - self.t)

    @property
    def radius(self) -> float:
        return (1.0 - self.t) / (2.0 - self.t)

    @property
    def inner_radius(self) -> float:
        """Distance from the origin to the near edge of D_t, t/(2-t)."""
        return self.t / (2.0 - self.t)

    def omega(self, z):
        return 1.0 / (1.0 - (1.0 - self.t) * z)

    def phi(self, z):
        return self.t / (1.0 - (1.0 - self.t) * z)

    def g(self, z):
        """(2 Re z - (2-t)|z|^2 - t) / ((1-t)|z|^2); positive inside D_t."""
        az2 = np.abs(z) ** 2
        return (2.0 * np.real(z) - (2.0 - self.t) * az2 - self.t) / ((1.0 - self.t) * az2)


def apply_coeff(a: PowerSeries, out_degree: int) -> PowerSeries:
    """Coefficient form of the operator, truncated at out_degree.

    The discarded tail obeys |b_n| <= (sum_k |a_k|) / (n+1); see
    apply_tail_bound for the reportable bound at the truncation index.
    """
    if out_degree < 0:
        raise ValueError("out_degree must be nonnegative")
    coeffs = a.coeffs
    n_out = out_degree + 1
    out = np.zeros(n_out, dtype=coeffs.dtype)
    rows = max(1, (1 << 26) // (8 * coeffs.size))
    k = np.arange(coeffs.size, dtype=np.float64)
    for lo in range(0, n_out, rows):
        n = np.arange(lo, min(lo + rows, n_out), dtype=np.float64)
        out[lo : lo + rows] = (coeffs / (n[:, None] + k + 1.0)).sum(axis=1)
    return PowerSeries(out)


def apply_tail_bound(a: PowerSeries, out_degree: int) -> float:
    """Uniform bound (sum |a_k|) / (out_degree + 2) on the first dropped coefficient."""
    return float(np.sum(np.abs(a.coeffs))) / (out_degree + 2.0)


def apply_integral(f: PowerSeries, z: complex, tol: float = 1e-10, max_nodes: int = 2048) -> complex:
    """Integral form H(f)(z) via quadrature of t -> w_t(z) f(phi_t(z)).

    The integrand is smooth on [0, 1] for |z| < 1 (the denominator is
    bounded away from zero), so Gauss-Legendre with node doubling
    suffices.
    """
    if abs(z) >= 1.0:
        raise ValueError("apply_integral requires |z| < 1")

    def attempt(n):
        t, w = _gl_on(0.0, 1.0, n)
        omega = 1.0 / (1.0 - (1.0 - t) * z)
        return np.sum(w * omega * evaluate(f, t * omega))

    n = 32
    prev = attempt(n)
    while n < max_nodes:
        n *= 2
        cur = attempt(n)
        if abs(cur - prev) < tol:
            break
        prev = cur
    if abs(np.imag(cur)) < 1e-14 * (1.0 + abs(np.real(cur))) and not np.iscomplexobj(z):
        return float(np.real(cur))
    return complex(cur)


def comp_norm(
    f: PowerSeries,
    params: SpaceParams,
    t: float,
    radial_count: int = 96,
    angular_count: int = 256,
) -> float:
    """||T_t(f)|| via the change-of-variables integral over D_t.

    The D_t integral is taken in polar coordinates about the disk
    center.  The density g_t vanishes linearly at the boundary, so the
    radial direction uses Gauss-Jacobi nodes for the weight (1-s)^alpha.
    On the polar grid z = c + rho s e^{i theta} the numerator of g_t
    collapses to (1-t)^2 (1-s^2) / (2-t), so the smooth quotient is
    evaluated in the cancellation-free form
    g_t / (1-s) = (1-t)(1+s) / ((2-t)|z|^2).
    """
    if not params.is_bounded():
        raise ValueError("comp_norm requires 1 < alpha+2 < p")
    comp = CompositionData(t)
    alpha, p = params.alpha, params.p
    s, ws = _jacobi_01(radial_count, alpha, 0.0)
    theta = 2.0 * np.pi * np.arange(angular_count) / angular_count
    z = comp.center + comp.radius * s[:, None] * np.exp(1j * theta)
    az2 = np.abs(z) ** 2
    quotient = (1.0 - t) * (1.0 + s[:, None]) / ((2.0 - t) * az2)
    h = quotient**alpha * np.abs(evaluate(f, z)) ** p
    h *= az2 ** ((p - 4.0) / 2.0) * s[:, None]
    inner = (alpha + 1.0) * 2.0 * comp.radius**2 * np.dot(ws, h.mean(axis=1))
    a = params.a
    prefactor = t ** (a - 1.0) * (1.0 - t) ** (-a)
    return prefactor * inner ** (1.0 / p)


def k_func(
    f: PowerSeries,
    params: SpaceParams,
    t: float,
    radial_count: int = 128,
    angular_count: int | None = None,
) -> float:
    """The radial majorant K(t) from the composition-norm estimate.

    K(t) = 2(alpha+1) int_{t/(2-t)}^1 (1 - r^2 - (1-r)^2/(1-t))^alpha
           r^(p-3-2 alpha) M_p^p(r, f) dr.

    The bracket factors as (1-r)(r - r0)(2-t)/(1-t) with r0 = t/(2-t),
    vanishing to order alpha at both limits, so Gauss-Jacobi (alpha,
    alpha) nodes on [r0, 1] absorb both endpoint factors.
    """
    if not params.is_bounded():
        raise ValueError("k_func requires 1 < alpha+2 < p")
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    if t == 1.0:
        return 0.0
    alpha, p = params.alpha, params.p
    if angular_count is None:
        angular_count = 4 * f.degree + 16
    r0 = t / (2.0 - t)
    x, w = _jacobi_01(radial_count, alpha, alpha)
    r = r0 + (1.0 - r0) * x
    half = 1.0 - r0
    prof = _mean_profile(f.coeffs, r, p, angular_count)
    smooth = r ** (p - 3.0 - 2.0 * alpha) * prof
    scale = ((2.0 - t) / (1.0 - t)) ** alpha * half ** (2.0 * alpha + 1.0)
    return 2.0 * (alpha + 1.0) * scale * float(np.dot(w, smooth))


def j_func(
    f: PowerSeries,
    params: SpaceParams,
    angular_count: int | None = None,
    tol: float = 1e-9,
    max_nodes: int = 8192,
) -> float:
    """J = 2(alpha+1) int_0^1 M_p^p(r, f) (1-r^2)^alpha r dr.

    Equals bergman_norm(f)^p by definition, but is computed on an
    independent radial path (plain Gauss-Legendre with the weight left
    in the integrand, node doubling) so the two can cross-check.
    """
    if params.alpha <= -1.0:
        raise ValueError("alpha must exceed -1")
    alpha, p = params.alpha, params.p
    if angular_count is None:
        angular_count = 4 * f.degree + 16

    def attempt(n):
        r, w = _gl_on(0.0, 1.0, n)
        prof = _mean_profile(f.coeffs, r, p, angular_count)
        integrand = prof * (1.0 - r**2) ** alpha * r
        return 2.0 * (alpha + 1.0) * float(np.dot(w, integrand))

    n = 128
    prev = attempt(n)
    while n < max_nodes:
        n *= 2
        cur = attempt(n)
        if abs(cur - prev) < tol * (1.0 + abs(cur)):
            return cur
        prev = cur
    raise ArithmeticError("J integral did not converge under node doubling")


def monomial_norm(n: int, params: SpaceParams) -> float:
    """Closed-form ||z^n|| = ((alpha+1) B(n p/2 + 1, alpha + 1))^(1/p)."""
    alpha, p = params.alpha, params.p
    return ((alpha + 1.0) * beta(n * p / 2.0 + 1.0, alpha + 1.0)) ** (1.0 / p)


def truncation_norm_bound(a: PowerSeries, out_degree: int, params: SpaceParams) -> float:
    """Norm bound on the tail of H(a) dropped beyond out_degree.

    Sums (sum_k |a_k|) / (n+1) * ||z^n|| over n > out_degree; the
    summand decays like n^(-1-(alpha+2)/p), so a finite window plus an
    integral-comparison remainder gives a rigorous-in-spirit bound.
    """
    s = float(np.sum(np.abs(a.coeffs)))
    lo = out_degree + 1
    window = np.arange(lo, lo + 20000)
    terms = np.array([monomial_norm(int(n), params) / (n + 1.0) for n in window[::50]])
    # sample every 50th term and scale; the sequence is monotone decreasing
    partial = 50.0 * float(np.sum(terms))
    decay = params.a
    n_end = float(window[-1])
    last = monomial_norm(int(window[-1]), params) / (n_end + 1.0)
    remainder = last * n_end / decay
    return s * (partial + remainder)

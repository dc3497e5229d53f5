"""Grid verification of the auxiliary-function machinery and norm lower bounds.

The sign condition being checked: inside the alpha-band (quartic <= 0)
the auxiliary function

    F(r) = r^(p-4-3 alpha/2) * beta_partial(2r/(1+r), a) - beta_partial(1, a)

is nonpositive on (0, 1], its derivative driver g is nondecreasing, and
the quadratic k is nonnegative on [0, 1].  Lower bounds for the
operator norm come from the binomial test family and from seeded
coordinate ascent over nonnegative coefficient vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hilbert import apply_coeff, truncation_norm_bound
from .params import SpaceParams
from .quadrature import QuadratureScheme, bergman_norm
from .region import quartic_condition
from .series import PowerSeries, binomial_series
from .special import beta_partial, target_norm

__all__ = [
    "LemmaReport",
    "NormEstimate",
    "f_function",
    "k_poly",
    "g_aux",
    "verify_lemma",
    "sample_region_params",
    "lower_bound_ratio",
    "lower_bound_report",
    "ascend_norm",
]


@dataclass(frozen=True)
class LemmaReport:
    params: SpaceParams
    grid_size: int
    max_F: float
    min_k: float
    min_g_increment: float
    in_region: bool

    def passes(self, f_tol_scale: float = 1e-10, k_tol: float = 1e-12) -> bool:
        """Pass/fail is only meaningful in-region; exploratory otherwise."""
        if not self.in_region:
            return True
        scale = f_tol_scale * (1.0 + abs(self.max_F))
        return self.max_F <= scale and self.min_k >= -k_tol and self.min_g_increment >= -k_tol


@dataclass(frozen=True)
class NormEstimate:
    lower_bound: float
    target: float
    achiever: PowerSeries
    trace: tuple
    quad_error_budget: float
    converged: bool = True


def _check_lemma_params(params: SpaceParams):
    if not (params.p > params.alpha + 2.0 > 0.0):
        raise ValueError("requires p > alpha + 2 > 0")


def f_function(params: SpaceParams, r):
    """F(r) on (0, 1]; vanishes identically at r = 1."""
    _check_lemma_params(params)
    r_arr = np.asarray(r, dtype=np.float64)
    if np.any(r_arr <= 0.0) or np.any(r_arr > 1.0):
        raise ValueError("f_function requires 0 < r <= 1")
    a = params.a
    expo = params.p - 4.0 - 1.5 * params.alpha
    out = r_arr**expo * beta_partial(2.0 * r_arr / (1.0 + r_arr), a) - beta_partial(1.0, a)
    return float(out) if out.ndim == 0 else out


def k_poly(params: SpaceParams, r):
    """The quadratic k(r); k(1) = 2(alpha+2)/p."""
    _check_lemma_params(params)
    a, alpha, p = params.a, params.alpha, params.p
    r = np.asarray(r, dtype=np.float64)
    out = (1.5 * alpha + 5.0 - p) * r * r + (a - 1.0) * r + (a + p - 1.5 * alpha - 4.0)
    return float(out) if out.ndim == 0 else out


def g_aux(params: SpaceParams, r):
    """The derivative driver g(r) on (0, 1); diverges at r = 1."""
    _check_lemma_params(params)
    r_arr = np.asarray(r, dtype=np.float64)
    if np.any(r_arr <= 0.0) or np.any(r_arr >= 1.0):
        raise ValueError("g_aux requires 0 < r < 1")
    a = params.a
    out = (params.p - 4.0 - 1.5 * params.alpha) * beta_partial(
        2.0 * r_arr / (1.0 + r_arr), a
    ) + (2.0 * r_arr) ** a / ((1.0 + r_arr) * (1.0 - r_arr) ** a)
    return float(out) if out.ndim == 0 else out


def in_region(params: SpaceParams) -> bool:
    """Condition for the alpha-band: quartic <= 0 on its domain of validity."""
    p = params.p
    if 6.0 * p * p - 11.0 * p + 4.0 < 0.0 or p == 1.0 / 3.0:
        return False
    return quartic_condition(p, params.alpha) <= 0.0


def verify_lemma(params: SpaceParams, grid_size: int = 10000) -> LemmaReport:
    """Evaluate F, k, g on uniform grids and summarize extremes.

    F and k are sampled on [1e-6, 1]; g increments on (0, 1 - 1e-6].
    The small-r cutoff avoids the r^(p-4-3 alpha/2) prefactor blowup
    outside the claim's useful range.
    """
    _check_lemma_params(params)
    r = np.linspace(1e-6, 1.0, grid_size)
    f_vals = f_function(params, r)
    k_vals = k_poly(params, np.linspace(0.0, 1.0, grid_size))
    rg = np.linspace(1e-6, 1.0 - 1e-6, grid_size)
    g_vals = g_aux(params, rg)
    return LemmaReport(
        params=params,
        grid_size=grid_size,
        max_F=float(np.max(f_vals)),
        min_k=float(np.min(k_vals)),
        min_g_increment=float(np.min(np.diff(g_vals))),
        in_region=in_region(params),
    )


def sample_region_params(count: int, seed: int, p_range=(3.6, 45.0)) -> list[SpaceParams]:
    """Seeded in-region samples with alpha >= 0, rejection-sampled in p."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        p = float(rng.uniform(*p_range))
        if 6.0 * p * p - 11.0 * p + 4.0 < 0.0:
            continue
        rad = 2.0 * p * np.sqrt(6.0 * p * p - 11.0 * p + 4.0)
        base = 6.0 * p**3 - 29.0 * p * p + 17.0 * p - 2.0
        lo = max((base - rad) / (3.0 * p - 1.0) ** 2, 0.0)
        up = (base + rad) / (3.0 * p - 1.0) ** 2
        if up <= lo:
            continue
        alpha = float(rng.uniform(lo, up))
        out.append(SpaceParams(p=p, alpha=alpha))
    return out


def _norm_with_scheme(f: PowerSeries, params: SpaceParams, radial: int | None = None):
    scheme = QuadratureScheme.for_space(params, degree_hint=f.degree, radial_count=radial)
    return bergman_norm(f, params, scheme)


def lower_bound_ratio(
    params: SpaceParams,
    gamma: float,
    degree: int = 512,
    out_degree: int | None = None,
    radial_count: int | None = None,
) -> float:
    """||H f|| / ||f|| for the truncated binomial test function.

    The image series is truncated as well, which only lowers the
    numerator; the value is therefore a genuine lower-bound estimate up
    to quadrature error.
    """
    if gamma < 0.0 or gamma >= params.a:
        raise ValueError("requires 0 <= gamma < (alpha+2)/p for a finite norm")
    if out_degree is None:
        out_degree = 3 * max(degree, 1)
    f = binomial_series(gamma, degree)
    hf = apply_coeff(f, out_degree)
    return _norm_with_scheme(hf, params, radial_count) / _norm_with_scheme(
        f, params, radial_count
    )


def lower_bound_report(
    params: SpaceParams,
    gamma: float,
    degree: int = 2048,
    out_degree: int | None = None,
    radial_count: int = 1024,
) -> dict:
    """Ratio plus an explicit quadrature error budget.

    The budget is the radial-doubling difference of the ratio plus any
    observed violation of truncation monotonicity.  Dropping the image
    tail lowers the numerator for this family (all coefficients are
    positive), so truncation is one-sided; that is verified at runtime
    by recomputing the ratio at half the output degree and charging any
    decrease from doubling the retained terms to the budget.
    """
    if out_degree is None:
        out_degree = 3 * degree
    f = binomial_series(gamma, degree)
    hf = apply_coeff(f, out_degree)
    coarse = _norm_with_scheme(hf, params, radial_count) / _norm_with_scheme(
        f, params, radial_count
    )
    fine = _norm_with_scheme(hf, params, 2 * radial_count) / _norm_with_scheme(
        f, params, 2 * radial_count
    )
    hf_half = apply_coeff(f, out_degree // 2)
    ratio_half = _norm_with_scheme(hf_half, params, 2 * radial_count) / _norm_with_scheme(
        f, params, 2 * radial_count
    )
    budget = abs(fine - coarse) + max(0.0, ratio_half - fine) + 1e-9
    tgt = target_norm(params)
    return {
        "gamma": gamma,
        "degree": degree,
        "out_degree": out_degree,
        "ratio": fine,
        "target": tgt,
        "deficit": tgt - fine,
        "quad_error_budget": budget,
    }


def _ratio_factory(params: SpaceParams, n_coeffs: int, out_degree: int, radial_count: int):
    """Closure evaluating a -> ||H f_a|| / ||f_a|| with shared machinery."""
    basis = np.zeros(n_coeffs)
    basis[0] = 1.0
    hmat_rows = out_degree + 1
    n = np.arange(hmat_rows, dtype=np.float64)[:, None]
    k = np.arange(n_coeffs, dtype=np.float64)
    hmat = 1.0 / (n + k + 1.0)
    scheme_in = QuadratureScheme.for_space(
        params, degree_hint=n_coeffs - 1, radial_count=max(64, n_coeffs)
    )
    scheme_out = QuadratureScheme.for_space(
        params, degree_hint=out_degree, radial_count=radial_count
    )

    def ratio(a: np.ndarray) -> float:
        fa = PowerSeries(a)
        hfa = PowerSeries(hmat @ a)
        num = bergman_norm(hfa, params, scheme_out)
        den = bergman_norm(fa, params, scheme_in)
        return num / den

    return ratio


def ascend_norm(
    params: SpaceParams,
    n_coeffs: int = 64,
    iterations: int = 60,
    seed: int = 0,
    out_degree: int | None = None,
    radial_count: int = 512,
    n_starts: int = 8,
    fd_step: float = 1e-4,
) -> NormEstimate:
    """Maximize the Rayleigh-type ratio over nonnegative coefficient vectors.

    Normalized coordinate ascent with finite-difference gradients,
    clamp-at-zero projection, and step halving on non-improvement.
    Starts are seeded random nonnegative vectors plus a binomial-series
    warm start; the best trace (monotone by construction) is returned.
    """
    if not params.is_bounded():
        raise ValueError("ascend_norm requires 1 < alpha+2 < p")
    if n_coeffs < 1:
        raise ValueError("n_coeffs must be at least 1")
    if out_degree is None:
        out_degree = max(16 * n_coeffs, 512)
    ratio = _ratio_factory(params, n_coeffs, out_degree, radial_count)
    rng = np.random.default_rng(seed)

    starts = [binomial_series(0.98 * params.a, n_coeffs - 1).coeffs.copy()]
    for _ in range(n_starts):
        starts.append(rng.random(n_coeffs))

    best_vec = None
    best_val = -np.inf
    trace = []
    total_iters = 0
    converged = True
    for start in starts:
        x = start / np.linalg.norm(start)
        val = ratio(x)
        step = 0.1
        moved = True
        for _ in range(iterations):
            total_iters += 1
            grad = np.empty(n_coeffs)
            for i in range(n_coeffs):
                xp = x.copy()
                xp[i] += fd_step
                grad[i] = (ratio(xp / np.linalg.norm(xp)) - val) / fd_step
            moved = False
            while step > 1e-6:
                cand = np.clip(x + step * grad, 0.0, None)
                nrm = np.linalg.norm(cand)
                if nrm == 0.0:
                    break
                cand /= nrm
                cval = ratio(cand)
                if cval > val:
                    x, val, moved = cand, cval, True
                    break
                step *= 0.5
            trace.append((total_iters, max(best_val, val)))
            if not moved:
                break
        if moved:
            # the iteration budget ran out while still improving
            converged = False
        if val > best_val:
            best_val, best_vec = val, x

    achiever = PowerSeries(best_vec)
    # final evaluation at higher resolution, with an explicit budget
    final_out = max(4 * out_degree, 4096)
    hf = apply_coeff(achiever, final_out)
    coarse = _norm_with_scheme(hf, params, radial_count)
    fine = _norm_with_scheme(hf, params, 2 * radial_count)
    den = _norm_with_scheme(achiever, params)
    tail = truncation_norm_bound(achiever, final_out, params)
    budget = abs(fine - coarse) / den + tail / den + 1e-9
    return NormEstimate(
        lower_bound=fine / den,
        target=target_norm(params),
        achiever=achiever,
        trace=tuple(trace),
        quad_error_budget=budget,
        converged=converged,
    )

"""Numerical workbench for the Hilbert matrix operator on weighted Bergman spaces."""

from .params import SpaceParams
from .series import PowerSeries, TestFunctionSpec, binomial_series, evaluate
from .special import beta, beta_partial, target_norm, weighted_unit_integral
from .quadrature import QuadratureScheme, bergman_norm, disk_integral, integral_mean
from .hilbert import (
    CompositionData,
    apply_coeff,
    apply_integral,
    apply_tail_bound,
    comp_norm,
    j_func,
    k_func,
    monomial_norm,
)
from .region import (
    RegionVerdict,
    Status,
    alpha_bounds,
    classify,
    cubic_threshold,
    dai_condition,
    discriminant_k,
    phi,
    phi_root,
    quartic_condition,
)
from .verify import (
    LemmaReport,
    NormEstimate,
    ascend_norm,
    f_function,
    g_aux,
    k_poly,
    lower_bound_ratio,
    verify_lemma,
)

__version__ = "0.1.0"

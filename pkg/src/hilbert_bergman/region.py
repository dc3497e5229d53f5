"""Parameter-region curves and classification of (p, alpha) pairs.

Every published settlement of the conjectured norm value that admits a
closed-form condition is encoded here, as are the algebraic objects
behind the alpha-band condition: the quartic in alpha, the discriminant
of the auxiliary quadratic k, and the curve family p1, p3, p4 used for
comparisons between results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .params import SpaceParams
from .quadrature import _jacobi_01
from .special import beta, weighted_unit_integral

__all__ = [
    "Status",
    "RegionVerdict",
    "LinearCaseError",
    "alpha_low",
    "alpha_up",
    "alpha_bounds",
    "quartic_condition",
    "discriminant_k",
    "phi",
    "phi_root",
    "alpha0_bracket",
    "cubic",
    "cubic_threshold",
    "p1_curve",
    "p3_curve",
    "p4_curve",
    "p_double_curve",
    "prior_iii_curve",
    "rewritten_alpha_curves",
    "dai_condition",
    "classify",
    "e_point_candidates",
]


class Status(str, Enum):
    UNBOUNDED = "UNBOUNDED"
    SETTLED = "SETTLED"
    OPEN = "OPEN"


RESULT_LABELS = (
    "THM_4_1",
    "PROP_2_1",
    "PROP_3_1",
    "PRIOR_III",
    "PRIOR_IV",
    "PRIOR_V_VI",
    "SMALL_ALPHA",
    "ALPHA_ONE",
    "LARGE_P",
)


@dataclass(frozen=True)
class RegionVerdict:
    status: Status
    settled_by: tuple = ()
    witnesses: dict = field(default_factory=dict)
    notes: tuple = ()


class LinearCaseError(ValueError):
    """The auxiliary k is linear (3 alpha + 10 - 2p = 0); no discriminant."""


def _band_defined(p: float) -> bool:
    return 6.0 * p * p - 11.0 * p + 4.0 >= 0.0 and p != 1.0 / 3.0


def _band(p: float, sign: float) -> float:
    rad = 6.0 * p * p - 11.0 * p + 4.0
    return (6.0 * p**3 - 29.0 * p * p + 17.0 * p - 2.0 + sign * 2.0 * p * math.sqrt(rad)) / (
        3.0 * p - 1.0
    ) ** 2


def alpha_low(p: float) -> float:
    if not _band_defined(p):
        raise ValueError("curve undefined: requires 6p^2-11p+4 >= 0 and p != 1/3")
    return _band(p, -1.0)


def alpha_up(p: float) -> float:
    if not _band_defined(p):
        raise ValueError("curve undefined: requires 6p^2-11p+4 >= 0 and p != 1/3")
    return _band(p, +1.0)


def alpha_bounds(p: float):
    """(alpha_low, alpha_up, effective_low) with effective_low = max(alpha_low, 0)."""
    lo, up = alpha_low(p), alpha_up(p)
    return lo, up, max(lo, 0.0)


def quartic_condition(p: float, alpha: float) -> float:
    """The quartic whose nonpositivity defines the alpha-band at p."""
    return (
        (3.0 * p - 1.0) ** 2 * alpha * alpha
        + (-12.0 * p**3 + 58.0 * p * p - 34.0 * p + 4.0) * alpha
        + (4.0 * p**4 - 36.0 * p**3 + 89.0 * p * p - 44.0 * p + 4.0)
    )


def discriminant_k(p: float, alpha: float) -> float:
    """Discriminant of the quadratic k; sign-equivalent to the quartic."""
    if 3.0 * alpha + 10.0 - 2.0 * p == 0.0:
        raise LinearCaseError(
            "linear case: k is decreasing with k(1) = 2(alpha+2)/p > 0"
        )
    a = (alpha + 2.0) / p
    return (a - 1.0) ** 2 - 4.0 * (1.5 * alpha + 5.0 - p) * (a + p - 1.5 * alpha - 4.0)


def phi(alpha: float, x: float) -> float:
    """2x^2 - (4(alpha+2)+1)x + 2 sqrt(alpha+2) sqrt(x) + alpha + 2."""
    if x < 0.0:
        raise ValueError("phi requires x >= 0")
    return (
        2.0 * x * x
        - (4.0 * (alpha + 2.0) + 1.0) * x
        + 2.0 * math.sqrt(alpha + 2.0) * math.sqrt(x)
        + alpha
        + 2.0
    )


def phi_root(alpha: float, tol: float = 1e-10, max_iter: int = 200) -> float:
    """The unique zero of phi(alpha, .) on (alpha+2, 2(alpha+2)), by bisection."""
    if alpha <= 0.0:
        raise ValueError("phi_root requires alpha > 0")
    lo, hi = alpha + 2.0, 2.0 * (alpha + 2.0)
    flo, fhi = phi(alpha, lo), phi(alpha, hi)
    if flo * fhi > 0.0:
        raise ArithmeticError(
            "no sign change of phi on (alpha+2, 2(alpha+2)): "
            "phi(%g)=%g, phi(%g)=%g" % (lo, flo, hi, fhi)
        )
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        fmid = phi(alpha, mid)
        if abs(fmid) <= tol and hi - lo <= 1e-12 * max(1.0, mid):
            return mid
        if flo * fmid <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    mid = 0.5 * (lo + hi)
    if abs(phi(alpha, mid)) > tol:
        raise ArithmeticError("phi_root bisection did not reach tolerance")
    return mid


def alpha0_bracket(alpha: float):
    """Bracket for the phi zero: (s + sqrt(s^2 - s), s + sqrt(s^2 - (sqrt2 - 1/2) s)), s = alpha+2."""
    s = alpha + 2.0
    return (
        s + math.sqrt(s * s - s),
        s + math.sqrt(s * s - (math.sqrt(2.0) - 0.5) * s),
    )


def cubic(alpha: float) -> float:
    return 3.0 * alpha**3 + 7.0 * alpha * alpha + alpha - 2.0


def cubic_threshold() -> float:
    """The positive root (-1 + sqrt(13)) / 6 of the comparison cubic."""
    return (-1.0 + math.sqrt(13.0)) / 6.0


def p1_curve(alpha: float) -> float:
    return 2.0 + 0.75 * alpha + 0.25 * math.sqrt(9.0 * alpha * alpha + 40.0 * alpha + 48.0)


def p3_curve(alpha: float) -> float:
    return (9.0 + 3.0 * alpha + math.sqrt(9.0 * alpha * alpha + 30.0 * alpha + 33.0)) / 4.0


def p4_curve(alpha: float) -> float:
    return alpha + 2.0


def p_double_curve(alpha: float) -> float:
    return 2.0 * (alpha + 2.0)


def prior_iii_curve(alpha: float) -> float:
    return alpha + 2.0 + math.sqrt(alpha * alpha + 3.5 * alpha + 3.0)


def rewritten_alpha_curves(p: float) -> dict:
    """The three p(alpha) thresholds rewritten as alpha(p) upper bounds.

    Returns NaN where a denominator vanishes.
    """
    out = {}
    out["alpha_from_p3"] = (
        (2.0 * p * p - 9.0 * p + 6.0) / (3.0 * p - 3.0) if p != 1.0 else math.nan
    )
    den = 2.0 * p + 0.5 - math.sqrt(2.0)
    out["alpha_from_phi_bracket"] = (
        (p * p - 4.0 * p + 2.0 * math.sqrt(2.0) - 1.0) / den if den != 0.0 else math.nan
    )
    out["alpha_from_p1"] = (
        (2.0 * p * p - 8.0 * p + 2.0) / (3.0 * p - 1.0) if p != 1.0 / 3.0 else math.nan
    )
    return out


def _inner_radial_integral(t: np.ndarray, p: float, alpha: float, n: int = 192) -> np.ndarray:
    """int_{t^2}^1 (1-r)^alpha r^(p-3-alpha) dr for a vector of t values.

    Gauss-Jacobi (alpha, 0) on [t^2, 1] absorbs the (1-r)^alpha endpoint
    factor; the remaining power is smooth there since p > alpha + 2.
    """
    x, w = _jacobi_01(n, alpha, 0.0)
    lo = (np.asarray(t) ** 2)[..., None]
    r = lo + (1.0 - lo) * x
    vals = r ** (p - 3.0 - alpha)
    return ((1.0 - lo[..., 0]) ** (alpha + 1.0)) * (vals @ w)


def dai_condition(p: float, alpha: float, tol: float = 1e-8):
    """The double-integral vs Beta-product comparison.

    LHS = int_0^1 t^(a-1) (1-t)^(-a) [int_{t^2}^1 (1-r)^alpha r^(p-3-alpha) dr] dt,
    RHS = B(1+alpha, 2+alpha/2) B(a, 1-a), a = (alpha+2)/p.

    Returns (LHS <= RHS, LHS, RHS).
    """
    if not 1.0 < alpha + 2.0 < p:
        raise ValueError("dai_condition requires p > alpha+2 > 1")
    a = (alpha + 2.0) / p
    lhs = weighted_unit_integral(lambda t: _inner_radial_integral(t, p, alpha), a, tol=tol)
    rhs = beta(1.0 + alpha, 2.0 + alpha / 2.0) * beta(a, 1.0 - a)
    return bool(lhs <= rhs), lhs, rhs


def _try(fn, *args):
    try:
        return fn(*args)
    except (ValueError, ArithmeticError):
        return math.nan


def classify(p: float, alpha: float) -> RegionVerdict:
    """Which published closed-form result (if any) settles (p, alpha).

    The double-integral criterion is excluded here (it needs quadrature;
    see dai_condition).  All applicable results are listed, none
    suppressed; curve-domain failures mark that entry not applicable
    instead of aborting.
    """
    witnesses = {
        "alpha_low": _try(alpha_low, p),
        "alpha_up": _try(alpha_up, p),
        "p1": _try(p1_curve, alpha),
        "p3": _try(p3_curve, alpha),
        "p4": p4_curve(alpha),
        "p_double": p_double_curve(alpha),
        "prior_iii_p": _try(prior_iii_curve, alpha) if alpha > 0.0 else math.nan,
        "alpha0": _try(phi_root, alpha) if alpha > 0.0 else math.nan,
        "quartic": quartic_condition(p, alpha),
    }
    notes = []
    if not 1.0 < alpha + 2.0 < p:
        return RegionVerdict(Status.UNBOUNDED, (), witnesses, ("requires 1 < alpha+2 < p",))
    if alpha < 0.0:
        notes.append("negative alpha: upper-bound estimates for -1 < alpha < 0 not cataloged")

    settled = []
    au = witnesses["alpha_up"]
    al = witnesses["alpha_low"]
    if not math.isnan(au) and 0.0 <= alpha <= au:
        settled.append("THM_4_1")
    if not math.isnan(au) and max(al, 0.0) <= alpha <= au:
        settled.append("PROP_2_1")
    if alpha >= 0.0 and p >= witnesses["p3"]:
        settled.append("PROP_3_1")
    if alpha > 0.0 and witnesses["prior_iii_p"] <= p < witnesses["p_double"]:
        settled.append("PRIOR_III")
    if alpha > 0.0 and not math.isnan(witnesses["alpha0"]) and p >= witnesses["alpha0"]:
        settled.append("PRIOR_IV")
    if alpha > 0.0 and witnesses["p1"] <= p < witnesses["p_double"]:
        settled.append("PRIOR_V_VI")
    if 0.0 < alpha <= 1.0 / 47.0:
        settled.append("SMALL_ALPHA")
    if abs(alpha - 1.0) <= 1e-12 and p > 3.0:
        settled.append("ALPHA_ONE")
    if alpha >= 0.0 and p >= witnesses["p_double"]:
        settled.append("LARGE_P")

    status = Status.SETTLED if settled else Status.OPEN
    return RegionVerdict(status, tuple(settled), witnesses, tuple(notes))


def e_point_candidates(alpha_max: float = 20.0, n: int = 200001) -> dict:
    """Candidate locations for the figure-labeled corner point E.

    Reports (a) the closest approach of the strictly ordered curves
    p1 > p3 on (0, alpha_max] (they do not actually intersect) and (b)
    the point where p3 crosses the lower bracket curve
    s + sqrt(s^2 - s), which happens at the cubic-threshold abscissa.
    """
    grid = np.linspace(1e-6, alpha_max, n)
    gap = np.array([p1_curve(x) - p3_curve(x) for x in grid])
    i = int(np.argmin(gap))
    a_star = cubic_threshold()
    return {
        "p1_p3_min_gap": (float(grid[i]), float(gap[i])),
        "cubic_threshold_point": (a_star, p3_curve(a_star)),
    }

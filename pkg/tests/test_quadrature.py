import math

import numpy as np
import pytest

from hilbert_bergman import (
    PowerSeries,
    QuadratureScheme,
    SpaceParams,
    bergman_norm,
    disk_integral,
    integral_mean,
    monomial_norm,
)
from hilbert_bergman.special import beta


def _monomial(n):
    c = np.zeros(n + 1)
    c[n] = 1.0
    return PowerSeries(c)


def test_scheme_normalized():
    for alpha in (-0.5, 0.0, 1.0, 9.0):
        params = SpaceParams(4.0, alpha)
        scheme = QuadratureScheme.for_space(params, degree_hint=4)
        assert float(np.sum(scheme.radial_weights)) == pytest.approx(1.0, rel=1e-13)


def test_monomial_norms_match_closed_form():
    cases = [(0, 4.0, 0.0), (1, 2.0, 0.0), (3, 5.0, 1.0), (2, 3.7, -0.3), (5, 17.0, 9.0)]
    for n, p, alpha in cases:
        params = SpaceParams(p, alpha)
        scheme = QuadratureScheme.for_space(params, degree_hint=n)
        assert bergman_norm(_monomial(n), params, scheme) == pytest.approx(
            monomial_norm(n, params), rel=1e-11
        )


def test_monomial_norm_p2_alpha0():
    # ||z^n||^2 = 1/(n+1) in the unweighted p = 2 space
    params = SpaceParams(2.0, 0.0)
    for n in range(5):
        assert monomial_norm(n, params) == pytest.approx(1.0 / math.sqrt(n + 1.0), rel=1e-13)


def test_integral_mean_of_monomial():
    params = SpaceParams(4.0, 0.0)
    scheme = QuadratureScheme.for_space(params, degree_hint=3)
    assert integral_mean(_monomial(3), 0.5, 4.0, scheme) == pytest.approx(0.125, rel=1e-12)


def test_norm_p4_convolution_oracle():
    # ||f||_4^4 = sum_m |(f^2)_m|^2 * (alpha+1) B(m+1, alpha+1) for polynomial f
    rng = np.random.default_rng(5)
    c = rng.standard_normal(7)
    f = PowerSeries(c)
    for alpha in (0.0, 1.0):
        params = SpaceParams(4.0, alpha)
        sq = np.convolve(c, c)
        m = np.arange(sq.size)
        oracle = sum(
            sq[i] ** 2 * (alpha + 1.0) * beta(m[i] + 1.0, alpha + 1.0) for i in range(sq.size)
        )
        scheme = QuadratureScheme.for_space(params, degree_hint=f.degree)
        assert bergman_norm(f, params, scheme) ** 4 == pytest.approx(oracle, rel=1e-11)


def test_refine_converges():
    params = SpaceParams(3.3, 0.4)
    f = PowerSeries(np.array([1.0, -0.7, 0.3, 0.9]))
    scheme = QuadratureScheme.for_space(params, degree_hint=f.degree)
    coarse = bergman_norm(f, params, scheme)
    fine = bergman_norm(f, params, scheme.refine(params))
    # non-even p: the angular mean is not a trig polynomial, so doubling
    # shifts the value slightly; expect agreement at the 1e-5 level
    assert abs(fine - coarse) < 1e-5 * (1.0 + abs(fine))


def test_disk_integral_oracles():
    params = SpaceParams(4.0, 2.0)
    assert disk_integral(lambda z: np.ones_like(z, dtype=float), params) == pytest.approx(
        1.0, rel=1e-13
    )
    # int |z|^2 dm_alpha = 1 / (alpha + 2)
    assert disk_integral(lambda z: np.abs(z) ** 2, params) == pytest.approx(
        1.0 / (params.alpha + 2.0), rel=1e-12
    )

import math

import numpy as np
import pytest

from hilbert_bergman import PowerSeries, binomial_series, evaluate
from hilbert_bergman import TestFunctionSpec as FunctionSpec


def test_binomial_coefficients_match_gamma_ratios():
    gamma = 0.37
    f = binomial_series(gamma, 40)
    for n in (0, 1, 5, 17, 40):
        oracle = math.exp(
            math.lgamma(n + gamma) - math.lgamma(gamma) - math.lgamma(n + 1.0)
        )
        assert f.coeffs[n] == pytest.approx(oracle, rel=1e-13)


def test_binomial_series_special_cases():
    # gamma = 1 is the geometric series, gamma = 0 the constant 1
    assert np.allclose(binomial_series(1.0, 6).coeffs, np.ones(7))
    ones = binomial_series(0.0, 6).coeffs
    assert ones[0] == 1.0 and np.all(ones[1:] == 0.0)


def test_binomial_series_evaluates_to_power():
    gamma = 1.5
    f = binomial_series(gamma, 400)
    for x in (0.0, 0.2, 0.5, 0.7):
        assert f(x) == pytest.approx((1.0 - x) ** (-gamma), rel=1e-10)


def test_evaluate_matches_polyval():
    rng = np.random.default_rng(11)
    c = rng.standard_normal(9)
    f = PowerSeries(c)
    z = 0.4 + 0.3j
    assert evaluate(f, z) == pytest.approx(np.polyval(c[::-1], z), rel=1e-14)


def test_evaluate_rejects_boundary():
    f = PowerSeries([1.0, 2.0])
    with pytest.raises(ValueError):
        evaluate(f, 1.0)
    with pytest.raises(ValueError):
        evaluate(f, np.array([0.5, -1.0j]))


def test_power_series_arithmetic():
    f = PowerSeries([1.0, 2.0, 3.0])
    g = PowerSeries([1.0, 1.0])
    assert np.allclose((f + g).coeffs, [2.0, 3.0, 3.0])
    assert np.allclose(f.scale(2.0).coeffs, [2.0, 4.0, 6.0])
    assert f.truncate(1).degree == 1
    assert f.truncate(5).degree == 2
    assert f.degree == 2


def test_power_series_immutable_and_validated():
    f = PowerSeries([1.0])
    with pytest.raises(ValueError):
        f.coeffs[0] = 2.0
    with pytest.raises(ValueError):
        PowerSeries(np.ones((2, 2)))


def test_test_function_spec_membership():
    spec = FunctionSpec(gamma=0.45, degree=8)
    assert spec.in_space(4.0, 0.0)  # 4 * 0.45 = 1.8 < 2
    assert not spec.in_space(5.0, 0.0)  # 2.25 >= 2
    assert spec.build().coeffs[0] == 1.0

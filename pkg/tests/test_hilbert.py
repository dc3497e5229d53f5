import math

import numpy as np
import pytest

from hilbert_bergman import (
    CompositionData,
    PowerSeries,
    QuadratureScheme,
    SpaceParams,
    apply_coeff,
    apply_integral,
    apply_tail_bound,
    bergman_norm,
    comp_norm,
    disk_integral,
    evaluate,
    j_func,
    k_func,
)


def test_apply_coeff_on_monomials():
    # H z^k has coefficients 1/(n+k+1)
    for k in (0, 2):
        c = np.zeros(k + 1)
        c[k] = 1.0
        out = apply_coeff(PowerSeries(c), 4).coeffs
        assert np.allclose(out, 1.0 / (np.arange(5) + k + 1.0))


def test_apply_tail_bound():
    f = PowerSeries([1.0, -2.0, 3.0])
    assert apply_tail_bound(f, 8) == pytest.approx(6.0 / 10.0)


def test_integral_form_log_oracle():
    # H(1)(z) = -log(1-z)/z, which is 1 at z = 0 and 2 log 2 at z = 1/2
    one = PowerSeries([1.0])
    assert apply_integral(one, 0.0) == pytest.approx(1.0, abs=1e-10)
    assert apply_integral(one, 0.5) == pytest.approx(2.0 * math.log(2.0), rel=1e-10)


def test_coefficient_and_integral_forms_agree():
    rng = np.random.default_rng(3)
    f = PowerSeries(rng.standard_normal(13))
    for _ in range(8):
        r = 0.85 * math.sqrt(rng.random())
        theta = 2.0 * math.pi * rng.random()
        z = r * complex(math.cos(theta), math.sin(theta))
        lhs = apply_integral(f, z)
        rhs = evaluate(apply_coeff(f, 600), z)
        assert abs(lhs - rhs) < 1e-9


def test_composition_geometry():
    comp = CompositionData(0.4)
    assert comp.center == pytest.approx(1.0 / 1.6)
    assert comp.radius == pytest.approx(0.6 / 1.6)
    assert comp.inner_radius == pytest.approx(0.4 / 1.6)
    # the disk boundary passes through z = 1 and z = inner_radius
    assert comp.center + comp.radius == pytest.approx(1.0)
    assert abs(comp.g(complex(comp.center))) > 0.0
    with pytest.raises(ValueError):
        CompositionData(1.0)


def test_comp_norm_matches_direct_disk_quadrature():
    params = SpaceParams(5.0, 1.0)
    f = PowerSeries([1.0, -0.4, 0.3, 0.2])
    for t in (0.2, 0.7):
        comp = CompositionData(t)

        def integrand(z):
            return np.abs(comp.omega(z) * evaluate(f, comp.phi(z))) ** params.p

        direct = disk_integral(integrand, params, radial_count=512, angular_count=512)
        assert comp_norm(f, params, t, radial_count=128, angular_count=512) == pytest.approx(
            direct ** (1.0 / params.p), rel=1e-10
        )


def test_comp_norm_stable_near_endpoints():
    params = SpaceParams(5.0, 1.0)
    one = PowerSeries([1.0])
    for t in (1e-12, 1.0 - 1e-10):
        val = comp_norm(one, params, t)
        assert np.isfinite(val) and val > 0.0


def test_k_func_endpoints():
    one = PowerSeries([1.0])
    assert k_func(one, SpaceParams(5.0, 1.0), 1.0) == 0.0
    # at t = 0 and alpha = 0 the integral is 2 int_0^1 r^(p-3) dr = 2/(p-2)
    assert k_func(one, SpaceParams(5.0, 0.0), 0.0) == pytest.approx(2.0 / 3.0, rel=1e-12)


def test_k_func_majorizes_comp_norm():
    params = SpaceParams(5.0, 1.0)
    f = PowerSeries([1.0, 0.5, 0.25])
    a = params.a
    for t in (0.1, 0.5, 0.9):
        upper = t ** (a - 1.0) * (1.0 - t) ** (-a) * k_func(f, params, t) ** (1.0 / params.p)
        assert comp_norm(f, params, t, radial_count=128, angular_count=512) <= upper + 1e-9


def test_j_func_agrees_with_norm_power():
    params = SpaceParams(5.0, 1.0)
    f = PowerSeries([1.0, -0.2, 0.6])
    scheme = QuadratureScheme.for_space(params, degree_hint=f.degree)
    assert j_func(f, params) == pytest.approx(bergman_norm(f, params, scheme) ** params.p, rel=1e-8)
    assert j_func(PowerSeries([1.0]), params) == pytest.approx(1.0, rel=1e-10)

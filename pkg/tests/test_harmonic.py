import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hcv.cpoly import Polynomial, TruncatedSeries, reciprocal_conjugate, series_log_ratio_strip
from hcv.errors import BranchMismatch, DegenerateShear
from hcv.harmonic import (
    DilatationParams,
    F_a_closed_form,
    RationalDilatation,
    ThetaClass,
    a_par,
    a_par_beta,
    analytic_difference_closed_form,
    build_p,
    convolve,
    degenerate_theta_class,
    dilatation_general,
    dilatation_pi2,
    endpoint_a,
    half_plane_series,
    make_F_a,
    make_f_beta,
    mobius_dilatation,
    monomial_dilatation,
    rule_half_pi_factor,
    shear,
    special_case_polys,
    unimodular_root,
)
from hcv.zerolocation import zeros_in_closed_disk


def test_identity_shear():
    F = TruncatedSeries([0, 1, 0, 0, 0])
    zero = RationalDilatation(Polynomial([0.0]), Polynomial([1.0]))
    f = shear(F, zero)
    assert np.allclose(f.analytic.coeffs, F.coeffs)
    assert np.allclose(f.coanalytic.coeffs, 0)


def test_degenerate_shear():
    F = half_plane_series(5)
    with pytest.raises(DegenerateShear):
        shear(F, RationalDilatation(Polynomial([-1.0]), Polynomial([1.0])))


def test_half_plane_shear_a0():
    # h' = 1/(1-z)^3 so h = z + (3/2) z^2 + 2 z^3 + ...
    f = make_F_a(0.0, 6)
    assert abs(f.analytic.coeffs[2] - 1.5) < 1e-14
    assert abs(f.coanalytic.coeffs[2] + 0.5) < 1e-14
    z = 0.3 + 0.2j
    H0 = (z - z**2 / 2) / (1 - z) ** 2
    assert abs(make_F_a(0.0, 200).analytic(z) - H0) < 1e-13


@pytest.mark.parametrize("a", [-0.6, 0.0, 0.3, 0.9])
def test_F_a_matches_closed_form(a):
    f = make_F_a(a, 300)
    z = 0.7 * np.exp(1j * np.linspace(0, 6, 9))
    H, G = F_a_closed_form(a, z)
    assert np.allclose(f.analytic(z), H, atol=1e-12)
    assert np.allclose(f.coanalytic(z), G, atol=1e-12)
    assert abs(f.b1 - a / (1 + a)) < 1e-14
    # derivative closed form (1 - a z)/((1 + a)(1 - z)^3)
    hp = TruncatedSeries(f.analytic.coeffs).derivative()
    assert np.allclose(hp(z), (1 - a * z) / ((1 + a) * (1 - z) ** 3), atol=1e-10)


def test_f_beta_example():
    f = make_f_beta(np.pi / 2, 0.0, 1, 4)
    assert np.allclose(f.analytic.coeffs, [0, 1, -0.5, 0, 0], atol=1e-15)


@pytest.mark.parametrize("n", [2, 3, 7])
def test_f_beta_structure(n):
    f = make_f_beta(np.pi / 2, 0.4, n, 40)
    assert abs(f.coanalytic.coeffs[1]) < 1e-15
    total = f.analytic + f.coanalytic
    assert np.allclose(total.coeffs, series_log_ratio_strip(np.pi / 2, 40).coeffs, atol=1e-13)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.1, 3.0), st.floats(0, 2 * np.pi), st.integers(1, 9))
def test_shear_identity(beta, theta, n):
    order = 48
    f = make_f_beta(beta, theta, n, order)
    F = series_log_ratio_strip(beta, order)
    assert np.max(np.abs((f.analytic + f.coanalytic).coeffs - F.coeffs)) < 1e-13
    hp, gp = f.analytic.derivative(), f.coanalytic.derivative()
    w = monomial_dilatation(n, theta).series(hp.order)
    assert np.max(np.abs((gp - w * hp).coeffs)) < 1e-12


def test_convolution_coefficients():
    fb = make_f_beta(np.pi / 2, 0.0, 1, 16)
    ident = shear(half_plane_series(16), RationalDilatation(Polynomial([0.0]), Polynomial([1.0])))
    assert np.allclose(convolve(ident, fb).analytic.coeffs, fb.analytic.coeffs)
    Fa = make_F_a(0.0, 16)
    c = convolve(Fa, fb)
    assert c.analytic.coeffs[3] == Fa.analytic.coeffs[3] * fb.analytic.coeffs[3]
    assert c.coanalytic.coeffs[2] == Fa.coanalytic.coeffs[2] * fb.coanalytic.coeffs[2]


def test_convolution_closed_form():
    # A_k = 1/2 + c k, so H * h = h/2 + c z h'
    a, order = 0.4, 64
    c = (1 - a) / (2 * (1 + a))
    fb = make_f_beta(np.pi / 2, 1.3, 3, order)
    conv = convolve(make_F_a(a, order), fb)
    k = np.arange(order + 1)
    assert np.allclose(conv.analytic.coeffs, (0.5 + c * k) * fb.analytic.coeffs, atol=1e-14)
    assert np.allclose(conv.coanalytic.coeffs, (0.5 - c * k) * fb.coanalytic.coeffs, atol=1e-14)


@pytest.mark.parametrize("n,a,theta", [(1, 0.2, 0.3), (3, 0.5, 2.0), (7, 0.9, 4.4)])
def test_analytic_difference_closed_form(n, a, theta):
    conv = convolve(make_F_a(a, 2048), make_f_beta(np.pi / 2, theta, n, 2048))
    z = 0.9 * np.exp(1j * np.linspace(0, 6.2, 13))
    assert np.allclose(conv.analytic_difference()(z), analytic_difference_closed_form(n, a, theta, z),
                       atol=1e-12)


def test_build_p_examples():
    assert np.allclose(build_p(2, 0.5, 0.0).coeffs, [0, 0, 1, 0, 1])
    assert np.allclose(build_p(5, 0.6, 0.0).coeffs, [-0.4, 0, 0, 0, 0, 0.6, 0, 1])
    p = build_p(4, 0.3, 0.7)
    e = np.exp(-0.7j)
    assert np.allclose(p.coeffs, [0.5 * (0.6 + 1.2 - 4) * e, 0, 0.5 * (2 + 1.2 - 4) * e, 0, 0.3, 0, 1])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 10), st.floats(-0.95, 0.95), st.floats(0, 2 * np.pi))
def test_general_dilatation_reduces_at_half_pi(n, a, theta):
    g = dilatation_general(DilatationParams(n, theta, a))
    p = build_p(n, a, theta)
    target_num = (2 * np.exp(2j * theta) * p).shift(n)
    target_den = 2 * reciprocal_conjugate(p, n + 2)
    assert g.numerator.max_abs_diff(target_num) < 1e-12
    assert g.denominator.max_abs_diff(target_den) < 1e-12
    assert abs(dilatation_pi2(n, a, theta)(0.0)) == 0


def test_general_dilatation_sanity():
    w = dilatation_general(DilatationParams(1, 0.0, 0.0, 2 * np.pi / 3))
    assert abs(w(0.0)) == 0
    assert abs(w(0.5)) < 1


def test_dilatation_matches_convolution_series():
    # omega~ = (G * g)' / (H * h)' from the series themselves
    n, a, theta, order = 3, 0.45, 0.8, 400
    conv = convolve(make_F_a(a, order), make_f_beta(np.pi / 2, theta, n, order))
    z = 0.5 * np.exp(1j * np.linspace(0, 6, 7))
    ratio = conv.coanalytic.derivative()(z) / conv.analytic.derivative()(z)
    assert np.allclose(ratio, dilatation_pi2(n, a, theta)(z), atol=1e-10)
    assert np.allclose(ratio, dilatation_general(DilatationParams(n, theta, a))(z), atol=1e-10)


@pytest.mark.parametrize("n", range(1, 11))
def test_endpoint_identity(n):
    theta = 0.37 * n
    p = build_p(n, endpoint_a(n), theta)
    assert p.max_abs_diff(-np.exp(-1j * theta) * reciprocal_conjugate(p, n + 2)) < 1e-14


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.floats(-0.9, 0.999), st.floats(0, 2 * np.pi))
def test_modulus_bound_transfer(n, a, theta):
    v = zeros_in_closed_disk(build_p(n, a, theta))
    if v.verdict.in_closed_disk:
        w = dilatation_pi2(n, a, theta)
        r = np.linspace(0.05, 0.999, 20)[:, None] * np.exp(1j * np.linspace(0, 2 * np.pi, 64))[None, :]
        assert np.max(np.abs(w(r))) < 1


def test_a_par_reduction():
    assert np.allclose(a_par_beta(4, 0.2).coeffs, [2 * np.exp(-0.2j), 0, 4, 0, 6])
    z2, beta = special_case_polys(4, a_par(4), 0.2, ThetaClass.A_PAR)
    assert (z2 * beta).max_abs_diff(build_p(4, a_par(4), 0.2)) < 1e-14
    with pytest.raises(BranchMismatch):
        special_case_polys(4, 0.5, 0.2, ThetaClass.A_PAR)


def test_degenerate_factorizations():
    f, q = special_case_polys(8, 0.7, np.pi, ThetaClass.ODD_PI)
    assert q.degree == 8 and (f * q).max_abs_diff(build_p(8, 0.7, np.pi)) < 1e-12
    f, q = special_case_polys(6, 0.7, 0.0, ThetaClass.EVEN_PI_HALF_ODD_N)
    assert np.allclose(f.coeffs, [1, 0, 1])
    with pytest.raises(BranchMismatch):
        special_case_polys(8, 0.7, 0.0, ThetaClass.ODD_PI)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11])
@pytest.mark.parametrize("theta", [np.pi / 2, 3 * np.pi / 2])
def test_half_pi_factor_rule(n, theta):
    rho = unimodular_root(n, theta)
    p = build_p(n, 0.55, theta)
    assert abs(p(rho)) < 1e-13
    assert abs(p(-rho)) > 1e-3
    f, q = special_case_polys(n, 0.55, theta, ThetaClass.HALF_PI_ODD_N)
    assert (f * q).max_abs_diff(p) < 1e-12
    # the 4s +- 1 assignment holds at 3 pi / 2 and is reversed at pi / 2
    rule_root = -rule_half_pi_factor(n).coeff(0)
    assert (abs(p(rule_root)) < 1e-13) == (theta > np.pi)


def test_degenerate_theta_classes():
    assert degenerate_theta_class(5, np.pi / 2) is ThetaClass.HALF_PI_ODD_N
    assert degenerate_theta_class(6, 2 * np.pi) is ThetaClass.EVEN_PI_HALF_ODD_N
    assert degenerate_theta_class(8, 3 * np.pi) is ThetaClass.ODD_PI
    assert degenerate_theta_class(8, 0.0) is None
    assert degenerate_theta_class(6, np.pi) is None


def test_parameter_validation():
    with pytest.raises(ValueError):
        DilatationParams(0, 0.0, 0.5)
    with pytest.raises(ValueError):
        DilatationParams(2, 0.0, 1.0)
    with pytest.raises(ValueError):
        make_F_a(1.0)
    assert mobius_dilatation(0.3)(0.0) == 0.3

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hcv.cpoly import (
    Polynomial,
    TruncatedSeries,
    find_roots,
    poly_eval,
    quadratic_roots,
    reciprocal_conjugate,
    series_divide,
    series_log,
    series_log_ratio_strip,
)
from hcv.errors import DegenerateParameter, ZeroConstantTerm

finite = st.floats(-3, 3, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)


def coeff_lists(min_size=2, max_size=9):
    return st.lists(cplx, min_size=min_size, max_size=max_size).filter(lambda c: abs(c[-1]) > 0.1)


def test_eval_examples():
    assert abs(poly_eval(Polynomial([1, 0, 1]), 1j)) < 1e-15
    assert poly_eval(Polynomial([0, 0, 1, 0, 1]), 1.0) == 2
    assert poly_eval(Polynomial([1.0]), 0.3 + 0.4j) == 1


def test_eval_vectorized_matches_numpy():
    p = Polynomial([1, 2 - 1j, 0.5, 3j])
    z = np.linspace(-1, 1, 7) * (1 + 0.5j)
    assert np.allclose(p(z), np.polyval(p.coeffs[::-1], z))


def test_trailing_zeros_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert Polynomial([0, 0]).degree == -1


def test_reciprocal_conjugate_examples():
    assert np.allclose(reciprocal_conjugate(Polynomial([0.5, 0, 1]), 2).coeffs, [1, 0, 0.5])
    assert np.allclose(reciprocal_conjugate(Polynomial.monomial(6), 6).coeffs, [1])
    assert np.allclose(reciprocal_conjugate(Polynomial([0, 0, 1, 0, 1]), 4).coeffs, [1, 0, 1])
    with pytest.raises(ValueError):
        reciprocal_conjugate(Polynomial([1, 2, 3]), 1)


@given(coeff_lists())
def test_reciprocal_conjugate_is_involution(c):
    p = Polynomial(c)
    n = p.degree
    assert reciprocal_conjugate(reciprocal_conjugate(p, n), n).max_abs_diff(p) < 1e-12


@given(coeff_lists(), coeff_lists())
def test_divmod_identity(a, b):
    p, d = Polynomial(a), Polynomial(b)
    q, r = p.divmod(d)
    assert r.degree < d.degree
    assert (q * d + r).max_abs_diff(p) < 1e-8 * (1 + np.max(np.abs(p.coeffs)))


def test_known_roots():
    r = find_roots(Polynomial([1, 0, 1])).roots
    assert np.allclose(r[np.argsort(r.imag)], [-1j, 1j], atol=1e-12)
    r = find_roots(Polynomial([0, 0, 1, 0, 1])).roots
    assert np.allclose(np.sort(np.abs(r)), [0, 0, 1, 1], atol=1e-12)
    r = np.sort(find_roots(Polynomial([1, -2.5, 1])).roots.real)
    assert np.allclose(r, [0.5, 2.0])


def test_multiple_root_converges():
    p = Polynomial.from_roots([0.5, 0.5, 0.5, -0.2j])
    rs = find_roots(p)
    assert rs.residual < 1e-12
    assert np.allclose(np.sort(np.abs(rs.roots)), [0.2, 0.5, 0.5, 0.5], atol=1e-4)


def separated(roots, gap=0.05):
    return all(abs(r - s) >= gap for i, r in enumerate(roots) for s in roots[:i])


@settings(max_examples=60)
@given(st.lists(cplx, min_size=1, max_size=8).filter(separated))
def test_roots_match_numpy(roots):
    # clusters are conditioned like eps^(1/m); see test_multiple_root_converges
    p = Polynomial.from_roots(roots)
    mine = find_roots(p).roots
    ref = np.roots(p.coeffs[::-1])
    # compare as multisets through the polynomial they generate
    assert Polynomial.from_roots(mine).max_abs_diff(Polynomial.from_roots(ref)) < 1e-6 * (1 + np.max(np.abs(p.coeffs)))


def test_quadratic_roots_against_formula():
    r = np.sort_complex(quadratic_roots(Polynomial([-1, 0, 7])))
    assert np.allclose(r, [-1 / np.sqrt(7), 1 / np.sqrt(7)])


def test_series_divide_examples():
    one = TruncatedSeries([1, 0, 0, 0])
    assert np.allclose(series_divide(one, TruncatedSeries([1, 1, 0, 0])).coeffs, [1, -1, 1, -1])
    s = TruncatedSeries([1, 2, 3, 4])
    assert np.allclose(series_divide(s, s).coeffs, [1, 0, 0, 0])
    q = series_divide(TruncatedSeries([1, 0, 0, 0, 0]), TruncatedSeries([1, 0, 1, 0, 0]))
    assert np.allclose(q.coeffs, [1, 0, -1, 0, 1])
    with pytest.raises(ZeroConstantTerm):
        series_divide(one, TruncatedSeries([0, 1, 0, 0]))
    with pytest.raises(ValueError):
        series_divide(one, TruncatedSeries([1, 1]))


@given(st.lists(cplx, min_size=6, max_size=6), st.lists(cplx, min_size=5, max_size=5))
def test_series_divide_inverts_multiply(num, den_tail):
    den = TruncatedSeries([1.0] + den_tail)
    n = TruncatedSeries(num)
    assert np.allclose((series_divide(n, den) * den).coeffs, n.coeffs, atol=1e-6 * (1 + np.abs(num).max()))


def test_series_log_of_exp():
    order = 12
    k = np.arange(order + 1)
    from math import factorial
    e = TruncatedSeries([2.0**j / factorial(j) for j in k])   # exp(2z)
    assert np.allclose(series_log(e).coeffs, [0, 2] + [0] * (order - 1), atol=1e-13)


def test_strip_series_examples():
    s = series_log_ratio_strip(np.pi / 2, 5)
    assert np.allclose(s.coeffs, [0, 1, 0, -1 / 3, 0, 1 / 5], atol=1e-15)
    for beta in (0.3, 1.0, 2.5):
        assert abs(series_log_ratio_strip(beta, 3).coeffs[1] - 1) < 1e-15
    s = series_log_ratio_strip(np.pi / 3, 4)
    assert abs(s.coeffs[2] + 0.5) < 1e-15
    for bad in (0.0, np.pi):
        with pytest.raises(DegenerateParameter):
            series_log_ratio_strip(bad, 4)


def test_strip_series_closed_form_coefficients():
    # coefficient k is (-1)^(k+1) sin(k beta) / (k sin beta)
    beta = 1.1
    s = series_log_ratio_strip(beta, 30).coeffs
    k = np.arange(1, 31)
    assert np.allclose(s[1:], (-1.0) ** (k + 1) * np.sin(k * beta) / (k * np.sin(beta)), atol=1e-14)


def test_series_calculus():
    s = TruncatedSeries([0, 1, 2, 3])
    assert np.allclose(s.derivative().coeffs, [1, 4, 9])
    assert np.allclose(s.derivative().integral().coeffs, s.coeffs)
    assert s.derivative().order == 2

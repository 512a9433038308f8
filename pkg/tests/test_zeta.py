from fractions import Fraction as F

import pytest

from cassoc.hexagon import build_f, residual_15b, split_residuals
from cassoc.series import QQ
from cassoc.zeta import (
    ThetaPoly,
    ThetaRing,
    drinfeld_f,
    drinfeld_s,
    ring_for_degree,
    solve_betas_in_theta,
    theta_even,
    theta_series,
    verify_even_S_identity,
)


def test_theta_even_values():
    assert theta_even(1) == F(-1, 12)
    assert theta_even(2) == F(1, 360)
    assert theta_even(3) == F(-1, 5670)
    assert theta_even(4) == F(1, 75600)
    assert theta_even(5) == F(-1, 935550)


def test_theta_poly_arithmetic():
    ring = ThetaRing(9)
    t3 = ring.generator(3)
    t5 = ring.generator(5)
    p = t3 * t5 * F(2) + ring.from_rational(F(1, 3))
    q = p - t3 * t5 * F(2)
    assert q == ring.from_rational(F(1, 3))
    assert q.is_rational() and q.rational_part() == F(1, 3)
    assert p.odd_to_zero() == F(1, 3)
    assert (t3 * t3).max_weight() == 6
    assert (p / 2).rational_part() == F(1, 6)
    assert ring.inverse_of(ring.from_rational(F(2, 5))) == ring.from_rational(F(5, 2))
    with pytest.raises(ZeroDivisionError):
        ring.inverse_of(t3)


def test_theta_poly_rendering():
    ring = ThetaRing(5)
    t3 = ring.generator(3)
    p = t3 * t3 * F(9, 2) - ring.from_rational(F(1, 1890))
    assert "t3^2" in p.format()
    assert r"\theta_{3}^{2}" in p.format_latex()
    obj = p.to_json_obj()
    assert ring.parse_poly(obj) == p


def test_drinfeld_s_shape():
    s = drinfeld_s(6)
    ring = s.ring
    # s(lam, 0) = 0 and s is symmetric
    assert s.set_mu_zero().is_zero()
    assert s == s.swap()
    assert s.coeff(1, 1) == ring.from_rational(-2 * theta_even(1))


def test_drinfeld_f_coefficients():
    fd = drinfeld_f(7)
    ring = fd.ring
    t3, t5, t7 = ring.generator(3), ring.generator(5), ring.generator(7)
    q = ring.from_rational
    assert fd.coeff(0, 0) == q(F(1, 6))
    assert fd.coeff(1, 0) == t3 * F(-3)
    assert fd.coeff(2, 2) == t3 * t3 * F(9) + q(F(23, 3 * 5040))
    assert fd.coeff(3, 2) == t7 * F(-35) - t5 * F(5, 3) + t3 * F(1, 24)
    assert fd == fd.swap()


def test_even_S_identity():
    assert verify_even_S_identity(4)
    assert verify_even_S_identity(12)


def test_theta_series():
    ts = theta_series(5)
    ring = ts.ring
    t3 = ring.generator(3)
    assert ts.coeff(2, 1) == t3 * F(-3)
    assert ts.coeff(1, 2) == t3 * F(-3)
    assert all((k + l) % 2 == 1 for (k, l) in ts.coeffs)
    assert ts.diagonal().is_zero()
    # theta is the odd part of s
    s = drinfeld_s(5, ring)
    assert s.odd_part() == ts


def test_drinfeld_hexagon_residuals():
    fd = drinfeld_f(9)
    assert residual_15b(fd).is_zero()
    e, o = split_residuals(fd)
    assert e.is_zero() and o.is_zero()


def test_solve_betas_printed_parameters():
    params = solve_betas_in_theta(9)
    r = params.ring
    t3, t5, t7, t9 = (r.generator(n) for n in (3, 5, 7, 9))
    q = r.from_rational
    assert params.beta[(3, 1)] == t3 * t3 * F(9, 2) - q(F(8, 3 * 5040))
    assert params.beta[(4, 1)] == t3 * t5 * F(15) - t3 * t3 * F(3, 4) + q(F(44, 45 * 5040))
    assert params.beta_tilde[(0, 0)] == t3 * F(-3)
    assert params.beta_tilde[(1, 0)] == t5 * F(-5) + t3 * F(1, 2)
    assert params.beta_tilde[(2, 0)] == t7 * F(-7) + t5 * F(5, 6) - t3 * F(7, 120)
    assert params.beta_tilde[(3, 0)] == t9 * F(-9) + t7 * F(7, 6) - t5 * F(7, 72) + t3 * F(31, 5040)
    assert params.beta_tilde[(3, 1)] == t3 * t3 * t3 * F(-9, 2) - t9 * F(3) + t3 * F(1, 630)


def test_solve_betas_round_trip():
    params = solve_betas_in_theta(9)
    assert build_f(params, 9) == drinfeld_f(9, params.ring)


def test_odd_to_zero_recovers_even_family():
    from cassoc.hexagon import family_III

    fd = drinfeld_f(12)
    f3 = family_III(12)
    for kl in set(fd.coeffs) | set(f3.coeffs):
        assert fd.coeffs.get(kl, fd.ring.zero).odd_to_zero() == f3.coeffs.get(kl, F(0))


def test_weight_grading():
    fd = drinfeld_f(10)
    for (k, l), c in fd.coeffs.items():
        assert c.max_weight() <= k + l + 2


def test_cosh_side_is_one_on_diagonal():
    # both sides of the even identity collapse to 1 at mu = -lam
    from cassoc.zeta import _sqrt_sinhc_product, _cosh

    ring = ring_for_degree(9)
    th = theta_series(9, ring)
    lhs = _cosh(th).diagonal()
    assert lhs.coeff(0) == ring.one and all(
        ring.is_zero(lhs.coeff(n)) for n in range(1, 10)
    )
    # and the right-hand side h * sqrt(...) collapses to 1 there as well
    from cassoc.hexagon import extract_h
    h = extract_h(drinfeld_f(7, ring))
    rhs = (h * _sqrt_sinhc_product(h.order, ring).inverse().inverse()).diagonal()
    assert rhs.coeff(0) == ring.one and all(ring.is_zero(rhs.coeff(n)) for n in range(1, 8))


def test_ring_bound_guard():
    with pytest.raises(ValueError):
        drinfeld_s(12, ThetaRing(9))
    assert ring_for_degree(11).gens == (3, 5, 7, 9, 11)

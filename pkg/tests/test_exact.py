from fractions import Fraction as F

import pytest

from cassoc.exact import (
    bernoulli,
    check_bernoulli_identity,
    ext_bernoulli_closed,
    ext_bernoulli_prime,
    ext_bernoulli_recursive,
    format_rational,
    gamma_coefficients,
    parse_rational,
)


def test_bernoulli_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(-1, 2)
    assert bernoulli(2) == F(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == F(-1, 30)
    assert bernoulli(6) == F(1, 42)
    assert all(bernoulli(n) == 0 for n in range(3, 40, 2))


@pytest.mark.parametrize("m,variant", [(1, "a"), (4, "a"), (50, "c")])
def test_bernoulli_identity_examples(m, variant):
    assert check_bernoulli_identity(m, variant)


@pytest.mark.parametrize("variant", ["a", "b", "c"])
def test_bernoulli_identities_sweep(variant):
    assert all(check_bernoulli_identity(m, variant) for m in range(1, 51))


def test_ext_bernoulli_recursive_values():
    assert ext_bernoulli_recursive(2, 1) == F(-1, 6)
    assert ext_bernoulli_recursive(2, 2) == F(1, 6)
    assert ext_bernoulli_recursive(2, 3) == F(-1, 15)
    assert ext_bernoulli_recursive(3, 1) == 0
    assert ext_bernoulli_recursive(3, 2) == F(1, 15)
    assert ext_bernoulli_recursive(4, 1) == F(1, 30)
    assert ext_bernoulli_recursive(6, 6) == F(305, 462)


def test_ext_bernoulli_closed_values():
    assert ext_bernoulli_closed(2, 2) == bernoulli(2) + 2 * bernoulli(3) == F(1, 6)
    for n in range(1, 10):
        assert ext_bernoulli_closed(1, n) == bernoulli(n)
    assert ext_bernoulli_closed(5, 4) == ext_bernoulli_recursive(5, 4)


def test_recursive_equals_closed_sweep():
    for m in range(1, 13):
        for n in range(1, 14 - m):
            assert ext_bernoulli_recursive(m, n) == ext_bernoulli_closed(m, n)


def test_index_swap_symmetry():
    for m in range(1, 13):
        for n in range(1, 14 - m):
            assert ext_bernoulli_recursive(m, n) == (-1) ** (m + n) * ext_bernoulli_recursive(n, m)


def test_prime_values():
    assert ext_bernoulli_prime(1, 1) == F(1, 2)
    assert ext_bernoulli_prime(1, 4) == F(-1, 30)
    assert ext_bernoulli_prime(3, 2) == F(1, 15)


def test_prime_mirror_relation():
    for m in range(1, 10):
        for n in range(1, 11 - m):
            assert ext_bernoulli_prime(m, n) == (-1) ** (m + n - 1) * ext_bernoulli_recursive(m, n)


def test_gamma_coefficients():
    g = gamma_coefficients(8)
    assert g[0] == 1
    assert g[1] == F(-1, 6)
    assert g[2] == F(7, 360)
    assert g[3] == F(-31, 3 * 5040)
    assert g[4] == F(127, 15 * 40320)
    # defining recursion: sum_k g_{n-k}/(2k+1)! = 0
    fact = [1]
    for k in range(1, len(g)):
        fact.append(fact[-1] * 2 * k * (2 * k + 1))
    for n in range(1, len(g)):
        assert sum(F(g[n - k], fact[k]) for k in range(n + 1)) == 0


def test_rational_serialization():
    assert format_rational(F(-1, 2)) == "-1/2"
    assert format_rational(F(5)) == "5"
    assert parse_rational("7/3") == F(7, 3)
    assert parse_rational("-4") == F(-4)


def test_bad_inputs():
    with pytest.raises(ValueError):
        bernoulli(-1)
    with pytest.raises(ValueError):
        ext_bernoulli_recursive(0, 1)
    with pytest.raises(ValueError):
        check_bernoulli_identity(3, "d")

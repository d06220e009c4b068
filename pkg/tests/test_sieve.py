from fractions import Fraction

import pytest

from rcprod.Constants import ValidationError
from rcprod.quadfield import rational_ideal, unit_ideal, primes_above
from rcprod.sieve import (make_sieve_context, g_sum, lambda_table, lambda_of, reciprocal_sum,
                          verify_reciprocal_identity, g_lower_bound_checks,
                          selberg_pointwise_bound, euler_product_bounds, c2_factorization_check,
                          lambda_norm_bounds, prime_sum_checks, mellin_kernel_check,
                          classical_prime_checks, moebius, MoebiusTruncation, truncated_moebius)


@pytest.fixture(scope='module')
def ctx5(gauss, gauss_mod3):
    return make_sieve_context(gauss, gauss_mod3, 5)


@pytest.fixture(scope='module')
def table5(ctx5):
    return lambda_table(ctx5)


def test_sieving_primes(ctx5):
    assert sorted(P.norm for P in ctx5.primes) == [2, 5, 5]
    with pytest.raises(ValidationError):
        make_sieve_context(ctx5.field, ctx5.modulus, Fraction(1, 2))


def test_g_sum(gauss, gauss_mod3, table5):
    # 1 + 1/1 + 1/4 + 1/4
    assert table5.G == Fraction(5, 2)
    assert g_sum(gauss, unit_ideal(gauss), gauss_mod3, 5) == Fraction(5, 2)
    assert g_sum(gauss, primes_above(gauss, 2)[0].hnf, gauss_mod3, 5) == Fraction(3, 2)


def test_lambda_weights(gauss, table5):
    P2 = primes_above(gauss, 2)[0]
    P5, Q5 = primes_above(gauss, 5)
    assert table5[()] == 1
    assert table5[[P2]] == Fraction(-4, 5)
    assert table5[[P5]] == table5[[Q5]] == Fraction(-1, 2)
    assert len(table5.weights) == 4
    assert lambda_of(table5, P5.hnf) == Fraction(-1, 2)
    # (2) = (1+i)^2 is not squarefree
    assert lambda_of(table5, rational_ideal(gauss, 2)) == 0
    assert lambda_of(table5, rational_ideal(gauss, 3)) == 0


def test_reciprocal_identity(ctx5, table5):
    assert reciprocal_sum(table5) == Fraction(2, 5)
    assert verify_reciprocal_identity(ctx5, table5)


@pytest.mark.parametrize('z', [2, 10, 30])
def test_reciprocal_identity_other_levels(gauss, gauss_mod3, z):
    assert verify_reciprocal_identity(make_sieve_context(gauss, gauss_mod3, z))


def test_g_lower_bounds(ctx5, table5):
    rec = g_lower_bound_checks(ctx5, table5)
    assert rec['halberstam_schaal_ok']
    assert rec['van_lint_richert_ok']
    assert rec['phi_ratio'] == Fraction(8, 9)
    assert not rec['hypothesis_met']
    assert rec['asymptotic_ok'] is None


def test_moebius(gauss):
    assert moebius(unit_ideal(gauss)) == 1
    assert moebius(primes_above(gauss, 2)[0].hnf) == -1
    assert moebius(rational_ideal(gauss, 65)) == 1
    assert moebius(rational_ideal(gauss, 9)) == 0


def test_truncated_moebius(gauss):
    # (65) splits into four primes: mu_1 = 0, psi_1 = 1 - 4
    assert truncated_moebius(rational_ideal(gauss, 65), 1) == (0, -3)
    assert truncated_moebius(rational_ideal(gauss, 65), 4) == (1, 0)
    assert truncated_moebius(unit_ideal(gauss), 0) == (1, 1)
    with pytest.raises(ValidationError):
        MoebiusTruncation(-1)
    with pytest.raises(ValidationError):
        truncated_moebius(rational_ideal(gauss, 2), 1)


def test_euler_product_bounds():
    bounds = euler_product_bounds(0.0)
    for name in ('c1', 'c2'):
        low, high = bounds[name]
        assert 1.0 < low <= high
    with pytest.raises(ValidationError):
        euler_product_bounds(1.0)


@pytest.mark.parametrize('alpha', [0.0, 0.5])
def test_c2_factorization(alpha):
    assert c2_factorization_check(alpha) <= 1e-10


def test_lambda_norm_bounds(table5):
    rec = lambda_norm_bounds(table5, 0)
    assert rec['lhs'] == Fraction(14, 5)
    assert rec['absolute_ok']
    assert rec['cor_alpha0_ok']
    half = lambda_norm_bounds(table5, Fraction(1, 2))
    assert half['cor_alpha1n_ok']


def test_selberg_pointwise_bound(gauss_rcg):
    rec = selberg_pointwise_bound(gauss_rcg, (0,), 100, 5)
    assert rec['holds']
    assert rec['T1'] <= rec['rhs']
    with pytest.raises(ValidationError):
        selberg_pointwise_bound(gauss_rcg, (0,), 4, 5)


def test_prime_sum_checks(gauss):
    rec = prime_sum_checks(gauss, 200)
    assert rec['holds']
    assert [row['alpha'] for row in rec['rows']] == [0.0, 0.5]


def test_mellin_kernel():
    rec = mellin_kernel_check(y_values=(0.5, 2.0), k_values=(2, 3))
    assert rec['holds']
    assert all(row['exact'] == 0.0 for row in rec['rows'] if row['y'] == 2.0)


def test_classical_prime_checks():
    rec = classical_prime_checks(1000)
    assert rec['holds']
    assert rec['prime_powers']['count_at_100'] == 10
    assert rec['reciprocals']['sum_at_100'] == pytest.approx(1.8028, abs=1e-4)
    assert classical_prime_checks(50)['reciprocals'] is None


@pytest.mark.slow
def test_classical_prime_checks_large():
    assert classical_prime_checks(10**6)['holds']

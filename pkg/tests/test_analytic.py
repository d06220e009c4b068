import math
from fractions import Fraction

import numpy as np
import pytest

from rcprod.Constants import ValidationError
from rcprod.analytic import (w0_polynomial, mellin, mellin_exact, mellin_grid, decay_bound,
                             verify_smoothing_claims, constant_ledger, hr1_log_bound,
                             hr2_log_bound, fchi_log_bound, ideal_count_main_term,
                             ideal_count_log_error, hecke_partial_eval, dedekind_zeta_oracle)
from rcprod.quadfield import FieldSpec

# ||w_0||_1 for n = 2 (k = 6)
L1_N2 = Fraction(9, 10)*Fraction(2**12*math.factorial(6)**2, math.factorial(13))


@pytest.fixture(scope='module')
def w2():
    return w0_polynomial(2)


def test_w0_shape(w2):
    assert w2.k == 6
    assert w2.degree == 12
    assert w2.exact(Fraction(11, 20)) == 1
    assert w2.exact(Fraction(1, 10)) == 0
    assert w2.exact(2) == 0
    assert w2.vanishing_order(Fraction(1, 10)) == 6
    assert float(w2(np.array([0.55]))[0]) == pytest.approx(1.0)
    with pytest.raises(ValidationError):
        w0_polynomial(1)


def test_w0_norms(w2):
    assert w2.l1_norm() == L1_N2
    assert float(L1_N2) == pytest.approx(0.30689, abs=1e-5)
    assert w2.derivative_l1_norm(1) == 2
    lo, hi = w2.sup_norm(0)
    assert lo == 1
    assert hi >= 1


def test_mellin_values(w2):
    assert mellin_exact(w2, 1) == L1_N2
    val = mellin(w2, 2.0)
    assert val.value.real == pytest.approx(float(mellin_exact(w2, 2)), abs=1e-12)
    grid = mellin_grid(w2, [1.0, 3.0])
    assert grid[0].real == pytest.approx(float(L1_N2), rel=1e-10)
    assert grid[1].real == pytest.approx(float(mellin_exact(w2, 3)), rel=1e-10)
    with pytest.raises(ValidationError):
        mellin_exact(w2, 0.5)


def test_mellin_decay(w2):
    dsup = float(w2.sup_norm(5)[0])
    for s in (10j, 0.5 + 25j):
        assert abs(mellin(w2, s).value) <= decay_bound(2, dsup, s)


def test_smoothing_claims_n2():
    rec = verify_smoothing_claims(2)
    assert rec['holds']
    assert rec['mellin_at_one']['scaled'] == pytest.approx(10*math.sqrt(2)*float(L1_N2))
    assert rec['derivative_l1']['value'] == 2
    with pytest.raises(ValidationError):
        verify_smoothing_claims(9)


@pytest.mark.slow
@pytest.mark.parametrize('n', [3, 4, 5, 6, 7, 8])
def test_smoothing_claims(n):
    assert verify_smoothing_claims(n)['holds']


def test_constant_ledger(gauss, gauss_mod3):
    led = constant_ledger(gauss, gauss_mod3)
    assert led.h_q == 2
    assert led.phi_q == 8
    assert led['u_K'] == pytest.approx(384*math.log(2) + 6*math.log(4))
    assert led['u_K'] == pytest.approx(274.49, abs=0.01)
    assert led['t_K'] == float(4)**30
    assert led['theta_q'] == pytest.approx(math.log(1.5))
    assert led['F_q'] == pytest.approx(math.log(4))
    assert led['F1_q'] == pytest.approx(math.log(9))
    assert all(led.checks.values())
    assert set(led.to_json()['checks']) >= {'alpha_sandwich', 'simplify_tK', 't_K_is_max'}


def test_ledger_rejects_rationals(rationals):
    with pytest.raises(ValidationError):
        constant_ledger(rationals, rationals.number(1))


def test_ideal_count_terms(gauss, gauss_mod3):
    led = constant_ledger(gauss, gauss_mod3)
    main = ideal_count_main_term(gauss, gauss_mod3, 100, ledger=led)
    assert main == pytest.approx(math.pi/4*8*100/(2*9))
    assert math.isfinite(ideal_count_log_error(led, 100))


def test_strip_bounds():
    assert math.isfinite(hr1_log_bound(0.5 + 3j, 0.5, -4, 2))
    assert math.isfinite(hr2_log_bound(0.25, 0.5, -4, 9, 2))
    assert fchi_log_bound(0.75, 0.5, -4, 9, 1.5, 2, trivial=True) > \
        fchi_log_bound(0.75, 0.5, -4, 9, 1.5, 2)
    with pytest.raises(ValidationError):
        hr1_log_bound(2.0, 0.5, -4, 2)
    with pytest.raises(ValidationError):
        hr1_log_bound(1.0, 0.5, -4, 2)
    with pytest.raises(ValidationError):
        hr1_log_bound(0.5, 0.7, -4, 2)
    with pytest.raises(ValidationError):
        fchi_log_bound(0.5, 0.5, -4, 9, 1.5, 2)


@pytest.mark.parametrize('d, value', [(None, math.pi**2/6), (-1, 1.506703), (-3, 1.285190)])
def test_dedekind_zeta_oracle(d, value):
    assert dedekind_zeta_oracle(FieldSpec(d), 2.0) == pytest.approx(value, abs=1e-6)


def test_zeta_oracle_needs_s_above_one(gauss):
    with pytest.raises(ValidationError):
        dedekind_zeta_oracle(gauss, 1.0)


def test_hecke_partial_eval(gauss, gauss_rcg):
    for chi in gauss_rcg.characters():
        rec = hecke_partial_eval(gauss_rcg, chi, 2.0, 500)
        assert rec['residual'] < 1e-8
        assert rec['euler_gap'] < 0.05
    with pytest.raises(ValidationError):
        hecke_partial_eval(gauss_rcg, chi, 1.2, 500)


def test_trivial_character_matches_zeta(gauss, gauss_rcg):
    trivial = next(chi for chi in gauss_rcg.characters() if chi.is_trivial())
    rec = hecke_partial_eval(gauss_rcg, trivial, 2.0, 20000)
    # removing the inert prime (3) of norm 9
    expected = dedekind_zeta_oracle(gauss, 2.0)*(1 - 1/81)
    assert rec['L'].real == pytest.approx(expected, abs=1e-4)
    assert rec['tail_estimate'] < 1e-4


def test_euler_gap_shrinks_with_truncation(gauss_rcg):
    chi = next(chi for chi in gauss_rcg.characters() if not chi.is_trivial())
    small = hecke_partial_eval(gauss_rcg, chi, 2.0, 100)
    large = hecke_partial_eval(gauss_rcg, chi, 2.0, 10000)
    assert large['euler_gap'] < small['euler_gap']
    assert large['residual'] < 1e-8

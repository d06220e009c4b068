import math
from fractions import Fraction

import pytest

from rcprod.Constants import ValidationError, FactoringCapError
from rcprod.quadfield import (FieldSpec, parse_field_spec, fundamental_unit, field_invariants,
                              rational_ideal, unit_ideal, principal_ideal, ideal_product,
                              ideal_conjugate, ideal_lcm_gcd, contains_ideal,
                              narrow_principal_generator, primes_above, factor_ideal,
                              enumerate_ideals, enumerate_degree_one_primes, parse_ideal_spec)


@pytest.mark.parametrize('d', [0, 1, 4, -12, 18])
def test_field_spec_rejects_non_squarefree(d):
    with pytest.raises(ValidationError):
        FieldSpec(d)


def test_parse_field_spec():
    assert parse_field_spec("Q(sqrt:-1)") == FieldSpec(-1)
    assert parse_field_spec(" Q ( sqrt : 5 ) ") == FieldSpec(5)
    assert parse_field_spec("Q").is_rational
    with pytest.raises(ValidationError):
        parse_field_spec("Q(sqrt:x)")


@pytest.mark.parametrize('d, disc', [(-1, -4), (-3, -3), (-5, -20), (2, 8), (5, 5)])
def test_discriminant(d, disc):
    assert FieldSpec(d).disc == disc


def test_gaussian_arithmetic(gauss):
    x = gauss.number(1, 1)
    assert x*x.conjugate() == gauss.number(2)
    assert x.norm() == 2
    assert x/x == gauss.number(1)
    assert x**4 == gauss.number(-4)


def test_eisenstein_root_of_unity():
    K = FieldSpec(-3)
    w = K.number(0, 1)
    assert w**3 == K.number(-1)
    assert w**6 == K.number(1)


@pytest.mark.parametrize('d, coords, unit_norm', [(2, (1, 1), -1), (3, (2, 1), 1),
                                                  (5, (0, 1), -1)])
def test_fundamental_unit(d, coords, unit_norm):
    K = FieldSpec(d)
    eps, nrm = fundamental_unit(K)
    assert eps == K.number(*coords)
    assert nrm == unit_norm


@pytest.mark.parametrize('d, h', [(-1, 1), (-3, 1), (-5, 2), (-23, 3), (2, 1), (3, 1), (10, 2)])
def test_class_numbers(d, h):
    assert field_invariants(FieldSpec(d)).h == h


def test_narrow_class_number_sqrt3(sqrt3):
    inv = field_invariants(sqrt3)
    assert inv.h == 1
    assert inv.h_narrow == 2


def test_class_number_formula(gauss):
    inv = field_invariants(gauss)
    assert inv.mu_order == 4
    assert inv.alpha == pytest.approx(math.pi/4, rel=1e-14)
    eis = field_invariants(FieldSpec(-3))
    assert eis.alpha == pytest.approx(math.pi/(3*math.sqrt(3)), rel=1e-14)


def test_prime_decomposition(gauss):
    assert [P.kind for P in primes_above(gauss, 2)] == ['ramified']
    assert [P.kind for P in primes_above(gauss, 3)] == ['inert']
    assert primes_above(gauss, 3)[0].norm == 9
    above5 = primes_above(gauss, 5)
    assert [P.kind for P in above5] == ['split', 'split']
    assert above5[0].conjugate() == above5[1]
    assert ideal_product(above5[0].hnf, above5[1].hnf) == rational_ideal(gauss, 5)
    with pytest.raises(ValidationError):
        primes_above(gauss, 6)


def test_factor_ideal(gauss):
    P2 = primes_above(gauss, 2)[0]
    P5, Q5 = primes_above(gauss, 5)
    assert factor_ideal(rational_ideal(gauss, 10)) == [(P2, 2), (P5, 1), (Q5, 1)]
    assert factor_ideal(unit_ideal(gauss)) == []
    assert principal_ideal(gauss.number(1, 1)) == P2.hnf


def test_factoring_cap(gauss):
    with pytest.raises(FactoringCapError):
        factor_ideal(rational_ideal(gauss, 10**7), cap=10**12)


def test_lcm_gcd_and_conjugate(gauss):
    P5, Q5 = primes_above(gauss, 5)
    lcm, gcd = ideal_lcm_gcd(P5.hnf, rational_ideal(gauss, 5))
    assert lcm == rational_ideal(gauss, 5)
    assert gcd == P5.hnf
    assert ideal_conjugate(P5.hnf) == Q5.hnf
    assert contains_ideal(P5.hnf, rational_ideal(gauss, 5))
    assert not contains_ideal(P5.hnf, Q5.hnf)


def test_principality():
    K = FieldSpec(-5)
    P2 = primes_above(K, 2)[0]
    assert narrow_principal_generator(P2.hnf) is None
    gen, _ = narrow_principal_generator(ideal_product(P2.hnf, P2.hnf))
    assert abs(gen.norm()) == 4


def test_enumerate_ideals(gauss):
    # sum over n <= 10 of sum_{d | n} chi_{-4}(d)
    assert len(list(enumerate_ideals(gauss, 10))) == 9
    norms = sorted(x.norm for x in enumerate_ideals(gauss, 10, rational_ideal(gauss, 3)))
    assert 9 not in norms


def test_enumerate_degree_one_primes(gauss, gauss_mod3):
    norms = [P.norm for P in enumerate_degree_one_primes(gauss, 30, gauss_mod3)]
    assert norms == [5, 5, 13, 13, 17, 17, 29, 29]
    with_ram = enumerate_degree_one_primes(gauss, 30, gauss_mod3, include_ramified=True)
    assert with_ram[0].norm == 2


def test_parse_ideal_spec(gauss):
    assert parse_ideal_spec(gauss, "(3)") == rational_ideal(gauss, 3)
    assert parse_ideal_spec(gauss, "above:5:1") == primes_above(gauss, 5)[1].hnf
    P5 = primes_above(gauss, 5)[0].hnf
    assert parse_ideal_spec(gauss, "hnf:{},{},{}".format(P5.s, P5.a, P5.b)) == P5
    with pytest.raises(ValidationError):
        parse_ideal_spec(gauss, "above:7:1")
    with pytest.raises(ValidationError):
        parse_ideal_spec(gauss, "three")


def test_rational_backend(rationals):
    assert rationals.degree == 1
    x = rational_ideal(rationals, 12)
    assert [(P.p, ee) for P, ee in factor_ideal(x)] == [(2, 2), (3, 1)]
    assert rationals.number(Fraction(1, 2)).norm() == Fraction(1, 2)

import pytest

from rcprod.Constants import ValidationError, UnsaturatedError, TableCapError
from rcprod.quadfield import FieldSpec, rational_ideal, unit_ideal, primes_above
from rcprod.rayclass import (ResidueSignGroup, modulus_phi, ray_class_order, is_ray_principal,
                             build_ray_class_group, class_of, conductor_of_character,
                             ray_equivalent, ray_class_oracle_count, quadratic_characters)


def test_gauss_mod3_structure(gauss_rcg):
    assert gauss_rcg.order == 2
    assert gauss_rcg.group.invariant_factors == (2,)


def test_modulus_phi(gauss):
    assert modulus_phi(gauss, rational_ideal(gauss, 3)) == 8
    assert modulus_phi(gauss, rational_ideal(gauss, 5)) == 16
    assert modulus_phi(gauss, rational_ideal(gauss, 2)) == 2


def test_residue_sign_group(gauss, gauss_mod3, sqrt3):
    rs = ResidueSignGroup(gauss_mod3)
    assert rs.order == 8
    assert rs.unit_image.order == 4
    real = ResidueSignGroup(unit_ideal(sqrt3))
    assert real.order == 4
    with pytest.raises(TableCapError):
        ResidueSignGroup(rational_ideal(gauss, 101), table_cap=100)


def test_narrow_class_group_of_sqrt3(sqrt3):
    assert ray_class_order(sqrt3, unit_ideal(sqrt3)) == 2


def test_rational_ray_class_group(rationals):
    # (Z/5)^* x {+-1} modulo <-1>
    assert ray_class_order(rationals, rational_ideal(rationals, 5)) == 4


def test_class_map(gauss, gauss_rcg):
    P5 = primes_above(gauss, 5)[0].hnf
    P13 = primes_above(gauss, 13)[0].hnf
    assert class_of(gauss_rcg, P13) == gauss_rcg.group.zero
    assert class_of(gauss_rcg, P5) == (1,)
    assert class_of(gauss_rcg, primes_above(gauss, 2)[0].hnf) == (1,)
    assert class_of(gauss_rcg, rational_ideal(gauss, 2)) == (0,)
    with pytest.raises(ValidationError):
        class_of(gauss_rcg, rational_ideal(gauss, 3))


def test_ray_principal(gauss, gauss_mod3):
    assert is_ray_principal(gauss, gauss_mod3, primes_above(gauss, 13)[0].hnf)
    assert not is_ray_principal(gauss, gauss_mod3, primes_above(gauss, 5)[0].hnf)
    P5, Q5 = primes_above(gauss, 5)
    assert ray_equivalent(gauss, gauss_mod3, P5.hnf, Q5.hnf)


def test_oracle_matches_exact_order(gauss, gauss_mod3):
    assert ray_class_oracle_count(gauss, gauss_mod3) == 2


@pytest.mark.parametrize('d, m', [(-1, 4), (-1, 5), (-3, 7), (-5, 3), (2, 3), (3, 1), (5, 4)])
def test_build_matches_order(d, m):
    K = FieldSpec(d)
    q = rational_ideal(K, m)
    rcg = build_ray_class_group(K, q)
    assert rcg.group.order == ray_class_order(K, q)
    # every generator prime lands in the group
    assert all(rcg.group.is_element(cc) for cc in rcg.generator_classes())


def test_unsaturated_generators(gauss):
    q = rational_ideal(gauss, 7)
    with pytest.raises(UnsaturatedError) as err:
        build_ray_class_group(gauss, q, gen_norm_bound=2)
    assert err.value.expected == 12
    assert err.value.achieved < 12


def test_conductors(gauss_rcg, gauss, gauss_mod3):
    conductors = {chi.exponents: conductor_of_character(gauss_rcg, chi)
                  for chi in gauss_rcg.characters()}
    assert conductors[(0,)] == unit_ideal(gauss)
    assert conductors[(1,)] == gauss_mod3


def test_quadratic_characters(gauss_rcg):
    quads = quadratic_characters(gauss_rcg)
    assert len(quads) == 1
    chi, ker = quads[0]
    assert ker.order == 1


@pytest.mark.slow
@pytest.mark.parametrize('d', [-1, -2, -3, -5, -7, -11, 2, 3, 5])
def test_oracle_on_test_matrix(d):
    K = FieldSpec(d)
    for m in range(1, 13):
        q = rational_ideal(K, m)
        assert ray_class_oracle_count(K, q) == ray_class_order(K, q)

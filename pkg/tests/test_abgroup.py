import pytest

from rcprod.Constants import InfiniteGroupError, ValidationError
from rcprod.abgroup import (smith_normal_form, FinAbGroup, group_from_relations,
                            subgroup_generated, quotient_group, abelian_groups_of_order,
                            characters, quadratic_characters, check_orthogonality,
                            character_sum_vanishes, sumset, stabilizer, kneser_check,
                            kneser_sweep, triple_cover_predicates, triple_cover_sweep)


def test_smith_normal_form():
    D, U, V = smith_normal_form([[2, 0], [0, 3]])
    assert [D[0][0], D[1][1]] == [1, 6]
    D, _, _ = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [D[ii][ii] for ii in range(3)] == [2, 6, 12]


def test_group_from_relations():
    pres = group_from_relations(2, [[2, 0], [0, 3]])
    assert pres.group.invariant_factors == (6,)
    assert pres.group.element_order(pres.project([1, 1])) == 6
    with pytest.raises(InfiniteGroupError):
        group_from_relations(2, [[1, 0]])


def test_fin_ab_group_validation():
    with pytest.raises(ValidationError):
        FinAbGroup((4, 2))
    with pytest.raises(ValidationError):
        FinAbGroup((1,))
    G = FinAbGroup((2, 4))
    assert G.order == 8
    assert G.add((1, 3), (1, 2)) == (0, 1)
    assert G.element_order((1, 2)) == 2


@pytest.mark.parametrize('order, count', [(1, 1), (4, 2), (8, 3), (12, 2), (16, 5)])
def test_abelian_groups_of_order(order, count):
    groups = abelian_groups_of_order(order)
    assert len(groups) == count
    assert all(G.order == order for G in groups)


def test_subgroup_and_quotient():
    G = FinAbGroup((2, 4))
    H = subgroup_generated(G, [(0, 2)])
    assert H.order == 2
    assert H.index == 4
    Q = quotient_group(H)
    assert Q.group.invariant_factors == (2, 2)


def test_characters():
    G = FinAbGroup((2, 4))
    assert len(list(characters(G))) == 8
    assert check_orthogonality(G) == 8
    assert len(quadratic_characters(G)) == 3
    chi = next(chi for chi in characters(G) if not chi.is_trivial())
    assert character_sum_vanishes(chi)
    assert chi.kernel().index == chi.order


def test_stabilizer_and_sumset():
    G = FinAbGroup((6,))
    S = sumset(G, [(0,), (3,)], [(0,), (3,)])
    assert S == frozenset([(0,), (3,)])
    assert stabilizer(G, S).order == 2


def test_kneser_tight_case():
    rec = kneser_check(FinAbGroup((6,)), [(0,), (3,)])
    assert rec.H.order == 2
    assert rec.lam == 1
    assert rec.sumset_size == rec.bound == 2


def test_kneser_sweep_small():
    res = kneser_sweep(max_order=8)
    assert res['violations'] == 0
    assert res['tight'] > 0


@pytest.mark.slow
def test_kneser_sweep_order_12():
    assert kneser_sweep(max_order=12)['violations'] == 0


def test_triple_cover_predicates():
    G = FinAbGroup((2,))
    rec = triple_cover_predicates(G, [(1,)])
    assert not rec.covered
    assert not rec.pigeonhole_holds
    assert rec.y == 2
    full = triple_cover_predicates(G, [(0,), (1,)])
    assert full.covered
    assert full.pigeonhole_holds


def test_triple_cover_sweep_is_seeded():
    first = triple_cover_sweep(runs=40, max_order=30, seed=7)
    again = triple_cover_sweep(runs=40, max_order=30, seed=7)
    assert first == again
    assert first['violations'] == 0
    assert first['pigeonhole'] <= first['covered']

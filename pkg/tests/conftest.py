import pytest

from rcprod.quadfield import FieldSpec, rational_ideal
from rcprod.rayclass import build_ray_class_group


@pytest.fixture(scope='session')
def gauss():
    """Q(i)."""
    return FieldSpec(-1)


@pytest.fixture(scope='session')
def gauss_mod3(gauss):
    return rational_ideal(gauss, 3)


@pytest.fixture(scope='session')
def gauss_rcg(gauss, gauss_mod3):
    """H_(3)(Q(i)), cyclic of order 2."""
    return build_ray_class_group(gauss, gauss_mod3)


@pytest.fixture(scope='session')
def sqrt3():
    return FieldSpec(3)


@pytest.fixture(scope='session')
def rationals():
    return FieldSpec(None)

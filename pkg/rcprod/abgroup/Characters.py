"""Characters of finite abelian groups.

A character of Z/d1 x ... x Z/dk is an exponent vector e; its value at x is the rational
number sum(e_i*x_i/d_i) mod 1, read as exp(2*pi*i*value).  All comparisons are exact.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import cmath
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from ..Constants import ValidationError
from .Groups import FinAbGroup, Subgroup


@dataclass(frozen=True)
class Character:
    group: FinAbGroup
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, 'exponents', self.group.reduce(self.exponents))

    def value(self, x):
        """Value as an exact rational in [0, 1)."""
        tot = sum(Fraction(ee*xx, dd) for ee, xx, dd in
                  zip(self.exponents, x, self.group.invariant_factors))
        return tot - math.floor(tot)

    def __call__(self, x):
        return cmath.exp(2j*math.pi*float(self.value(x)))

    @property
    def order(self):
        return self.group.element_order(self.exponents)

    def is_trivial(self):
        return not any(self.exponents)

    def kernel(self):
        elems = frozenset(x for x in self.group.elements() if self.value(x) == 0)
        return Subgroup(self.group, tuple(sorted(elems)), elems)

    def to_json(self):
        return list(self.exponents)


def characters(G):
    """Iterate all |G| characters of ``G``."""
    for ee in itertools.product(*(range(dd) for dd in G.invariant_factors)):
        yield Character(G, ee)


def quadratic_characters(G):
    return [chi for chi in characters(G) if chi.order == 2]


def value_histogram(chi):
    """Multiplicity of each value of ``chi`` over the whole group."""
    return Counter(chi.value(x) for x in chi.group.elements())


def character_sum_vanishes(chi):
    """Exact test of sum_x chi(x) == 0.

    The values of a character of order m are the m-th roots of unity, each attained
    |ker chi| times, so the sum vanishes iff m > 1 and the histogram is flat.
    """
    hist = value_histogram(chi)
    if chi.is_trivial():
        return False
    m = chi.order
    if set(hist) != {Fraction(kk, m) for kk in range(m)}:
        return False
    return len(set(hist.values())) == 1


def check_orthogonality(G):
    """Verify exact orthogonality for every character of ``G``.

    Returns the number of characters checked; raises ``ValidationError`` on failure.
    """
    count = 0
    for chi in characters(G):
        count += 1
        hist = value_histogram(chi)
        if chi.is_trivial():
            if hist != Counter({Fraction(0): G.order}):
                raise ValidationError("trivial character of {} is not constant".format(G))
            continue
        if not character_sum_vanishes(chi):
            raise ValidationError("character {} of {} fails orthogonality".format(
                chi.exponents, G))
    if count != G.order:
        raise ValidationError("{} has {} characters, expected {}".format(G, count, G.order))
    return count

"""Exact arithmetic in quadratic fields: elements, ideals, primes, class group and units.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from .Fields import (FieldSpec, AlgebraicNumber, parse_field_spec, kronecker,  # noqa
                     fundamental_unit)
from .Invariants import QuadInvariants, field_invariants  # noqa
from .Ideals import (IdealHNF, unit_ideal, rational_ideal, principal_ideal,  # noqa
                     ideal_product, ideal_power, ideal_sum, ideal_intersection, ideal_lcm_gcd,
                     ideal_conjugate, contains_element, contains_ideal,
                     narrow_principal_generator)
from .Primes import (PrimeIdeal, primes_above, factor_ideal, prime_divisors,  # noqa
                     ideal_from_factors, enumerate_degree_one_primes, enumerate_primes,
                     enumerate_factored, enumerate_ideals, parse_ideal_spec)

"""Narrow ray class groups H_q(K) of quadratic fields (and of Q) with an explicit class map.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from .Residues import ResidueSignGroup, modulus_phi  # noqa
from .RayClass import (RayClassGroup, residue_sign_group, ray_class_order,  # noqa
                       is_ray_principal, build_ray_class_group, class_of,
                       conductor_of_character, ray_equivalent, ray_class_oracle_count,
                       quadratic_characters)

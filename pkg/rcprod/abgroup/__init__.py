"""Finite abelian groups: Smith normal form, characters, subgroups, sumsets and Kneser's theorem.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from .Groups import (smith_normal_form, FinAbGroup, Subgroup, Presentation,  # noqa
                     group_from_relations, subgroup_generated, quotient_group,
                     abelian_groups_of_order)
from .Characters import (Character, characters, quadratic_characters,  # noqa
                         character_sum_vanishes, check_orthogonality)
from .Sumsets import (sumset, stabilizer, sumset_stabilizer, kneser_check,  # noqa
                      kneser_sweep, triple_cover_predicates, triple_cover_sweep)

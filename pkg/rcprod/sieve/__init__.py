"""Selberg sieve over quadratic fields: exact weights, reciprocal identity and explicit bounds.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from .Selberg import (SieveContext, LambdaTable, make_sieve_context, g_sum,  # noqa
                      lambda_table, lambda_of, reciprocal_sum, verify_reciprocal_identity,
                      g_lower_bound_checks, selberg_pointwise_bound)
from .Bounds import (euler_product_bounds, c2_factorization_check,  # noqa
                     lambda_norm_bounds, prime_sum_checks, mellin_kernel_check,
                     classical_prime_checks)
from .Moebius import moebius, MoebiusTruncation, truncated_moebius  # noqa

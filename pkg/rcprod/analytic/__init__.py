"""Smoothing function, Mellin transforms, Hecke partial sums and the explicit constant ledger.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from .Mellin import MellinValue, mellin, mellin_exact, mellin_grid  # noqa
from .Smoothing import SmoothingPoly, w0_polynomial, decay_bound, verify_smoothing_claims  # noqa
from .Ledger import (LedgerEntry, ConstantLedger, constant_ledger, hr1_log_bound,  # noqa
                     hr2_log_bound, fchi_log_bound, ideal_count_main_term,
                     ideal_count_log_error)
from .Hecke import hecke_partial_eval, dedekind_zeta_oracle  # noqa

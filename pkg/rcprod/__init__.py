"""Explicit ray class prime-product experiments for quadratic fields.

Submodules
----------
    quadfield : exact arithmetic in quadratic fields (ideals, primes, class group, units)
    abgroup   : finite abelian groups, characters, sumsets and Kneser's theorem
    rayclass  : narrow ray class groups H_q(K) with an explicit class map
    sieve     : Selberg sieve weights in exact rationals and the attached bounds
    analytic  : smoothing polynomial, Mellin transforms, Hecke series and the constant ledger
    verify    : theorem-level experiments emitting structured reports

"""
from __future__ import absolute_import, division, print_function, unicode_literals

__version__ = '0.3.0'

from . import Constants  # noqa
from . import AuxFuncs   # noqa

"""Auxiliary numerical helpers shared across the submodules.

Functions
---------
-   primes_up_to         - Array of all primes ``<= n`` by an Eratosthenes sieve.
-   smallest_factors     - Smallest-prime-factor table for ``0..n``.
-   factor_small         - Factor ``m <= n`` from a smallest-prime-factor table.
-   log_sum              - ``log(exp(a) + exp(b) + ...)`` without overflow.
-   round_sig            - Round a float to a fixed number of significant digits.
-   round_floats         - Recursively apply ``round_sig`` inside nested containers.
-   is_squarefree_int    - Squarefree test for a nonzero integer.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import math
from fractions import Fraction

import numpy as np
from sympy import factorint

from .Constants import FLOAT_DIGITS


def primes_up_to(n):
    """Return all primes ``p <= n`` as an ``int64`` array."""
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p*p::p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def smallest_factors(n):
    """Smallest-prime-factor table ``spf`` with ``spf[m]`` the least prime dividing ``m``.

    Entries ``0`` and ``1`` are set to zero.
    """
    spf = np.zeros(max(n, 1) + 1, dtype=np.int64)
    for p in primes_up_to(math.isqrt(n) if n >= 4 else 1):
        p = int(p)
        block = spf[p*p::p]
        block[block == 0] = p
    rest = np.arange(spf.size, dtype=np.int64)
    unset = (spf == 0)
    spf[unset] = rest[unset]
    spf[:2] = 0
    return spf


def factor_small(m, spf):
    """Factor ``m`` using the table from ``smallest_factors``; returns ``{p: e}``."""
    fac = {}
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        fac[p] = e
    return fac


def log_sum(*logs):
    """Natural log of a sum of positive terms given by their logs."""
    return float(np.logaddexp.reduce(np.asarray(logs, dtype=np.float64)))


def round_sig(val, digits=FLOAT_DIGITS):
    """Round ``val`` to ``digits`` significant digits (non-finite values pass through)."""
    if val == 0 or not math.isfinite(val):
        return float(val)
    return float("{:.{}g}".format(val, digits))


def round_floats(obj, digits=FLOAT_DIGITS):
    """Return a copy of ``obj`` with every float rounded by ``round_sig``.

    Fractions are converted to floats; dict keys are kept, tuples become lists.
    """
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (float, np.floating)):
        return round_sig(float(obj), digits)
    if isinstance(obj, Fraction):
        return round_sig(float(obj), digits)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, complex):
        return [round_sig(obj.real, digits), round_sig(obj.imag, digits)]
    if isinstance(obj, dict):
        return {kk: round_floats(vv, digits) for kk, vv in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(vv, digits) for vv in obj]
    return obj


def is_squarefree_int(d):
    if d == 0:
        return False
    return all(ee == 1 for ee in factorint(abs(d)).values())

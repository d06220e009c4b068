"""Partial evaluation of Hecke L-series of ray class characters at real s >= 3/2.

F(s, chi) is the Euler product over the degree-one primes only and J(s, chi) the product of
(1 - chi(P) N(P)^{-s}) over the remaining primes, so that F = L_q J.  At a truncation X the
Dirichlet form of this identity is exact,

    sum_{N a <= X} f_a N(a)^{-s} = sum_{N b <= X} j_b N(b)^{-s} L_{X/N b}(s, chi),

while the truncated Euler products only agree with L_X J_X up to O(X^{1-s}).
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math

import numpy as np
from scipy import special
from sympy import factorint

from ..Constants import ValidationError
from ..quadfield import field_invariants, enumerate_factored, enumerate_primes, kronecker

log = logging.getLogger(__name__)

MIN_S = 1.5


def _chi_on_primes(rcg, chi, primes):
    return {P: complex(chi(rcg.class_of_factors(((P, 1),)))) for P in primes}


def hecke_partial_eval(rcg, chi, s, X):
    """Truncated L_q(s, chi), F(s, chi), J(s, chi) and the two factorization residuals.

    Returns a dict with ``L``, ``F``, ``J`` (truncated Euler products for F and J, Dirichlet
    sum for L), ``residual`` (Dirichlet-coefficient identity), ``euler_gap`` = |F - L J|
    and ``tail_estimate`` ~ alpha_K s/(s - 1) X^{1-s} for the neglected part of L.
    """
    s = float(s)
    if s < MIN_S:
        raise ValidationError("Hecke series are evaluated for real s >= {}, got {}".format(
            MIN_S, s))
    X = int(X)
    if X < 1:
        raise ValidationError("truncation must be >= 1, got {}".format(X))
    spec, q = rcg.field, rcg.modulus
    primes = enumerate_primes(spec, X, q)
    chip = _chi_on_primes(rcg, chi, primes)

    coeffs = np.zeros(X + 1, dtype=np.complex128)
    f_coeffs = np.zeros(X + 1, dtype=np.complex128)
    for nrm, factors in enumerate_factored(spec, X, q):
        val = complex(1.0)
        for P, ee in factors:
            val *= chip[P]**ee
        coeffs[nrm] += val
        if all(P.residue_degree == 1 for P, _ in factors):
            f_coeffs[nrm] += val

    weights = np.zeros(X + 1)
    weights[1:] = np.arange(1, X + 1, dtype=np.float64)**(-s)
    cum = np.cumsum(coeffs*weights)
    L = complex(cum[X])
    f_sum = complex(np.sum(f_coeffs*weights))

    degree_one = [P for P in primes if P.residue_degree == 1]
    others = [P for P in primes if P.residue_degree != 1]
    # squarefree products b of the non-degree-one primes, with j_b = prod(-chi(P))
    conv = 0j

    def walk(start, nrm, jb):
        nonlocal conv
        conv += jb*nrm**(-s)*cum[X//nrm]
        for ii in range(start, len(others)):
            nn = nrm*others[ii].norm
            if nn > X:
                break
            walk(ii + 1, nn, -jb*chip[others[ii]])

    walk(0, 1, complex(1.0))

    F = complex(np.prod([1.0/(1.0 - chip[P]*P.norm**(-s)) for P in degree_one]))
    J = complex(np.prod([1.0 - chip[P]*P.norm**(-s) for P in others]))
    alpha = field_invariants(spec).alpha
    rec = {'s': s, 'X': X, 'character': list(chi.exponents), 'L': L, 'F': F, 'J': J,
           'residual': abs(f_sum - conv), 'euler_gap': abs(F - L*J),
           'tail_estimate': alpha*s/(s - 1.0)*X**(1.0 - s)}
    log.debug(" - Hecke sums for {} at s = {}, X = {}: residual {:.3e}, gap {:.3e}".format(
        rcg, s, X, rec['residual'], rec['euler_gap']))
    return rec


def _kronecker_int(D, a):
    val = 1
    for p, ee in factorint(a).items():
        val *= kronecker(D, p)**ee
    return val


def dedekind_zeta_oracle(spec, s):
    """zeta_K(s) = zeta(s) L(s, chi_D) with L(s, chi_D) = |D|^{-s} sum_a chi_D(a) zeta(s, a/|D|)."""
    s = float(s)
    if s <= 1:
        raise ValidationError("the zeta oracle needs s > 1, got {}".format(s))
    zeta = float(special.zeta(s))
    if spec.is_rational:
        return zeta
    D = spec.disc
    m = abs(D)
    lval = sum(_kronecker_int(D, a)*float(special.zeta(s, a/m)) for a in range(1, m + 1)
               if math.gcd(a, m) == 1)
    return zeta*lval/m**s

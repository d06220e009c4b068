"""Prime ideals, factorization and enumeration of ideals.

Classes
-------
    PrimeIdeal : prime ideal above a rational prime, tagged split/inert/ramified.

Functions
---------
-   primes_above                - Prime ideals over a rational prime ``p``.
-   factor_ideal                - Factorization by factoring the norm and valuation tests.
-   prime_divisors              - Prime ideals dividing an ideal.
-   ideal_from_factors          - Multiply out a factorization.
-   enumerate_degree_one_primes - Degree-one primes coprime to a modulus, sorted by norm.
-   enumerate_primes            - All primes coprime to a modulus, sorted by norm.
-   enumerate_factored          - (norm, factorization) of every ideal of norm <= X.
-   enumerate_ideals            - Every ideal coprime to a modulus of norm <= X.
-   parse_ideal_spec            - Parse ``(<m>)``, ``hnf:<s>,<a>,<b>`` or ``above:<p>:<k>``.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import functools
import itertools
import logging
import re
from dataclasses import dataclass

from sympy import factorint, isprime
from sympy.ntheory.residue_ntheory import sqrt_mod

from ..AuxFuncs import primes_up_to, smallest_factors, factor_small
from ..Constants import ValidationError, FactoringCapError, RCProdError, FACTOR_CAP
from .Fields import kronecker
from .Ideals import (IdealHNF, unit_ideal, rational_ideal, ideal_product, ideal_power,
                     contains_ideal)

log = logging.getLogger(__name__)

SPLIT = 'split'
INERT = 'inert'
RAMIFIED = 'ramified'
RATIONAL = 'rational'

_IDEAL_SPEC_REGEX = {
    'principal': re.compile(r"^\s*\(\s*([+-]?\d+)\s*\)\s*$"),
    'hnf': re.compile(r"^\s*hnf\s*:\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*$"),
    'above': re.compile(r"^\s*above\s*:\s*(\d+)\s*:\s*([01])\s*$"),
}


@dataclass(frozen=True)
class PrimeIdeal:
    p: int
    kind: str
    conj: bool
    hnf: IdealHNF
    residue_degree: int

    @property
    def norm(self):
        return self.p**self.residue_degree

    @property
    def field(self):
        return self.hnf.field

    @property
    def unramified(self):
        return self.kind != RAMIFIED

    def sort_key(self):
        return (self.norm, self.p, self.conj)

    def conjugate(self):
        if self.kind != SPLIT:
            return self
        return primes_above(self.field, self.p)[0 if self.conj else 1]

    def __str__(self):
        return "P({}{}{})".format(self.p, "'" if self.conj else "",
                                  "" if self.kind in (SPLIT, RATIONAL) else "," + self.kind)

    def to_json(self):
        return {'p': self.p, 'kind': self.kind, 'conj': self.conj, 'hnf': str(self.hnf),
                'norm': self.norm}


def _roots_mod_p(field, p):
    t, nn = field.trace_omega, field.norm_omega
    if p == 2:
        return sorted(x for x in range(2) if (x*x - t*x + nn) % 2 == 0)
    D = field.disc % p
    rt = sqrt_mod(D, p)
    if rt is None:
        return []
    inv2 = (p + 1)//2
    return sorted({((t + rt)*inv2) % p, ((t - rt)*inv2) % p})


@functools.lru_cache(maxsize=None)
def primes_above(field, p):
    """Prime ideals above the rational prime ``p``, with canonical HNFs."""
    if not isprime(p):
        raise ValidationError("{} is not a prime".format(p))
    if field.is_rational:
        return (PrimeIdeal(p, RATIONAL, False, rational_ideal(field, p), 1),)

    kron = kronecker(field.disc, p)
    roots = _roots_mod_p(field, p)
    if len(roots) != 1 + kron:
        err_str = "Kronecker symbol {} and {} roots disagree at p = {} in {}".format(
            kron, len(roots), p, field)
        raise RCProdError(err_str)

    if kron == -1:
        return (PrimeIdeal(p, INERT, False, rational_ideal(field, p), 2),)
    # (p, w - r) has HNF a = p, b = -r mod p
    hnfs = sorted(IdealHNF(field, 1, p, (-r) % p) for r in roots)
    if kron == 0:
        return (PrimeIdeal(p, RAMIFIED, False, hnfs[0], 1),)
    return tuple(PrimeIdeal(p, SPLIT, bool(ii), hh, 1) for ii, hh in enumerate(hnfs))


def _check_cap(norm, cap):
    if norm > cap:
        err_str = "norm {} exceeds the factoring cap {}".format(norm, cap)
        raise FactoringCapError(err_str)


def factor_ideal(x, cap=FACTOR_CAP):
    """Factor ``x`` into prime ideals.

    Returns
    -------
    list of (`PrimeIdeal`, int), sorted by (norm, p, conj); empty for the unit ideal.

    """
    norm = x.norm
    _check_cap(norm, cap)
    factors = []
    for p, ep in sorted(factorint(norm).items()):
        above = primes_above(x.field, p)
        if len(above) == 1:
            P = above[0]
            factors.append((P, ep//P.residue_degree))
            continue
        P, Q = above
        vv = 0
        power = P.hnf
        while vv < ep and contains_ideal(power, x):
            vv += 1
            power = ideal_product(power, P.hnf)
        if vv:
            factors.append((P, vv))
        if ep - vv:
            factors.append((Q, ep - vv))
    factors.sort(key=lambda fe: fe[0].sort_key())
    return factors


def prime_divisors(x, cap=FACTOR_CAP):
    return [P for P, _ in factor_ideal(x, cap=cap)]


def ideal_from_factors(field, factors):
    res = unit_ideal(field)
    for P, ee in factors:
        res = ideal_product(res, ideal_power(P.hnf, ee))
    return res


def enumerate_degree_one_primes(field, X, q=None, include_ramified=False):
    """Primes of residue degree one and norm <= X coprime to ``q``, sorted by norm.

    Ramified primes are returned only with ``include_ramified``.
    """
    if X < 2:
        return []
    bad = set(prime_divisors(q)) if q is not None else set()
    res = []
    for p in primes_up_to(int(X)):
        for P in primes_above(field, int(p)):
            if P.residue_degree != 1 or P in bad:
                continue
            if P.kind == RAMIFIED and not include_ramified:
                continue
            res.append(P)
    res.sort(key=PrimeIdeal.sort_key)
    return res


def enumerate_primes(field, X, q=None):
    """Every prime ideal coprime to ``q`` with norm <= X, sorted by norm."""
    bad = set(prime_divisors(q)) if q is not None else set()
    res = [P for p in primes_up_to(int(X)) for P in primes_above(field, int(p))
           if P.norm <= X and P not in bad]
    res.sort(key=PrimeIdeal.sort_key)
    return res


def _prime_power_options(field, p, k, bad):
    """All factorizations of the ideals of norm p**k avoiding primes in ``bad``."""
    above = [P for P in primes_above(field, p)]
    if len(above) == 2:
        P, Q = above
        opts = []
        for ii in range(k + 1):
            fac = []
            if ii:
                if P in bad:
                    continue
                fac.append((P, ii))
            if k - ii:
                if Q in bad:
                    continue
                fac.append((Q, k - ii))
            opts.append(tuple(fac))
        return opts
    P = above[0]
    if P in bad or k % P.residue_degree:
        return []
    return [((P, k//P.residue_degree),)]


def enumerate_factored(field, X, q=None):
    """Yield ``(norm, factorization)`` for every ideal coprime to ``q`` with norm <= X.

    Ideals come in increasing order of norm; factorizations are tuples of
    (`PrimeIdeal`, exponent) built from the factorization of each norm value.
    """
    X = int(X)
    if X < 1:
        return
    bad = frozenset(prime_divisors(q)) if q is not None else frozenset()
    spf = smallest_factors(X)
    options = {}
    yield 1, ()
    for m in range(2, X + 1):
        fac = factor_small(m, spf)
        per_prime = []
        for p, k in sorted(fac.items()):
            key = (p, k)
            if key not in options:
                options[key] = _prime_power_options(field, p, k, bad)
            per_prime.append(options[key])
            if not options[key]:
                break
        else:
            for combo in itertools.product(*per_prime):
                yield m, tuple(itertools.chain.from_iterable(combo))


def enumerate_ideals(field, X, q=None):
    """Yield every integral ideal coprime to ``q`` with norm <= X, each exactly once."""
    cache = {}

    def _power(P, ee):
        key = (P, ee)
        if key not in cache:
            cache[key] = ideal_power(P.hnf, ee)
        return cache[key]

    for _, factors in enumerate_factored(field, X, q):
        res = unit_ideal(field)
        for P, ee in factors:
            res = ideal_product(res, _power(P, ee))
        yield res


def parse_ideal_spec(field, text):
    """Parse an ideal spec string into an ``IdealHNF`` of ``field``."""
    match = _IDEAL_SPEC_REGEX['principal'].match(text)
    if match:
        return rational_ideal(field, int(match.group(1)))
    match = _IDEAL_SPEC_REGEX['hnf'].match(text)
    if match:
        s, a, b = (int(gg) for gg in match.groups())
        if field.is_rational and (a, b) == (1, 0):
            return rational_ideal(field, s)
        return IdealHNF(field, s, a, b)
    match = _IDEAL_SPEC_REGEX['above'].match(text)
    if match:
        p, idx = int(match.group(1)), int(match.group(2))
        above = primes_above(field, p)
        if idx >= len(above):
            raise ValidationError("'{}': only {} prime(s) above {} in {}".format(
                text, len(above), p, field))
        return above[idx].hnf
    raise ValidationError("invalid ideal spec '{}'".format(text))

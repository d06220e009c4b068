"""Selberg sieve weights over a quadratic field, in exact rational arithmetic.

For a modulus q and a level z, V(z) is the product of the primes of norm <= z coprime to q.
Squarefree divisors e of V(z) are represented by the frozenset of their prime factors, so
that norms, phi-values and lcm's only need the prime norms.

Classes
-------
    SieveContext : field, modulus, level and the sieving primes.
    LambdaTable  : weights lambda_e(q) for N(e) <= z, and G_q(z).

Functions
---------
-   make_sieve_context          - Build a ``SieveContext``.
-   g_sum                       - G_{eq}(z) by enumeration of squarefree ideals.
-   lambda_table                - All nonzero weights, with |lambda| <= 1 asserted.
-   lambda_of                   - Weight of an arbitrary ideal.
-   reciprocal_sum              - sum lambda_e1 lambda_e2 / N[e1, e2].
-   verify_reciprocal_identity  - reciprocal_sum == 1/G_q(z), exactly.
-   g_lower_bound_checks        - Lower bounds for G_q(z).
-   selberg_pointwise_bound     - Prime count of a ray class against the sieve majorant.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from ..Constants import ValidationError, TheoremViolation
from ..quadfield import (IdealHNF, field_invariants, enumerate_primes, enumerate_factored,
                         factor_ideal)
from ..rayclass import modulus_phi

log = logging.getLogger(__name__)


def _as_level(z):
    z = Fraction(z)
    if z < 1:
        raise ValidationError("sieve level z must be >= 1, got {}".format(z))
    return z


@dataclass(frozen=True)
class SieveContext:
    field: object
    modulus: IdealHNF
    z: Fraction
    primes: tuple = field(repr=False)

    @property
    def n(self):
        return self.field.degree

    def support(self):
        """Squarefree divisors of V(z) of norm <= z, as (frozenset, norm, phi)."""
        norms = [P.norm for P in self.primes]
        out = []

        def walk(start, chosen, nrm, phi):
            out.append((frozenset(chosen), nrm, phi))
            for ii in range(start, len(norms)):
                nn = nrm*norms[ii]
                if nn > self.z:
                    break
                chosen.append(self.primes[ii])
                walk(ii + 1, chosen, nn, phi*(norms[ii] - 1))
                chosen.pop()

        walk(0, [], 1, 1)
        return out

    def to_json(self):
        return {'field': self.field.label, 'modulus': str(self.modulus), 'z': self.z,
                'num_primes': len(self.primes)}


def make_sieve_context(spec, q, z):
    if q.field != spec:
        raise ValidationError("modulus {} does not belong to {}".format(q, spec))
    z = _as_level(z)
    primes = tuple(enumerate_primes(spec, math.floor(z), q))
    return SieveContext(spec, q, z, primes)


def _g_from_norms(norms, bound):
    """sum over squarefree products of ``norms`` (sorted) <= bound of 1/prod(N - 1)."""
    total = Fraction(0)

    def walk(start, nrm, phi):
        nonlocal total
        total += Fraction(1, phi)
        for ii in range(start, len(norms)):
            nn = nrm*norms[ii]
            if nn > bound:
                break
            walk(ii + 1, nn, phi*(norms[ii] - 1))

    walk(0, 1, 1)
    return total


def _g_excluding(ctx, excluded, bound):
    norms = [P.norm for P in ctx.primes if P not in excluded]
    return _g_from_norms(norms, bound)


def g_sum(spec, e, q, z):
    """G_{eq}(z): sum of mu^2(a)/phi(a) over N(a) <= z with (a, e*q) = 1."""
    z = _as_level(z)
    excluded = set(P for P, _ in factor_ideal(e))
    ctx = make_sieve_context(spec, q, z)
    return _g_excluding(ctx, excluded, z)


@dataclass(frozen=True)
class LambdaTable:
    ctx: SieveContext
    G: Fraction
    weights: dict = field(repr=False)
    norms: dict = field(repr=False)

    def __getitem__(self, key):
        return self.weights.get(frozenset(key), Fraction(0))

    def items(self):
        return sorted(self.weights.items(),
                      key=lambda kv: (self.norms[kv[0]], sorted(P.sort_key() for P in kv[0])))

    def to_json(self):
        return {'G': self.G, 'weights': [
            {'primes': [str(P) for P in sorted(key, key=lambda P: P.sort_key())],
             'norm': self.norms[key], 'lambda': str(val)} for key, val in self.items()]}


def lambda_table(ctx):
    """lambda_e = mu(e) N(e) G_{eq}(z/N(e)) / (phi(e) G_q(z)) for e | V(z), N(e) <= z."""
    G = _g_excluding(ctx, (), ctx.z)
    weights = {}
    norms = {}
    for key, nrm, phi in ctx.support():
        sign = -1 if len(key) % 2 else 1
        val = sign*Fraction(nrm, phi)*_g_excluding(ctx, key, ctx.z/nrm)/G
        if abs(val) > 1:
            err_str = "|lambda| = {} > 1 for e of norm {} in {}".format(val, nrm, ctx)
            raise TheoremViolation(err_str)
        weights[key] = val
        norms[key] = nrm
    if weights[frozenset()] != 1:
        raise TheoremViolation("lambda of the unit ideal is {}".format(weights[frozenset()]))
    log.debug(" - Lambda table over {} with {} weights, G = {}".format(
        ctx.field, len(weights), G))
    return LambdaTable(ctx, G, weights, norms)


def lambda_of(table, e):
    """Weight of an ideal; zero unless e is squarefree, coprime to q and N(e) <= z."""
    ctx = table.ctx
    if e.norm > ctx.z:
        return Fraction(0)
    factors = factor_ideal(e)
    bad = set(P for P, _ in factor_ideal(ctx.modulus))
    if any(ee > 1 or P in bad for P, ee in factors):
        return Fraction(0)
    return table[frozenset(P for P, _ in factors)]


def reciprocal_sum(table):
    items = [(key, val) for key, val in table.weights.items() if val]
    total = Fraction(0)
    for k1, v1 in items:
        for k2, v2 in items:
            lcm = 1
            for P in k1 | k2:
                lcm *= P.norm
            total += v1*v2/lcm
    return total


def verify_reciprocal_identity(ctx, table=None):
    table = lambda_table(ctx) if table is None else table
    return reciprocal_sum(table) == 1/table.G


def _ideal_norm_counts(spec, X, q=None):
    counts = defaultdict(int)
    for nrm, _ in enumerate_factored(spec, X, q):
        counts[nrm] += 1
    return counts


def g_lower_bound_checks(ctx, table=None):
    """Lower bounds for G_q(z).

    The two always-testable bounds G_q(z) >= (phi(q)/N(q)) * sum_{N a <= z} 1/N(a) and
    G_q(z) >= (phi(q)/N(q)) * G(z) are compared exactly; the asymptotic lower bound is
    recorded together with its (log-space) hypothesis on z.
    """
    spec, q, z = ctx.field, ctx.modulus, ctx.z
    Gq = _g_excluding(ctx, (), z) if table is None else table.G
    ratio = Fraction(modulus_phi(spec, q), q.norm)
    counts = _ideal_norm_counts(spec, math.floor(z))
    harmonic = sum((Fraction(cc, nrm) for nrm, cc in counts.items()), Fraction(0))
    G_full = _g_from_norms([P.norm for P in enumerate_primes(spec, math.floor(z))], z)
    hs_ok = Gq >= ratio*harmonic
    vlr_ok = Gq >= ratio*G_full
    if not (hs_ok and vlr_ok):
        err_str = "G_q(z) = {} below a lower bound ({}, {})".format(
            Gq, ratio*harmonic, ratio*G_full)
        raise TheoremViolation(err_str)

    inv = field_invariants(spec)
    n, absd = ctx.n, abs(inv.disc)
    log_z = math.log(z)
    log_threshold = 4*n*math.log(1e6*n) + 3*math.log(absd)
    asym = inv.alpha*float(ratio)*(log_z - 2 - math.log(n) - 0.5*math.log(absd))
    met = log_z >= log_threshold
    if not met:
        log.debug(" - G_q(z) asymptotic bound: hypothesis not met (log z = {:.3f} < {:.3f})"
                  .format(log_z, log_threshold))
    return {'G_q': Gq, 'phi_ratio': ratio, 'harmonic_sum': harmonic,
            'halberstam_schaal_rhs': ratio*harmonic, 'halberstam_schaal_ok': hs_ok,
            'G_full': G_full, 'van_lint_richert_rhs': ratio*G_full,
            'van_lint_richert_ok': vlr_ok, 'log_threshold': log_threshold,
            'hypothesis_met': met, 'asymptotic_rhs': asym,
            'asymptotic_ok': (float(Gq) >= asym) if met else None}


def selberg_pointwise_bound(rcg, target, X, z, table=None):
    """Compare T1 = #{P in ``target``, N(P) <= X} with the sieve majorant.

    The majorant is n*z + sum over ideals a of ``target`` with N(a) <= X of
    (sum_{e | (a, V(z))} lambda_e)^2; it is also evaluated in the lcm-grouped form
    sum_{e1, e2} lambda_e1 lambda_e2 #{a in target : [e1, e2] | a}, and the two must agree.
    """
    spec, q = rcg.field, rcg.modulus
    X = int(X)
    z = _as_level(z)
    if X < z:
        raise ValidationError("need X >= z, got X = {}, z = {}".format(X, z))
    if table is None:
        table = lambda_table(make_sieve_context(spec, q, z))
    sieving = set(table.ctx.primes)
    weights = {key: val for key, val in table.weights.items() if val}
    lcms = defaultdict(Fraction)
    for k1, v1 in weights.items():
        for k2, v2 in weights.items():
            lcms[k1 | k2] += v1*v2

    T1 = 0
    squares = Fraction(0)
    multiples = defaultdict(int)
    for _, factors in enumerate_factored(spec, X, q):
        if rcg.class_of_factors(factors) != tuple(target):
            continue
        if len(factors) == 1 and factors[0][1] == 1:
            T1 += 1
        local = frozenset(P for P, _ in factors if P in sieving)
        inner = sum((val for key, val in weights.items() if key <= local), Fraction(0))
        squares += inner*inner
        for key in lcms:
            if key <= local:
                multiples[key] += 1

    pair_sum = sum((val*multiples[key] for key, val in lcms.items()), Fraction(0))
    if pair_sum != squares:
        raise TheoremViolation("pointwise majorant forms disagree: {} != {}".format(
            squares, pair_sum))

    n = spec.degree
    rhs = n*z + squares
    if T1 > rhs:
        err_str = "prime count {} exceeds the sieve majorant {} for class {} of {}".format(
            T1, rhs, list(target), rcg)
        raise TheoremViolation(err_str)
    return {'class': list(target), 'X': X, 'z': z, 'T1': T1, 'rhs': rhs,
            'sieve_sum': squares, 'holds': True}


"""Sumsets, stabilizers and Kneser's theorem in finite abelian groups.

Products A*B of ideal classes are written additively here: A + B = {a + b}.

Classes
-------
    KneserRecord      : outcome of a Kneser bound check.
    TripleCoverRecord : covering predicates for A + A + A.

Functions
---------
-   sumset                  - {a + b : a in A, b in B}.
-   stabilizer              - {g : g + S = S}, tested directly over the group.
-   cosets_meeting          - Number of cosets of H that meet a set.
-   sumset_stabilizer       - (A + B, stabilizer, cosets of the stabilizer meeting B).
-   kneser_check            - |B + B| >= (2*lambda - 1)*|H|.
-   kneser_sweep            - Exhaustive Kneser check over all small abelian groups.
-   triple_cover_predicates - Covering predicates used to show A + A + A = G.
-   triple_cover_sweep      - Seeded random sweep of ``triple_cover_predicates``.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..Constants import ValidationError, TheoremViolation, SEED
from .Groups import Subgroup, abelian_groups_of_order

log = logging.getLogger(__name__)


def _as_set(G, elems):
    res = frozenset(G.reduce(x) for x in elems)
    if not res:
        raise ValidationError("empty subset of {}".format(G))
    return res


def _sorted(elems):
    return [list(x) for x in sorted(elems)]


def sumset(G, A, B):
    return frozenset(G.add(aa, bb) for aa in A for bb in B)


def stabilizer(G, S):
    S = frozenset(S)
    s0 = next(iter(S))
    elems = []
    for gg in G.elements():
        if G.add(gg, s0) not in S:
            continue
        if all(G.add(gg, ss) in S for ss in S):
            elems.append(gg)
    return Subgroup(G, tuple(sorted(elems)), frozenset(elems))


def cosets_meeting(H, B):
    return len({H.coset_key(bb) for bb in B})


def sumset_stabilizer(G, A, B):
    """Return (A + B, H, lam) with H the stabilizer of A + B and lam = #cosets meeting B."""
    A = _as_set(G, A)
    B = _as_set(G, B)
    S = sumset(G, A, B)
    H = stabilizer(G, S)
    return S, H, cosets_meeting(H, B)


@dataclass(frozen=True)
class KneserRecord:
    H: Subgroup
    lam: int
    bound: int
    sumset_size: int
    ok: bool

    def to_json(self):
        return {'H_order': self.H.order, 'lambda': self.lam, 'bound': self.bound,
                'sumset_size': self.sumset_size, 'ok': self.ok}


def kneser_check(G, B):
    S, H, lam = sumset_stabilizer(G, B, B)
    bound = (2*lam - 1)*H.order
    return KneserRecord(H, lam, bound, len(S), len(S) >= bound)


def kneser_sweep(max_order=12):
    """Kneser check on every nonempty subset of every abelian group of order <= max_order.

    Raises ``TheoremViolation`` on the first failure.
    """
    groups = 0
    subsets = 0
    tight = 0
    for order in range(1, max_order + 1):
        for G in abelian_groups_of_order(order):
            groups += 1
            elems = list(G.elements())
            for mask in range(1, 2**len(elems)):
                B = [ee for ii, ee in enumerate(elems) if mask >> ii & 1]
                rec = kneser_check(G, B)
                subsets += 1
                if not rec.ok:
                    err_str = "Kneser bound fails in {} for B = {}: |B+B| = {} < {}".format(
                        G, _sorted(B), rec.sumset_size, rec.bound)
                    raise TheoremViolation(err_str)
                tight += (rec.sumset_size == rec.bound)
    log.info(" - Kneser sweep: {} groups, {} subsets, {} tight".format(groups, subsets, tight))
    return {'max_order': max_order, 'groups': groups, 'subsets': subsets, 'tight': tight,
            'violations': 0}


@dataclass(frozen=True)
class TripleCoverRecord:
    A: frozenset
    AA: frozenset
    AAA: frozenset
    H: Subgroup
    lam: int
    lam_lower: int
    y: int
    pigeonhole_holds: bool
    density_holds: bool
    covered: bool

    def to_json(self):
        return {'A': _sorted(self.A), 'AA_size': len(self.AA), 'AAA_size': len(self.AAA),
                'H_order': self.H.order, 'lambda': self.lam, 'lambda_lower': self.lam_lower,
                'y': self.y, 'pigeonhole_holds': self.pigeonhole_holds,
                'density_holds': self.density_holds,
                'covered': self.covered}


def triple_cover_predicates(G, A):
    """Covering predicates for A + A + A.

    With H the stabilizer of A + A, y = [G : H] and lam the number of H-cosets meeting A,
    Kneser gives |A + A| >= (2*lam - 1)*|G|/y, so |A|/|G| + (2*lam - 1)/y > 1 forces
    A + A + A = G by pigeonhole.  Also lam >= ceil(|A|/|H|).

    Raises
    ------
    TheoremViolation
        If the first predicate holds but A + A + A != G.

    """
    AA, H, lam = sumset_stabilizer(G, A, A)
    A = _as_set(G, A)
    AAA = sumset(G, AA, A)
    y = H.index
    size = Fraction(len(A), G.order)
    pigeonhole = size + Fraction(2*lam - 1, y) > 1
    density = 3*size - Fraction(1, y) > 1
    covered = len(AAA) == G.order
    lam_lower = -(-len(A)//H.order)
    if lam < lam_lower:
        raise TheoremViolation("lambda = {} below ceil(|A|/|H|) = {} in {}".format(
            lam, lam_lower, G))
    if pigeonhole and not covered:
        err_str = "covering predicate holds but A+A+A != G in {} for A = {}".format(
            G, _sorted(A))
        raise TheoremViolation(err_str)
    return TripleCoverRecord(A, AA, AAA, H, lam, lam_lower, y, pigeonhole, density,
                             covered)


def _random_group(rng, max_order):
    order = int(rng.randint(1, max_order + 1))
    groups = abelian_groups_of_order(order)
    return groups[int(rng.randint(len(groups)))]


def triple_cover_sweep(runs=200, max_order=100, seed=SEED):
    """Random groups of order <= max_order with random nonempty A."""
    rng = np.random.RandomState(seed)
    counts = {'runs': runs, 'pigeonhole': 0, 'density': 0, 'covered': 0,
              'pigeonhole_covered': 0}
    for _ in range(runs):
        G = _random_group(rng, max_order)
        elems = list(G.elements())
        dens = rng.uniform(0.05, 0.95)
        pick = rng.uniform(size=len(elems)) < dens
        if not pick.any():
            pick[int(rng.randint(len(elems)))] = True
        A = [ee for ee, keep in zip(elems, pick) if keep]
        rec = triple_cover_predicates(G, A)
        counts['pigeonhole'] += rec.pigeonhole_holds
        counts['density'] += rec.density_holds
        counts['covered'] += rec.covered
        counts['pigeonhole_covered'] += (rec.pigeonhole_holds and rec.covered)
    counts['violations'] = counts['pigeonhole'] - counts['pigeonhole_covered']
    log.info(" - Triple cover sweep: {}".format(counts))
    return counts

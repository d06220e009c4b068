"""Residue-sign groups (O/q)^* x {+-1}^{r1} with exhaustive discrete logarithms.

Residues modulo q are kept as canonical integer pairs (u, v) meaning u + v*w with
0 <= u < A, 0 <= v < C for the HNF lattice (A, 0), (B, C) of q.

Classes
-------
    ResidueSignGroup : structure, discrete logs, unit image and its quotient.

Functions
---------
-   modulus_phi      - phi(q) = N(q) * prod_{P | q} (1 - 1/N(P)).

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging

from ..Constants import (ValidationError, RCProdError, TableCapError, DLOG_TABLE_CAP,
                         FACTOR_CAP)
from ..abgroup import group_from_relations, subgroup_generated, quotient_group
from ..quadfield import factor_ideal, field_invariants

log = logging.getLogger(__name__)


def modulus_phi(spec, q, cap=FACTOR_CAP):
    """Exact phi(q) from the prime factorization of ``q``."""
    if q.field != spec:
        raise ValidationError("modulus {} does not belong to {}".format(q, spec))
    phi = 1
    for P, ee in factor_ideal(q, cap=cap):
        phi *= P.norm**(ee - 1)*(P.norm - 1)
    return phi


def _in_lattice(lat, key):
    A, B, C = lat
    u, v = key
    return v % C == 0 and (u - (v//C)*B) % A == 0


class ResidueSignGroup(object):
    """The group (O/q)^* x {+-1}^{r1} for the modulus q times all real places.

    Attributes
    ----------
    group : `FinAbGroup`
    phi : int
    unit_image : `Subgroup`
        Generated by the images of -1, the torsion generator and the fundamental unit.
    quotient : `Presentation`
        The group modulo ``unit_image``.

    """

    def __init__(self, q, table_cap=DLOG_TABLE_CAP):
        field = q.field
        self.field = field
        self.modulus = q
        self.phi = modulus_phi(field, q)
        if self.phi > table_cap:
            err_str = "phi({}) = {} exceeds the discrete-log table cap {}".format(
                q, self.phi, table_cap)
            raise TableCapError(err_str)
        self.r1 = field.degree if field.is_real else 0
        self._lat = q.lattice
        self._t, self._nn = field.trace_omega, field.norm_omega
        self._prime_lats = [P.hnf.lattice for P, _ in factor_ideal(q)]
        self._one = self._reduce(1, 0)

        self._build_table()
        self.unit_image = subgroup_generated(self.group, [self.dlog(uu) for uu in
                                                          self._unit_generators()])
        self.quotient = quotient_group(self.unit_image)
        log.debug(" - Residue-sign group mod {}: {} (unit image order {})".format(
            q, self.group, self.unit_image.order))

    def _reduce(self, x, y):
        A, B, C = self._lat
        k, v = divmod(y, C)
        return (x - k*B) % A, v

    def _mul(self, r, s):
        a, b = r
        c, e = s
        return self._reduce(a*c - self._nn*b*e, a*e + b*c + self._t*b*e)

    def _is_unit(self, key):
        return not any(_in_lattice(lat, key) for lat in self._prime_lats)

    def _unit_residues(self):
        A, _, C = self._lat
        for v in range(C):
            for u in range(A):
                if self._is_unit((u, v)):
                    yield u, v

    def _build_table(self):
        """Greedy generators of (O/q)^* with the exponent vector of every residue."""
        table = {self._one: ()}
        rels = []
        for key in self._unit_residues():
            if len(table) == self.phi:
                break
            if key in table:
                continue
            k, pw = 1, key
            while pw not in table:
                pw = self._mul(pw, key)
                k += 1
            idx = len(rels)
            base = table[pw] + (0,)*(idx - len(table[pw]))
            rels.append(tuple(-cc for cc in base) + (k,))
            powers = [self._one]
            for _ in range(1, k):
                powers.append(self._mul(powers[-1], key))
            new = {}
            for hh, vec in table.items():
                vec = vec + (0,)*(idx - len(vec))
                for jj in range(1, k):
                    new[self._mul(hh, powers[jj])] = vec + (jj,)
            table.update(new)

        if len(table) != self.phi:
            err_str = "residue table mod {} has {} entries, phi = {}".format(
                self.modulus, len(table), self.phi)
            raise RCProdError(err_str)

        m = len(rels)
        self._num_residue_gens = m
        self._table = table
        rows = [rr + (0,)*(m - len(rr) + self.r1) for rr in rels]
        for jj in range(self.r1):
            rows.append(tuple(2*int(ii == m + jj) for ii in range(m + self.r1)))
        self.presentation = group_from_relations(m + self.r1, rows)
        self.group = self.presentation.group
        if self.group.order != self.phi*2**self.r1:
            raise RCProdError("residue-sign group mod {} has order {} != {}".format(
                self.modulus, self.group.order, self.phi*2**self.r1))

    def _unit_generators(self):
        inv = field_invariants(self.field)
        gens = [self.field.number(-1), inv.torsion_generator]
        if inv.fund_unit is not None:
            gens.append(inv.fund_unit)
        return gens

    @property
    def order(self):
        return self.group.order

    def residue_key(self, alpha):
        if not alpha.is_integral():
            raise ValidationError("{} is not integral".format(alpha))
        return self._reduce(int(alpha.a), int(alpha.b))

    def is_unit_residue(self, alpha):
        return self.residue_key(alpha) in self._table

    def unit_residue_keys(self):
        return sorted(self._table)

    def key_element(self, key):
        return self.field.number(*key)

    def dlog_key(self, key, signs=None):
        """Element of the residue class ``key`` with the given embedding signs."""
        if key not in self._table:
            raise ValidationError("residue {} is not a unit modulo {}".format(key, self.modulus))
        vec = self._table[key]
        vec = vec + (0,)*(self._num_residue_gens - len(vec))
        signs = (1,)*self.r1 if signs is None else tuple(signs)
        if len(signs) != self.r1:
            raise ValidationError("expected {} signs, got {}".format(self.r1, signs))
        return self.presentation.project(vec + tuple(int(ss < 0) for ss in signs))

    def dlog(self, alpha):
        """Image of an integral element coprime to q."""
        key = self.residue_key(alpha)
        if key not in self._table:
            raise ValidationError("{} is not coprime to {}".format(alpha, self.modulus))
        signs = alpha.signs() if self.r1 else ()
        return self.dlog_key(key, signs)

    def in_unit_image(self, alpha):
        return self.dlog(alpha) in self.unit_image

    def quotient_image(self, alpha):
        return self.quotient.project(self.dlog(alpha))

    def to_json(self):
        return {'modulus': str(self.modulus), 'phi': self.phi, 'r1': self.r1,
                'invariant_factors': self.group.to_json(),
                'unit_image_order': self.unit_image.order}

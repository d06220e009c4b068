"""Finite abelian groups given by invariant factors.

Elements are tuples of integers, coordinate ``i`` reduced modulo the ``i``-th invariant
factor.  Group law is written additively throughout.

Classes
-------
    FinAbGroup   : Z/d1 x ... x Z/dk with d1 | d2 | ... | dk, each >= 2.
    Subgroup     : subgroup of a ``FinAbGroup`` stored with its full element set.
    Presentation : Z^n/rowspan(R) realized as a ``FinAbGroup`` plus its projection map.

Functions
---------
-   smith_normal_form      - (D, U, V) with U*M*V = D, U and V unimodular.
-   group_from_relations   - ``Presentation`` of Z^n modulo the rows of a relation matrix.
-   subgroup_generated     - Closure of a list of elements.
-   quotient_group         - G/H as a ``Presentation`` on G's coordinates.
-   abelian_groups_of_order - All invariant-factor chains with a given product.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import itertools
import logging
import math
from dataclasses import dataclass, field

from sympy import Matrix, divisors

from ..Constants import InfiniteGroupError, RCProdError, ValidationError

log = logging.getLogger(__name__)


def _identity(n):
    return [[int(ii == jj) for jj in range(n)] for ii in range(n)]


def _matmul(A, B):
    if not A or not B:
        return [[0]*(len(B[0]) if B else 0) for _ in A]
    cols = list(zip(*B))
    return [[sum(aa*bb for aa, bb in zip(row, col)) for col in cols] for row in A]


def _det(M):
    if not M:
        return 1
    return int(Matrix(M).det(method='bareiss'))


def smith_normal_form(M, check=True):
    """Smith normal form of an integer matrix.

    Arguments
    ---------
    M : list of lists of int, shape (m, n)
    check : bool
        Verify U*M*V == D and det(U), det(V) in {+1, -1}.

    Returns
    -------
    D, U, V : lists of lists of int
        D diagonal with nonnegative entries d1 | d2 | ..., U (m x m) and V (n x n)
        unimodular, U*M*V = D.

    """
    D = [[int(vv) for vv in row] for row in M]
    m = len(D)
    n = len(D[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        D[dst] = [aa + k*bb for aa, bb in zip(D[dst], D[src])]
        U[dst] = [aa + k*bb for aa, bb in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in D:
            row[dst] += k*row[src]
        for row in V:
            row[dst] += k*row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(D[ii][jj]), ii, jj) for ii in range(t, m) for jj in range(t, n)
                       if D[ii][jj]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            piv = D[t][t]
            clean = True
            for ii in range(t + 1, m):
                qq = D[ii][t]//piv
                if qq:
                    add_row(ii, t, -qq)
                clean = clean and D[ii][t] == 0
            for jj in range(t + 1, n):
                qq = D[t][jj]//piv
                if qq:
                    add_col(jj, t, -qq)
                clean = clean and D[t][jj] == 0
            if not clean:
                continue
            # Pivot must divide the remaining block
            bad = next((ii for ii in range(t + 1, m) for jj in range(t + 1, n)
                        if D[ii][jj] % piv), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-vv for vv in D[t]]
            U[t] = [-vv for vv in U[t]]
        if all(D[ii][jj] == 0 for ii in range(t, m) for jj in range(t, n)):
            break

    if check:
        if _matmul(_matmul(U, [list(row) for row in M]), V) != D:
            raise RCProdError("Smith normal form check U*M*V == D failed")
        if abs(_det(U)) != 1 or abs(_det(V)) != 1:
            raise RCProdError("Smith normal form transforms are not unimodular")
        diag = [D[ii][ii] for ii in range(min(m, n))]
        for d1, d2 in zip(diag, diag[1:]):
            if (d1 == 0 and d2 != 0) or (d1 and d2 % d1):
                raise RCProdError("Smith normal form diagonal {} breaks divisibility".format(
                    diag))
    return D, U, V


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group with invariant factors d1 | d2 | ... | dk."""
    invariant_factors: tuple = ()

    def __post_init__(self):
        facs = tuple(int(dd) for dd in self.invariant_factors)
        object.__setattr__(self, 'invariant_factors', facs)
        if any(dd < 2 for dd in facs):
            raise ValidationError("invariant factors {} must all be >= 2".format(facs))
        if any(d2 % d1 for d1, d2 in zip(facs, facs[1:])):
            raise ValidationError("invariant factors {} break the divisibility chain".format(
                facs))

    @property
    def order(self):
        return math.prod(self.invariant_factors)

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def zero(self):
        return (0,)*self.rank

    def reduce(self, vec):
        if len(vec) != self.rank:
            raise ValidationError("vector {} has wrong length for {}".format(vec, self))
        return tuple(int(vv) % dd for vv, dd in zip(vec, self.invariant_factors))

    def is_element(self, x):
        return (len(x) == self.rank and
                all(0 <= vv < dd for vv, dd in zip(x, self.invariant_factors)))

    def add(self, x, y):
        return tuple((aa + bb) % dd for aa, bb, dd in zip(x, y, self.invariant_factors))

    def neg(self, x):
        return tuple((-aa) % dd for aa, dd in zip(x, self.invariant_factors))

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale(self, k, x):
        return tuple((k*aa) % dd for aa, dd in zip(x, self.invariant_factors))

    def sum(self, elems):
        tot = self.zero
        for x in elems:
            tot = self.add(tot, x)
        return tot

    def element_order(self, x):
        res = 1
        for aa, dd in zip(x, self.invariant_factors):
            oo = dd//math.gcd(dd, aa)
            res = res*oo//math.gcd(res, oo)
        return res

    def elements(self):
        return itertools.product(*(range(dd) for dd in self.invariant_factors))

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join("Z/{}".format(dd) for dd in self.invariant_factors)

    def to_json(self):
        return list(self.invariant_factors)


@dataclass(frozen=True)
class Subgroup:
    ambient: FinAbGroup
    generators: tuple
    elements: frozenset = field(repr=False)

    def __post_init__(self):
        if self.ambient.order % len(self.elements):
            raise RCProdError("subgroup of order {} in group of order {}".format(
                len(self.elements), self.ambient.order))

    @property
    def order(self):
        return len(self.elements)

    @property
    def index(self):
        return self.ambient.order//self.order

    def __contains__(self, x):
        return x in self.elements

    def coset_key(self, x):
        """Canonical (least) representative of the coset x + H."""
        return min(self.ambient.add(x, hh) for hh in self.elements)

    def to_json(self):
        return {'order': self.order, 'index': self.index,
                'generators': [list(gg) for gg in self.generators]}


def subgroup_generated(G, gens):
    elems = {G.zero}
    used = []
    for gg in gens:
        gg = G.reduce(gg)
        if gg in elems:
            continue
        used.append(gg)
        mult = [G.scale(kk, gg) for kk in range(G.element_order(gg))]
        elems = {G.add(hh, mm) for hh in elems for mm in mult}
    return Subgroup(G, tuple(used), frozenset(elems))


class Presentation(object):
    """Z^n modulo a full-rank relation lattice, realized as a ``FinAbGroup``.

    ``project(vec)`` maps an exponent vector to its element; it is the homomorphism
    x -> (x*V)_j mod d_j over the coordinates j with d_j > 1.
    """

    def __init__(self, n_gens, V, diag):
        self.n_gens = n_gens
        self._V = V
        self._keep = [jj for jj, dd in enumerate(diag) if dd > 1]
        self.group = FinAbGroup(tuple(diag[jj] for jj in self._keep))

    def project(self, vec):
        if len(vec) != self.n_gens:
            raise ValidationError("exponent vector {} has length != {}".format(
                vec, self.n_gens))
        out = []
        for jj, dd in zip(self._keep, self.group.invariant_factors):
            out.append(sum(int(vv)*self._V[ii][jj] for ii, vv in enumerate(vec)) % dd)
        return tuple(out)

    __call__ = project

    def generator_images(self):
        return [self.project([int(ii == jj) for jj in range(self.n_gens)])
                for ii in range(self.n_gens)]


def group_from_relations(n_gens, relations):
    """Presentation of Z^{n_gens}/rowspan(relations).

    Raises
    ------
    InfiniteGroupError
        If the relations do not have full rank ``n_gens``.

    """
    if n_gens == 0:
        return Presentation(0, [], [])
    rows = [list(rr) for rr in relations]
    if not rows:
        raise InfiniteGroupError("no relations on {} generators".format(n_gens))
    if any(len(rr) != n_gens for rr in rows):
        raise ValidationError("relation rows must have length {}".format(n_gens))
    D, _, V = smith_normal_form(rows)
    diag = [D[ii][ii] for ii in range(min(len(rows), n_gens))]
    if len(diag) < n_gens or any(dd == 0 for dd in diag):
        err_str = "relation lattice of rank < {}: quotient is infinite".format(n_gens)
        raise InfiniteGroupError(err_str)
    return Presentation(n_gens, V, diag)


def quotient_group(H):
    """G/H as a presentation on the coordinates of G."""
    G = H.ambient
    rows = [[dd*int(ii == jj) for jj in range(G.rank)]
            for ii, dd in enumerate(G.invariant_factors)]
    rows.extend(list(gg) for gg in H.generators)
    return group_from_relations(G.rank, rows)


def abelian_groups_of_order(n):
    """All ``FinAbGroup`` of order ``n``, one per isomorphism class."""
    def chains(rem, prev):
        if rem == 1:
            yield ()
            return
        for dd in divisors(rem):
            if dd >= 2 and dd % prev == 0:
                for rest in chains(rem//dd, dd):
                    yield (dd,) + rest

    return [FinAbGroup(cc) for cc in chains(n, 1)]

"""Integral ideals of quadratic fields in Hermite normal form.

An ideal is stored as s*(aZ + (b+w)Z) with a | N(b+w) and 0 <= b < a; as a Z-lattice it
has the basis (A, 0), (B, C) = (s*a, 0), (s*b, s) in coordinates (1, w).  Over Q the
ideal (m) is stored with s = m, a = 1, b = 0.

Classes
-------
    IdealHNF : canonical integral ideal.

Functions
---------
-   hnf_from_vectors          - Canonical ideal spanned by integer coordinate vectors.
-   unit_ideal                - The ideal (1).
-   rational_ideal            - The ideal (m) for a rational integer m.
-   principal_ideal           - The ideal generated by an integral element.
-   ideal_product             - x*y.
-   ideal_power               - x**k.
-   ideal_sum                 - x + y, i.e. gcd(x, y).
-   ideal_intersection        - x & y, i.e. lcm(x, y).
-   ideal_lcm_gcd             - (lcm, gcd).
-   ideal_conjugate           - Galois conjugate of an ideal.
-   contains_element          - Membership of an integral element.
-   contains_ideal            - Inclusion y <= x.
-   reduce_mod                - Canonical residue of an integral element modulo an ideal.
-   residue_representatives   - All canonical residues modulo an ideal.
-   narrow_principal_generator - Generator of a principal ideal plus the total-positivity flag.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import itertools
import logging
import math
from dataclasses import dataclass

try:
    from sympy.core.intfunc import igcdex as _sympy_igcdex
except ImportError:  # older sympy
    from sympy.core.numbers import igcdex as _sympy_igcdex

from sympy.ntheory.modular import solve_congruence

from ..Constants import (ValidationError, RCProdError, UndecidedError,
                         PRINCIPAL_SEARCH_BOUND)
from . import Forms
from .Fields import FieldSpec


def igcdex(a, b):
    # newer sympy returns gmpy2 mpz values; keep plain ints as sympy.igcdex did
    return tuple(int(t) for t in _sympy_igcdex(a, b))


log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class IdealHNF:
    """The integral ideal s*(aZ + (b+w)Z) of ``field``."""
    field: FieldSpec
    s: int
    a: int = 1
    b: int = 0

    def __post_init__(self):
        if self.s <= 0 or self.a <= 0:
            raise ValidationError("hnf:{},{},{} needs positive s and a".format(
                self.s, self.a, self.b))
        if not 0 <= self.b < self.a:
            raise ValidationError("hnf:{},{},{} needs 0 <= b < a".format(self.s, self.a, self.b))
        if self.field.is_rational:
            if (self.a, self.b) != (1, 0):
                raise ValidationError("ideals of Q are (m); got hnf:{},{},{}".format(
                    self.s, self.a, self.b))
            return
        if self.field.number(self.b, 1).norm() % self.a:
            raise ValidationError("hnf:{},{},{}: a does not divide N(b+w)".format(
                self.s, self.a, self.b))

    @property
    def norm(self):
        if self.field.is_rational:
            return self.s
        return self.s*self.s*self.a

    @property
    def lattice(self):
        """(A, B, C) with lattice basis (A, 0), (B, C)."""
        if self.field.is_rational:
            return self.s, 0, 1
        return self.s*self.a, self.s*self.b, self.s

    def basis(self):
        A, B, C = self.lattice
        if self.field.is_rational:
            return [self.field.number(A)]
        return [self.field.number(A), self.field.number(B, C)]

    def is_unit(self):
        return self.norm == 1

    def __mul__(self, other):
        return ideal_product(self, other)

    def __str__(self):
        if self.field.is_rational or (self.a == 1 and self.b == 0):
            return "({})".format(self.s)
        return "hnf:{},{},{}".format(self.s, self.a, self.b)

    def to_json(self):
        return str(self)


def hnf_from_vectors(field, vecs):
    """Canonical ideal spanned by the integer vectors ``vecs`` (coordinates in (1, w))."""
    if field.is_rational:
        g = 0
        for x, _ in vecs:
            g = math.gcd(g, x)
        if g == 0:
            raise RCProdError("zero ideal in {}".format(field))
        return IdealHNF(field, g)

    A = 0
    cur = None
    for x, y in vecs:
        if y == 0:
            A = math.gcd(A, x)
            continue
        if cur is None:
            cur = (x, y)
            continue
        u, v, g = igcdex(cur[1], y)
        elim = (y//g)*cur[0] - (cur[1]//g)*x
        A = math.gcd(A, elim)
        cur = (u*cur[0] + v*x, g)

    if cur is None or A == 0:
        raise RCProdError("vectors {} do not span a full lattice in {}".format(vecs, field))
    if cur[1] < 0:
        cur = (-cur[0], -cur[1])
    C = cur[1]
    B = cur[0] % A
    if A % C or B % C:
        raise RCProdError("lattice ({}, {}, {}) is not an ideal of {}".format(A, B, C, field))
    a = A//C
    return IdealHNF(field, C, a, (B//C) % a)


def _vec(alpha):
    if not alpha.is_integral():
        raise ValidationError("{} is not integral".format(alpha))
    return int(alpha.a), int(alpha.b)


def unit_ideal(field):
    return IdealHNF(field, 1)


def rational_ideal(field, m):
    if m == 0:
        raise ValidationError("(0) is not a nonzero ideal")
    return IdealHNF(field, abs(int(m)))


def principal_ideal(alpha):
    field = alpha.field
    if alpha.is_zero():
        raise ValidationError("(0) is not a nonzero ideal")
    if field.is_rational:
        return IdealHNF(field, abs(int(alpha.a)))
    w = field.number(0, 1)
    return hnf_from_vectors(field, [_vec(alpha), _vec(alpha*w)])


def _check_same(x, y):
    if x.field != y.field:
        raise ValidationError("ideals of {} and {} cannot be combined".format(x.field, y.field))


def ideal_product(x, y):
    _check_same(x, y)
    if x.field.is_rational:
        return IdealHNF(x.field, x.s*y.s)
    vecs = [_vec(aa*bb) for aa in x.basis() for bb in y.basis()]
    return hnf_from_vectors(x.field, vecs)


def ideal_power(x, k):
    res = unit_ideal(x.field)
    base = x
    while k:
        if k & 1:
            res = ideal_product(res, base)
        base = ideal_product(base, base)
        k >>= 1
    return res


def ideal_sum(x, y):
    _check_same(x, y)
    return hnf_from_vectors(x.field, [_vec(aa) for aa in x.basis() + y.basis()])


def ideal_intersection(x, y):
    """Module intersection of two ideals."""
    _check_same(x, y)
    if x.field.is_rational:
        return IdealHNF(x.field, x.s*y.s//math.gcd(x.s, y.s))
    A1, B1, C1 = x.lattice
    A2, B2, C2 = y.lattice
    Cm = C1*C2//math.gcd(C1, C2)
    r1 = B1*(Cm//C1)
    r2 = B2*(Cm//C2)
    g = math.gcd(A1, A2)
    # Y = k*Cm is admissible iff k*(r1 - r2) = 0 mod gcd(A1, A2)
    k0 = g//math.gcd(g, r1 - r2)
    X0, _ = solve_congruence(((k0*r1) % A1, A1), ((k0*r2) % A2, A2))
    Am = A1*A2//g
    return hnf_from_vectors(x.field, [(Am, 0), (int(X0), k0*Cm)])


def ideal_lcm_gcd(x, y):
    """Return (lcm, gcd) of two ideals as module intersection and module sum."""
    lcm = ideal_intersection(x, y)
    gcd = ideal_sum(x, y)
    if lcm.norm*gcd.norm != x.norm*y.norm:
        raise RCProdError("lcm/gcd norms of {} and {} are inconsistent".format(x, y))
    return lcm, gcd


def ideal_conjugate(x):
    if x.field.is_rational:
        return x
    return hnf_from_vectors(x.field, [_vec(aa.conjugate()) for aa in x.basis()])


def contains_element(x, alpha):
    xx, yy = _vec(alpha)
    A, B, C = x.lattice
    if x.field.is_rational:
        return xx % A == 0
    if yy % C:
        return False
    return (xx - (yy//C)*B) % A == 0


def contains_ideal(x, y):
    """True iff y is contained in x (x divides y)."""
    _check_same(x, y)
    return all(contains_element(x, aa) for aa in y.basis())


def reduce_mod(x, alpha):
    """Canonical residue (u, v), 0 <= u < A, 0 <= v < C, of ``alpha`` modulo ``x``."""
    xx, yy = _vec(alpha)
    A, B, C = x.lattice
    if x.field.is_rational:
        return xx % A, 0
    k, v = divmod(yy, C)
    return (xx - k*B) % A, v


def residue_representatives(x):
    """Iterate the N(x) canonical residues modulo ``x`` as elements."""
    A, _, C = x.lattice
    for v, u in itertools.product(range(C), range(A)):
        yield x.field.number(u, v)


def _unit_sign_vectors(field):
    from .Invariants import field_invariants
    inv = field_invariants(field)
    gens = [(-1, -1)]
    if inv.fund_unit is not None:
        gens.append(inv.fund_unit.signs())
    signs = {(1, 1)}
    for _ in range(2):
        signs |= {(s0*g0, s1*g1) for (s0, s1) in signs for (g0, g1) in gens}
    return signs


def _has_totally_positive_associate(gen):
    field = gen.field
    if not field.is_real:
        return True
    if field.is_rational:
        return True
    sg = gen.signs()
    return any((sg[0]*u0, sg[1]*u1) == (1, 1) for u0, u1 in _unit_sign_vectors(field))


def _fallback_search(field, a, b, bound):
    al1, al2 = field.number(a), field.number(b, 1)
    for X in range(0, bound + 1):
        for Y in range(-bound, bound + 1):
            if X == 0 and Y <= 0:
                continue
            cand = al1*X + al2*Y
            if abs(cand.norm()) == a:
                return cand
    return None


def narrow_principal_generator(x, search_bound=PRINCIPAL_SEARCH_BOUND):
    """Generator of ``x`` when principal, with the total-positivity flag.

    Returns
    -------
    `None` when ``x`` is not principal, otherwise ``(gen, totally_positive)`` where
    ``totally_positive`` tells whether some associate u*gen is totally positive.

    Raises
    ------
    UndecidedError
        If the cycle walk hits its step cap and the bounded search finds no generator.

    """
    field = x.field
    if field.is_rational:
        return field.number(x.s), True
    status, gen = Forms.lattice_generator(field, x.a, x.b)
    if status == Forms.UNKNOWN:
        gen = _fallback_search(field, x.a, x.b, search_bound)
        if gen is None:
            err_str = "principality of {} in {} undecided after bounded search ({})".format(
                x, field, search_bound)
            raise UndecidedError(err_str)
    elif status == Forms.NONPRINCIPAL:
        return None
    gen = gen*x.s
    return gen, _has_totally_positive_associate(gen)

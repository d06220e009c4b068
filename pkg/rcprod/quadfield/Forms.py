"""Binary quadratic forms attached to ideals of a quadratic field.

A lattice J = Z*alpha1 + Z*alpha2 of norm ``n`` carries the form
f(X, Y) = N(X*alpha1 + Y*alpha2)/n.  Every reduction step below is applied to the form and
to the basis together, so that when a form with leading coefficient +-1 is reached the
first basis element generates J.

Functions
---------
-   form_of_basis        - Coefficients (A, B, C) of the norm form of a lattice basis.
-   reduce_definite      - Reduce a positive definite form, tracking the basis.
-   rho                  - One step of the reduction operator for indefinite forms.
-   reduced_forms        - All reduced primitive forms of a discriminant.
-   form_cycles          - Partition reduced indefinite forms into rho-cycles.
-   class_number         - Class number of the maximal order (wide sense).
-   narrow_class_count   - Number of proper classes of primitive forms.
-   lattice_generator    - Generator of a primitive ideal lattice, if principal.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math

from sympy import divisors

log = logging.getLogger(__name__)

PRINCIPAL = 'principal'
NONPRINCIPAL = 'nonprincipal'
UNKNOWN = 'unknown'


def form_of_basis(alpha1, alpha2, n):
    A = alpha1.norm()/n
    C = alpha2.norm()/n
    B = (alpha1 + alpha2).norm()/n - A - C
    return int(A), int(B), int(C)


def reduce_definite(form, basis):
    """Reduce a positive definite form (a > 0), applying each step to ``basis``.

    Returns the reduced form and the transformed basis.
    """
    (a, b, c), (al1, al2) = form, basis
    D = b*b - 4*a*c
    while True:
        k = (a - b)//(2*a)
        if k:
            b += 2*a*k
            al2 = al2 + al1*k
        c = (b*b - D)//(4*a)
        if a > c or (a == c and b < 0):
            a, b, c = c, -b, a
            al1, al2 = al2, -al1
            continue
        return (a, b, c), (al1, al2)


def _normalize_b(b, a, D, root):
    """Representative of ``b`` modulo 2|a| in the normalization window for |a|."""
    m = 2*abs(a)
    if abs(a) > root:
        r = b % m
        if r > abs(a):
            r -= m
        return r
    return root - ((root - b) % m)


def is_reduced_indefinite(form, D):
    a, b, _ = form
    if b <= 0 or b*b >= D:
        return False
    lo = 2*abs(a) - b
    return (lo <= 0 or lo*lo < D) and (2*abs(a) + b)**2 > D


def rho(form, basis, D, root):
    """Apply the reduction operator (a, b, c) -> (c, r, (r^2 - D)/(4c))."""
    a, b, c = form
    r = _normalize_b(-b, c, D, root)
    s = (r + b)//(2*c)
    new = (c, r, (r*r - D)//(4*c))
    if basis is None:
        return new, None
    al1, al2 = basis
    return new, (al2, al2*s - al1)


def reduced_forms(D):
    """All reduced primitive forms of discriminant ``D``, sorted."""
    forms = []
    if D < 0:
        amax = math.isqrt(-D//3)
        for a in range(1, amax + 1):
            for b in range(-a + 1, a + 1):
                if (b - D) % 2:
                    continue
                num = b*b - D
                if num % (4*a):
                    continue
                c = num//(4*a)
                if c < a or (c == a and b < 0):
                    continue
                if math.gcd(math.gcd(a, b), c) == 1:
                    forms.append((a, b, c))
        return sorted(forms)

    root = math.isqrt(D)
    for b in range(1, root + 1):
        if (b - D) % 2:
            continue
        prod = (D - b*b)//4
        if (D - b*b) % 4 or prod == 0:
            continue
        for a0 in divisors(prod):
            for a in (a0, -a0):
                c = -prod//a
                form = (a, b, c)
                if is_reduced_indefinite(form, D) and math.gcd(math.gcd(a, b), c) == 1:
                    forms.append(form)
    return sorted(forms)


def form_cycles(D):
    """Partition the reduced forms of ``D > 0`` into cycles of ``rho``."""
    root = math.isqrt(D)
    remaining = set(reduced_forms(D))
    cycles = []
    while remaining:
        start = min(remaining)
        cyc = [start]
        form, _ = rho(start, None, D, root)
        while form != start:
            cyc.append(form)
            form, _ = rho(form, None, D, root)
        remaining.difference_update(cyc)
        cycles.append(cyc)
    return cycles


def narrow_class_count(D):
    if D < 0:
        return len(reduced_forms(D))
    return len(form_cycles(D))


def class_number(D, unit_norm=None):
    """Wide class number; for ``D > 0`` halves the cycle count when N(eps) = +1."""
    count = narrow_class_count(D)
    if D > 0 and unit_norm == 1:
        return count//2
    return count


def _cycle_cap(D):
    return max(1000, 20*(math.isqrt(abs(D)) + 1)*abs(D).bit_length())


def lattice_generator(field, a, b):
    """Decide principality of the primitive lattice J = aZ + (b+w)Z of norm ``a``.

    Returns
    -------
    status : str
        ``PRINCIPAL``, ``NONPRINCIPAL`` or ``UNKNOWN`` (step cap reached, real fields only).
    gen : `AlgebraicNumber` or `None`
        Element of J with |N(gen)| = a, generating J when ``status == PRINCIPAL``.

    """
    al1 = field.number(a)
    al2 = field.number(b, 1)
    form = form_of_basis(al1, al2, a)
    D = field.disc
    if D < 0:
        form, (al1, al2) = reduce_definite(form, (al1, al2))
        if form[0] == 1:
            return PRINCIPAL, al1
        return NONPRINCIPAL, None

    root = math.isqrt(D)
    cap = _cycle_cap(D)
    basis = (al1, al2)
    steps = 0
    while not is_reduced_indefinite(form, D):
        if abs(form[0]) == 1:
            return PRINCIPAL, basis[0]
        form, basis = rho(form, basis, D, root)
        steps += 1
        if steps > cap:
            log.warning(" - Reduction of lattice ({}, {}) in {} hit the step cap".format(
                a, b, field))
            return UNKNOWN, None

    start = form
    while True:
        if abs(form[0]) == 1:
            return PRINCIPAL, basis[0]
        form, basis = rho(form, basis, D, root)
        steps += 1
        if form == start:
            return NONPRINCIPAL, None
        if steps > cap:
            log.warning(" - Cycle walk of lattice ({}, {}) in {} hit the step cap".format(
                a, b, field))
            return UNKNOWN, None

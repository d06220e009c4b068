"""Classical invariants of a quadratic field.

Functions
---------
-   field_invariants     - ``QuadInvariants`` of a field (cached per field).
-   check_invariants     - Assert the class number formula and the classical inequalities.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import functools
import logging
import math
from dataclasses import dataclass

from ..Constants import TheoremViolation
from . import Forms
from .Fields import fundamental_unit, log_unit

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadInvariants:
    disc: int
    n: int
    r1: int
    r2: int
    h: int
    h_narrow: int
    fund_unit: object
    unit_norm: int
    regulator: float
    mu_order: int
    alpha: float
    torsion_generator: object

    def to_json(self):
        return {
            'disc': self.disc, 'n': self.n, 'r1': self.r1, 'r2': self.r2,
            'h': self.h, 'h_narrow': self.h_narrow,
            'fund_unit': None if self.fund_unit is None else self.fund_unit.to_json(),
            'unit_norm': self.unit_norm, 'regulator': self.regulator,
            'mu_order': self.mu_order, 'alpha': self.alpha,
        }


@functools.lru_cache(maxsize=None)
def field_invariants(spec):
    """Compute the invariants of ``spec``.

    Class numbers come from reduced forms (imaginary) or from the rho-cycles of reduced
    forms (real); the fundamental unit from the continued fraction of w.  ``alpha`` is the
    residue of the Dedekind zeta function at 1 by the class number formula.
    """
    if spec.is_rational:
        inv = QuadInvariants(disc=1, n=1, r1=1, r2=0, h=1, h_narrow=1, fund_unit=None,
                             unit_norm=None, regulator=1.0, mu_order=2, alpha=1.0,
                             torsion_generator=spec.number(-1))
        return inv

    D = spec.disc
    if spec.d < 0:
        r1, r2 = 0, 1
        h = Forms.class_number(D)
        h_narrow = h
        eps, unit_norm, reg = None, None, 1.0
        mu = {-1: 4, -3: 6}.get(spec.d, 2)
        # i for Q(i); w = (1 + sqrt -3)/2 is a primitive sixth root of unity
        torsion = spec.number(0, 1) if mu in (4, 6) else spec.number(-1)
    else:
        r1, r2 = 2, 0
        eps, unit_norm = fundamental_unit(spec)
        reg = log_unit(eps)
        h_narrow = Forms.narrow_class_count(D)
        h = Forms.class_number(D, unit_norm)
        mu = 2
        torsion = spec.number(-1)

    alpha = (2**r1)*((2*math.pi)**r2)*h*reg/(mu*math.sqrt(abs(D)))
    inv = QuadInvariants(disc=D, n=2, r1=r1, r2=r2, h=h, h_narrow=h_narrow, fund_unit=eps,
                         unit_norm=unit_norm, regulator=reg, mu_order=mu, alpha=alpha,
                         torsion_generator=torsion)
    log.debug(" - Invariants of {}: h = {}, h+ = {}, R = {:.6f}".format(spec, h, h_narrow, reg))
    check_invariants(inv)
    return inv


def check_invariants(inv):
    """Raise ``TheoremViolation`` if a classical identity or inequality fails."""
    n, D = inv.n, abs(inv.disc)
    lhs = inv.alpha*inv.mu_order*math.sqrt(D)
    rhs = (2**inv.r1)*((2*math.pi)**inv.r2)*inv.h*inv.regulator
    if abs(lhs - rhs) > 1e-12*max(1.0, rhs):
        raise TheoremViolation("class number formula mismatch: {} != {}".format(lhs, rhs))
    if inv.r1 + 2*inv.r2 != n:
        raise TheoremViolation("signature ({}, {}) inconsistent with degree {}".format(
            inv.r1, inv.r2, n))
    if n < 2:
        return
    if D**(1.0/n) < math.pi/2:
        raise TheoremViolation("root discriminant of disc {} below pi/2".format(inv.disc))
    if inv.h > 67*(math.pi**2/5)**n*D**0.75:
        raise TheoremViolation("class number {} above the explicit bound".format(inv.h))
    if inv.regulator/inv.mu_order < 0.09:
        raise TheoremViolation("R/|mu| = {} below 0.09".format(inv.regulator/inv.mu_order))
    lo = 9*2**n*inv.h/(100*math.sqrt(D))
    hi = 6*(2*math.pi**2/5)**n*D**0.25
    if not lo <= inv.alpha <= hi:
        raise TheoremViolation("alpha = {} outside [{}, {}]".format(inv.alpha, lo, hi))

"""Quadratic fields K = Q(sqrt d) and their elements.

The ring of integers is Z[w] with w = (1+sqrt d)/2 when d = 1 mod 4 and w = sqrt d
otherwise, so w**2 = t*w - nn with (t, nn) = (1, (1-d)/4) or (0, -d).  The degenerate
backend ``FieldSpec(None)`` is K = Q, where every element has ``b == 0``.

Classes
-------
    FieldSpec       : validated description of the field (hashable, immutable).
    AlgebraicNumber : a + b*w with rational a, b.

Functions
---------
-   parse_field_spec     - Parse ``Q`` or ``Q(sqrt:<d>)``.
-   kronecker            - Kronecker symbol (D | p) for a prime p.
-   fundamental_unit     - Fundamental unit of a real quadratic field by continued fractions.
-   log_unit             - log of a unit > 1 without overflow.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from sympy.ntheory import legendre_symbol

from ..AuxFuncs import is_squarefree_int
from ..Constants import ValidationError, RCProdError

_FIELD_SPEC_REGEX = re.compile(r"^\s*Q\s*(?:\(\s*sqrt\s*:\s*([+-]?\d+)\s*\))?\s*$")


@dataclass(frozen=True)
class FieldSpec:
    """A quadratic field Q(sqrt d), or Q itself when ``d is None``."""
    d: int = None

    def __post_init__(self):
        if self.d is None:
            return
        if not isinstance(self.d, int) or isinstance(self.d, bool):
            raise ValidationError("field parameter must be an integer, got '{}'".format(self.d))
        if self.d in (0, 1):
            raise ValidationError("d = {} does not define a quadratic field".format(self.d))
        if not is_squarefree_int(self.d):
            raise ValidationError("d = {} is not squarefree".format(self.d))

    @property
    def is_rational(self):
        return self.d is None

    @property
    def degree(self):
        return 1 if self.d is None else 2

    @property
    def is_real(self):
        return self.d is None or self.d > 0

    @property
    def disc(self):
        if self.d is None:
            return 1
        return self.d if self.d % 4 == 1 else 4*self.d

    @property
    def trace_omega(self):
        if self.d is None:
            return 0
        return 1 if self.d % 4 == 1 else 0

    @property
    def norm_omega(self):
        if self.d is None:
            return 0
        return (1 - self.d)//4 if self.d % 4 == 1 else -self.d

    @property
    def label(self):
        return "Q" if self.d is None else "Q(sqrt:{})".format(self.d)

    def __str__(self):
        return self.label

    def number(self, a, b=0):
        return AlgebraicNumber(self, Fraction(a), Fraction(b))

    def from_sqrt(self, p, q):
        """Element p + q*sqrt(d) expressed in the integral basis (1, w)."""
        p, q = Fraction(p), Fraction(q)
        if self.d is None:
            if q:
                raise ValidationError("Q has no square root coordinate")
            return AlgebraicNumber(self, p, Fraction(0))
        if self.trace_omega:
            return AlgebraicNumber(self, p - q, 2*q)
        return AlgebraicNumber(self, p, q)


def parse_field_spec(text):
    """Parse ``Q`` or ``Q(sqrt:<d>)`` into a ``FieldSpec``."""
    match = _FIELD_SPEC_REGEX.match(text)
    if match is None:
        raise ValidationError("invalid field spec '{}'".format(text))
    if match.group(1) is None:
        return FieldSpec(None)
    return FieldSpec(int(match.group(1)))


def _sign_of(p, q, d):
    """Exact sign of p + q*sqrt(d) for rational p, q and d > 0."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0 or (p > 0) == (q > 0):
        return 1 if (p > 0 or (p == 0 and q > 0)) else -1
    if p*p > q*q*d:
        return 1 if p > 0 else -1
    return 1 if q > 0 else -1


@dataclass(frozen=True)
class AlgebraicNumber:
    """The element a + b*w of ``field`` with rational coordinates."""
    field: FieldSpec
    a: Fraction
    b: Fraction = Fraction(0)

    def _coerce(self, other):
        if isinstance(other, AlgebraicNumber):
            if other.field != self.field:
                raise ValidationError("elements of {} and {} cannot be combined".format(
                    self.field, other.field))
            return other
        return AlgebraicNumber(self.field, Fraction(other), Fraction(0))

    def __add__(self, other):
        other = self._coerce(other)
        return AlgebraicNumber(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicNumber(self.field, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        t, nn = self.field.trace_omega, self.field.norm_omega
        a, b, c, e = self.a, self.b, other.a, other.b
        return AlgebraicNumber(self.field, a*c - nn*b*e, a*e + b*c + t*b*e)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        nrm = other.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in {}".format(self.field))
        num = self*other.conjugate()
        return AlgebraicNumber(self.field, num.a/nrm, num.b/nrm)

    def __pow__(self, k):
        if k < 0:
            return self.field.number(1)/(self**(-k))
        res = self.field.number(1)
        base = self
        while k:
            if k & 1:
                res = res*base
            base = base*base
            k >>= 1
        return res

    def conjugate(self):
        if self.field.is_rational:
            return self
        return AlgebraicNumber(self.field, self.a + self.field.trace_omega*self.b, -self.b)

    def norm(self):
        if self.field.is_rational:
            return self.a
        t, nn = self.field.trace_omega, self.field.norm_omega
        return self.a*self.a + t*self.a*self.b + nn*self.b*self.b

    def trace(self):
        if self.field.is_rational:
            return self.a
        return 2*self.a + self.field.trace_omega*self.b

    def is_integral(self):
        return self.a.denominator == 1 and self.b.denominator == 1

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def sqrt_coords(self):
        """Return (p, q) with self = p + q*sqrt(d)."""
        if self.field.trace_omega:
            return self.a + self.b/2, self.b/2
        return self.a, self.b

    def signs(self):
        """Signs of the real embeddings (empty for imaginary fields)."""
        if self.field.is_rational:
            return ((self.a > 0) - (self.a < 0),)
        if self.field.d < 0:
            return ()
        p, q = self.sqrt_coords()
        return (_sign_of(p, q, self.field.d), _sign_of(p, -q, self.field.d))

    def is_totally_positive(self):
        if not self.field.is_real:
            raise ValidationError("total positivity is undefined for {}".format(self.field))
        return all(sgn > 0 for sgn in self.signs())

    def to_float(self, embedding=0):
        """Real embedding value (real fields) or complex value (imaginary fields)."""
        p, q = self.sqrt_coords()
        if self.field.is_rational:
            return float(p)
        if self.field.d < 0:
            return complex(float(p), float(q)*math.sqrt(-self.field.d))
        root = math.sqrt(self.field.d)
        return float(p) + (1 if embedding == 0 else -1)*float(q)*root

    def __str__(self):
        if self.field.is_rational or self.b == 0:
            return str(self.a)
        sym = "w" if self.field.trace_omega else "sqrt({})".format(self.field.d)
        if self.a == 0:
            return "{}*{}".format(self.b, sym)
        return "{} + {}*{}".format(self.a, self.b, sym)

    def to_json(self):
        return [str(self.a), str(self.b)]


def kronecker(D, p):
    """Kronecker symbol (D | p) for a rational prime ``p``."""
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    return legendre_symbol(D % p, p)


def fundamental_unit(spec):
    """Fundamental unit eps > 1 of a real quadratic field.

    The continued fraction of w is w = [a0; xi1] with xi1 purely periodic of period L,
    and eps = q_{L-1}*xi1 + q_{L-2} from the denominators of the convergents of xi1.

    Returns
    -------
    eps : `AlgebraicNumber`
    unit_norm : int, +1 or -1

    """
    d = spec.d
    if d is None or d < 0:
        raise ValidationError("fundamental unit requested for non-real field {}".format(spec))
    root = math.isqrt(d)
    P, Q = (1, 2) if spec.trace_omega else (0, 1)
    # First partial quotient of w; xi1 = (P1 + sqrt d)/Q1 is reduced
    a0 = (P + root)//Q
    P1 = a0*Q - P
    Q1 = (d - P1*P1)//Q
    P, Q = P1, Q1
    quots = []
    while True:
        aa = (P + root)//Q
        quots.append(aa)
        P = aa*Q - P
        Q = (d - P*P)//Q
        if (P, Q) == (P1, Q1):
            break

    q_prev, q_cur = 0, 1
    for aa in quots[1:]:
        q_prev, q_cur = q_cur, aa*q_cur + q_prev

    eps = spec.from_sqrt(Fraction(q_cur*P1, Q1) + q_prev, Fraction(q_cur, Q1))
    nrm = eps.norm()
    if not eps.is_integral() or nrm not in (1, -1):
        err_str = "continued fraction of {} gave non-unit {} with norm {}".format(spec, eps, nrm)
        raise RCProdError(err_str)
    return eps, int(nrm)


def log_unit(eps):
    """log of a real unit eps > 1, stable for very large units."""
    p, _ = eps.sqrt_coords()
    nrm = int(eps.norm())
    if p < 10**100:
        pf = float(p)
        return math.log(pf + math.sqrt(pf*pf - nrm))
    # eps = p + sqrt(p^2 - N) = 2p up to O(1/p)
    return math.log(p.numerator) - math.log(p.denominator) + math.log(2.0)

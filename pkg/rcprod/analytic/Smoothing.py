"""The smoothing function w_0 as an exact polynomial, and checks of its norms and Mellin decay.

w_0(t) = f_k((10/9)(t - 1/10)) with f_k(u) = (4u(1 - u))^k and k = n + 4, supported on
[1/10, 1].  All norms are computed exactly (``sympy.Poly`` over QQ); suprema of derivatives
come from real-root isolation of the next derivative.

Classes
-------
    SmoothingPoly : w_0 for a given degree parameter n.

Functions
---------
-   w0_polynomial           - Build (and check) the ``SmoothingPoly`` for ``n``.
-   verify_smoothing_claims - Norm identities, Mellin decay and the M / M* integral bounds.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import functools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy
from scipy import integrate

from ..Constants import ValidationError, TheoremViolation
from .Mellin import mellin, mellin_grid

log = logging.getLogger(__name__)

_T = sympy.Symbol('t')
LEFT = Fraction(1, 10)
RIGHT = Fraction(1)
PEAK = Fraction(11, 20)

# Width of the isolating intervals for the roots of a derivative
_ROOT_EPS = sympy.Rational(1, 10**30)


def _rat(x):
    return sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else x


def _frac(x):
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


@dataclass(frozen=True)
class SmoothingPoly:
    n: int
    poly: sympy.Poly = field(repr=False)

    @property
    def k(self):
        return self.n + 4

    @property
    def support(self):
        return LEFT, RIGHT

    @property
    def degree(self):
        return self.poly.degree()

    def __call__(self, t):
        """Float evaluation through the factored form, vectorized over numpy arrays."""
        t = np.asarray(t, dtype=np.float64)
        u = (10.0*t - 1.0)/9.0
        val = (4.0*u*(1.0 - u))**self.k
        return np.where((t > 0.1) & (t < 1.0), val, 0.0)

    def exact(self, t):
        """Exact value at a rational point (zero outside the support)."""
        t = Fraction(t)
        if t <= LEFT or t >= RIGHT:
            return Fraction(0)
        return _frac(self.poly.eval(_rat(t)))

    def derivative(self, m):
        return self.poly.diff((_T, m)) if m else self.poly

    def coefficients(self):
        """Exact coefficients, highest degree first."""
        return [_frac(cc) for cc in self.poly.all_coeffs()]

    def vanishing_order(self, point):
        """Number of consecutive derivatives (from order 0) vanishing at ``point``."""
        pt = _rat(Fraction(point))
        mm = 0
        while mm <= self.degree and self.derivative(mm).eval(pt) == 0:
            mm += 1
        return mm

    def integral(self, power=0):
        """int_{1/10}^1 w_0(t) t^power dt, exactly."""
        prim = (self.poly*sympy.Poly(_T**power, _T, domain='QQ')).integrate()
        return _frac(prim.eval(_rat(RIGHT)) - prim.eval(_rat(LEFT)))

    def l1_norm(self):
        return self.integral(0)

    def derivative_l1_norm(self, m=1):
        """||w^(m)||_1, exact as long as the critical points of w^(m-1) are rational.

        Between consecutive roots of w^(m) on [1/10, 1] the sign is constant, so the norm is
        the sum of |w^(m-1)(b) - w^(m-1)(a)| over consecutive roots.
        """
        prev = self.derivative(m - 1)
        roots = sorted(set(rr for rr in sympy.Poly(self.derivative(m), _T).real_roots()
                           if _rat(LEFT) <= rr <= _rat(RIGHT)) | {_rat(LEFT), _rat(RIGHT)})
        if not all(rr.is_Rational for rr in roots):
            raise ValidationError("critical points of w^({}) are irrational".format(m - 1))
        vals = [prev.eval(rr) for rr in roots]
        return _frac(sum(abs(bb - aa) for aa, bb in zip(vals[:-1], vals[1:])))

    def sup_norm(self, m=0):
        """Rigorous enclosure (lo, hi) of sup |w^(m)| on [1/10, 1].

        The sup sits at an endpoint or at a root of w^(m+1); roots are isolated in rational
        intervals of width < 1e-30 and |w^(m)| is evaluated exactly at their ends.  ``hi``
        adds the interval width times a Lipschitz bound for w^(m).
        """
        pm = self.derivative(m)
        nxt = self.derivative(m + 1)
        lo_pt, hi_pt = _rat(LEFT), _rat(RIGHT)
        points = [lo_pt, hi_pt]
        width = sympy.Integer(0)
        for (aa, bb), _ in nxt.intervals(eps=_ROOT_EPS, inf=lo_pt, sup=hi_pt):
            points.extend([aa, bb])
            width = max(width, bb - aa)
        best = max(abs(pm.eval(pt)) for pt in points)
        lip = sum(abs(cc) for cc in nxt.all_coeffs())
        return _frac(best), _frac(best + lip*width)

    def to_json(self):
        return {'n': self.n, 'k': self.k, 'degree': self.degree,
                'coefficients': [str(cc) for cc in self.coefficients()]}


@functools.lru_cache(maxsize=None)
def w0_polynomial(n):
    """Exact w_0 for degree parameter ``n``; endpoint flatness is checked up to order n + 2."""
    if int(n) != n or n < 2:
        err_str = "smoothing degree parameter must be an integer >= 2, got {}".format(n)
        raise ValidationError(err_str)
    n = int(n)
    k = n + 4
    u = (10*_T - 1)/9
    poly = sympy.Poly((4*u*(1 - u))**k, _T, domain='QQ')
    sp = SmoothingPoly(n, poly)
    for end in (LEFT, RIGHT):
        order = sp.vanishing_order(end)
        if order < n + 3:
            err_str = "w_0 for n = {} only vanishes to order {} at t = {}".format(n, order, end)
            raise TheoremViolation(err_str)
    if sp.exact(PEAK) != 1:
        raise TheoremViolation("w_0({}) = {} != 1".format(PEAK, sp.exact(PEAK)))
    log.debug(" - w_0 for n = {}: degree {}".format(n, sp.degree))
    return sp


def decay_bound(n, dsup, s):
    """2^{n/2 + 3} ||w^{(n+3)}||_inf / (1 + |s|)^{n+3}."""
    return 2.0**(n/2.0 + 3.0)*dsup/(1.0 + abs(s))**(n + 3)


def _line_integral(sp, sigma, expo, T, num, dsup):
    """2 int_0^T |w(sigma + it)| (1 + |sigma + it|)^expo dt, plus a bound for the tail."""
    n = sp.n
    tt = np.linspace(0.0, T, num)
    ss = sigma + 1j*tt
    vals = np.abs(mellin_grid(sp, ss))*(1.0 + np.abs(ss))**expo
    body = 2.0*integrate.simpson(vals, x=tt)
    # |w(s)| (1 + |s|)^expo <= C (1 + t)^{expo - n - 3} beyond T
    aa = n + 3 - expo
    tail = 2.0*2.0**(n/2.0 + 3.0)*dsup*(1.0 + T)**(1.0 - aa)/(aa - 1.0)
    return body + tail


def verify_smoothing_claims(n, eps_values=(0.25, 0.5), T=200.0, num=8001):
    """Check the norm claims for w_0 and the integral bounds built on them.

    Returns a record with one block per claim; raises ``TheoremViolation`` on failure.
    """
    if not 2 <= n <= 8:
        raise ValidationError("smoothing checks run for 2 <= n <= 8, got {}".format(n))
    sp = w0_polynomial(n)
    sup_lo, sup_hi = sp.sup_norm(0)
    l1 = sp.l1_norm()
    k = sp.k
    l1_closed = Fraction(9, 10)*Fraction(2**(2*k)*math.factorial(k)**2, math.factorial(2*k + 1))
    mv = mellin(sp, 1.0)
    scaled = 10.0*math.sqrt(n)*float(l1)
    dl1 = sp.derivative_l1_norm(1)
    dsup_lo, dsup_hi = sp.sup_norm(n + 3)
    dbound = 4.0*(40.0*n)**(n + 3)

    rec = {
        'n': n,
        'sup_norm': {'lower': sup_lo, 'upper': sup_hi, 'holds': sup_lo == 1 and sup_hi >= 1
                     and sp.exact(PEAK) == 1},
        'mellin_at_one': {'exact': l1, 'closed_form': l1_closed, 'quadrature': mv.value.real,
                          'scaled': scaled, 'holds': l1 == l1_closed and 2 <= scaled <= 15},
        'derivative_l1': {'value': dl1, 'holds': dl1 == 2},
        'top_derivative_sup': {'lower': dsup_lo, 'upper': dsup_hi, 'bound': dbound,
                               'holds': float(dsup_hi) <= dbound},
    }
    dsup = float(dsup_hi)

    grid = np.linspace(0.0, 50.0, 201)
    lines = {'re0': 1j*grid[grid >= 1.0], 're_half': 0.5 + 1j*grid}
    worst = math.inf
    for ss in lines.values():
        vals = np.abs(mellin_grid(sp, ss))
        bounds = np.array([decay_bound(n, dsup_lo, s) for s in ss])
        worst = min(worst, float(np.min(bounds - vals)))
    rec['mellin_decay'] = {'points': int(sum(len(ss) for ss in lines.values())),
                           'min_margin': worst, 'holds': worst >= 0}

    mrec = []
    for eps in eps_values:
        m_val = _line_integral(sp, 0.0, (1.0 + eps)*n/2.0, T, num, dsup)
        m_bound = 2.0**(2.0 + eps*n/2.0)*(dsup + 10.0*2.0**(n/2.0)*float(l1))
        entry = {'eps': eps, 'M': m_val, 'M_bound': m_bound, 'M_holds': m_val <= m_bound}
        for r in (1, 2):
            ms_val = _line_integral(sp, (1.0 + eps)/2.0, (1.0 + eps)*n/(2.0*r), T, num, dsup)
            ms_bound = 12.0*(57.0*n)**(n + 3)
            entry['M_star_r{}'.format(r)] = ms_val
            entry['M_star_r{}_holds'.format(r)] = ms_val <= ms_bound
            entry['M_star_bound'] = ms_bound
        mrec.append(entry)
    rec['integrals'] = mrec

    failed = [kk for kk, vv in rec.items() if isinstance(vv, dict) and not vv['holds']]
    failed += ["integrals(eps={})".format(ee['eps']) for ee in mrec
               if not all(vv for kk, vv in ee.items() if kk.endswith('holds'))]
    if failed:
        raise TheoremViolation("smoothing claims fail for n = {}: {}".format(n, failed))
    rec['holds'] = True
    log.info(" - Smoothing claims for n = {} hold".format(n))
    return rec

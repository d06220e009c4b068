"""Mellin transforms of compactly supported smoothing polynomials.

    w(s) = int_{1/10}^1 w(t) t^{s-1} dt = int_{log 1/10}^0 w(e^x) e^{sigma x} e^{i tau x} dx

with s = sigma + i tau.  ``mellin`` integrates in the log variable with the oscillatory
weights of ``scipy.integrate.quad``; ``mellin_grid`` evaluates many s at once on a fixed
Gauss-Legendre rule.  At integer s the polynomial is integrated exactly as a cross-check.

Classes
-------
    MellinValue : s, the transform value and its quadrature error estimate.

Functions
---------
-   mellin        - Adaptive quadrature, cross-checked exactly at integer s >= 1.
-   mellin_exact  - Exact rational value at an integer s >= 1.
-   mellin_grid   - Vectorized Gauss-Legendre evaluation on an array of s.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ..Constants import ValidationError, TheoremViolation

log = logging.getLogger(__name__)

GL_NODES = 400
_QUAD_LIMIT = 400


@dataclass(frozen=True)
class MellinValue:
    s: complex
    value: complex
    error: float

    def to_json(self):
        return {'s': complex(self.s), 'value': complex(self.value), 'error': self.error}


def _log_support(poly):
    lo, hi = poly.support
    return math.log(float(lo)), math.log(float(hi))


def mellin_exact(poly, s):
    """Exact value at integer s >= 1, as a ``Fraction``."""
    if int(s) != s or s < 1:
        raise ValidationError("exact Mellin values need an integer s >= 1, got {}".format(s))
    return poly.integral(int(s) - 1)


def mellin(poly, s, tol=1e-12):
    """Mellin transform of ``poly`` at ``s`` by adaptive quadrature."""
    if tol <= 0:
        raise ValidationError("tolerance must be positive, got {}".format(tol))
    s = complex(s)
    sigma, tau = s.real, s.imag
    xlo, xhi = _log_support(poly)

    def amp(x):
        return float(poly(math.exp(x)))*math.exp(sigma*x)

    opts = dict(epsabs=tol/4, epsrel=0.0, limit=_QUAD_LIMIT)
    if tau == 0.0:
        re, re_err = integrate.quad(amp, xlo, xhi, **opts)
        im, im_err = 0.0, 0.0
    else:
        re, re_err = integrate.quad(amp, xlo, xhi, weight='cos', wvar=tau, **opts)
        im, im_err = integrate.quad(amp, xlo, xhi, weight='sin', wvar=tau, **opts)
    err = re_err + im_err
    if err > tol:
        log.warning(" - Mellin quadrature at s = {} only reached error {:.3e} > {:.3e}".format(
            s, err, tol))
    val = complex(re, im)

    if tau == 0.0 and sigma >= 1 and sigma == int(sigma):
        exact = float(mellin_exact(poly, int(sigma)))
        if abs(exact - val.real) > max(tol, 1e-12):
            err_str = "Mellin quadrature {!r} differs from the exact value {!r} at s = {}".format(
                val.real, exact, sigma)
            raise TheoremViolation(err_str)
    return MellinValue(s, val, err)


def _gl_rule(poly, nodes):
    xlo, xhi = _log_support(poly)
    xx, ww = np.polynomial.legendre.leggauss(nodes)
    xx = 0.5*(xhi - xlo)*xx + 0.5*(xhi + xlo)
    ww = 0.5*(xhi - xlo)*ww
    return xx, ww*poly(np.exp(xx))


def mellin_grid(poly, s_values, nodes=GL_NODES):
    """Transform values at every entry of ``s_values`` (array-like of complex)."""
    ss = np.atleast_1d(np.asarray(s_values, dtype=np.complex128))
    xx, ww = _gl_rule(poly, nodes)
    return np.exp(np.outer(ss, xx)) @ ww

"""Log-space ledger of the explicit constants attached to a field and a modulus.

Every constant is stored as its natural logarithm: t(K) alone contains exp(|d_K|^30), which
overflows any float, so nothing here is exponentiated.  The ledger also re-checks the
elementary inequalities that relate these constants.

Classes
-------
    LedgerEntry    : one constant, with its log value and a short description.
    ConstantLedger : all entries for (K, q) plus the checks evaluated on them.

Functions
---------
-   constant_ledger          - Build the ledger for a quadratic field, modulus and w_0.
-   hr1_log_bound            - log of the convexity bound for |zeta_K(s)| in the strip.
-   hr2_log_bound            - log of the convexity bound for |L_q(s, chi)|, chi primitive.
-   fchi_log_bound           - log of the bound for |F(s, chi)| on Re s = (1 + eps)/2.
-   ideal_count_main_term    - alpha_K phi(q) X/(h_{K,q} N q).
-   ideal_count_log_error    - log of the explicit error term of the ideal count.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import math
from dataclasses import dataclass, field

from scipy import special

from ..AuxFuncs import log_sum
from ..Constants import ValidationError, TheoremViolation
from ..quadfield import field_invariants, factor_ideal
from ..rayclass import modulus_phi, ray_class_order
from ..sieve import euler_product_bounds
from .Smoothing import w0_polynomial

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LedgerEntry:
    symbol: str
    log_value: float
    description: str = ""

    def to_json(self):
        return {'log_value': self.log_value, 'description': self.description}


@dataclass
class ConstantLedger:
    field: object
    modulus: object
    n: int
    h_q: int
    phi_q: int
    entries: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def add(self, symbol, log_value, description=""):
        log_value = float(log_value)
        if not math.isfinite(log_value):
            err_str = "ledger entry {} is not finite: {}".format(symbol, log_value)
            raise TheoremViolation(err_str)
        self.entries[symbol] = LedgerEntry(symbol, log_value, description)

    def __getitem__(self, symbol):
        return self.entries[symbol].log_value

    def __contains__(self, symbol):
        return symbol in self.entries

    def to_json(self):
        return {'field': self.field.label, 'modulus': str(self.modulus),
                'smoothing_n': self.n, 'h_q': self.h_q, 'phi_q': self.phi_q,
                'constants': {kk: vv.to_json() for kk, vv in sorted(self.entries.items())},
                'checks': dict(sorted(self.checks.items()))}


def _check_strip(s, eps):
    if not 0 < eps <= 0.5:
        raise ValidationError("eps must lie in (0, 1/2], got {}".format(eps))
    sigma = complex(s).real
    if not -eps <= sigma <= 1 + eps:
        err_str = "Re s = {} outside the strip [{}, {}]".format(sigma, -eps, 1 + eps)
        raise ValidationError(err_str)
    return sigma


def hr1_log_bound(s, eps, disc, n):
    """log of 3 zeta(1+eps)^n |(s+1)/(s-1)| (|d|(1+|s|)^n)^{(1+eps-sigma)/2}."""
    sigma = _check_strip(s, eps)
    s = complex(s)
    if s == 1:
        raise ValidationError("the zeta bound is singular at s = 1")
    return (math.log(3.0) + n*math.log(special.zeta(1.0 + eps))
            + math.log(abs((s + 1)/(s - 1)))
            + 0.5*(1.0 + eps - sigma)*(math.log(abs(disc)) + n*math.log1p(abs(s))))


def hr2_log_bound(s, eps, disc, norm_q, n):
    """log of zeta(1+eps)^n (|d| N(q) (1+|s|)^n)^{(1+eps-sigma)/2}."""
    sigma = _check_strip(s, eps)
    return (n*math.log(special.zeta(1.0 + eps))
            + 0.5*(1.0 + eps - sigma)*(math.log(abs(disc)) + math.log(norm_q)
                                       + n*math.log1p(abs(complex(s)))))


def fchi_log_bound(s, eps, disc, norm_q, theta, n, trivial=False):
    """log of the bound for |F(s, chi)| on the line Re s = (1 + eps)/2.

    For the trivial character the conductor factor N(q) is replaced by the constant 27.
    """
    sigma = _check_strip(s, eps)
    if abs(sigma - 0.5*(1.0 + eps)) > 1e-12:
        raise ValidationError("F(s, chi) is bounded on Re s = {}, got {}".format(
            0.5*(1.0 + eps), sigma))
    val = (1.5*n*math.log(special.zeta(1.0 + eps)) + 0.25*(1.0 + eps)*math.log(abs(disc))
           + math.log(theta) + 0.25*(1.0 + eps)*n*math.log1p(abs(complex(s))))
    if trivial:
        return val + math.log(27.0)
    return val + 0.25*(1.0 + eps)*math.log(norm_q)


def _log_theta(q):
    return sum(math.log(math.sqrt(P.norm)/(math.sqrt(P.norm) - 1.0))
               for P, _ in factor_ideal(q))


def constant_ledger(spec, q, n=None, eps=0.5):
    """All explicit constants for (K, q), with w_0 of degree parameter ``n`` (default n_K)."""
    if spec.is_rational:
        raise ValidationError("the constant ledger is defined for quadratic fields only")
    inv = field_invariants(spec)
    nK = inv.n
    n = nK if n is None else int(n)
    absd = abs(inv.disc)
    ln = math.log(nK)
    ld = math.log(absd)
    lNq = math.log(q.norm)
    h_q = ray_class_order(spec, q)
    phi_q = modulus_phi(spec, q)
    led = ConstantLedger(spec, q, n, h_q, phi_q)

    log_Rh = math.log(inv.regulator*inv.h)
    log_R_mu = math.log(inv.regulator/inv.mu_order)
    led.add('u_K', 48*nK**3*ln + 6*ld + nK*log_Rh, "n^{48n^3} |d|^6 (R h)^n")
    led.add('t_K', max(led['u_K'], float(absd)**30), "max(u(K), exp(|d|^30))")
    led.add('E_K', math.log(1000.0) + 12*nK**2*ln + log_R_mu/nK
            + nK*math.log(4*nK*math.log(2*nK) + log_R_mu),
            "1000 n^{12n^2} (R/mu)^{1/n} log((2n)^{4n} R/mu)^n")
    led.add('B_K', nK*(50*nK**2*ln + led['E_K'] + 0.5*ld), "(n^{50n^2} E(K) sqrt|d|)^n")
    led.add('R_over_mu', log_R_mu)
    led.add('alpha_K', math.log(inv.alpha), "residue of zeta_K at 1")

    log_F = inv.r1*math.log(2) + math.log(inv.h) + math.log(phi_q) - math.log(h_q)
    led.add('F_q', log_F, "2^{r1} h phi(q)/h_{K,q}")
    led.add('F1_q', inv.r1*math.log(2) + math.log(inv.h) + lNq, "2^{r1} h N(q)")
    led.add('theta_q', _log_theta(q), "prod_{P | q} sqrt(N P)/(sqrt(N P) - 1)")

    sp = w0_polynomial(n)
    l1 = float(sp.l1_norm())
    dsup = float(sp.sup_norm(n + 3)[1])
    led.add('w0_l1', math.log(l1), "||w_0||_1")
    led.add('w0_top_sup', math.log(dsup), "||w_0^{(n+3)}||_inf")
    led.add('M_bound', (2.0 + eps*n/2.0)*math.log(2.0)
            + math.log(dsup + 10.0*2.0**(n/2.0)*l1), "bound for M(w_0, eps)")
    led.add('M_star_bound', math.log(12.0) + (n + 3)*math.log(57.0*n), "bound for M*(eps, r)")
    led.add('u_star', math.log(l1) - math.log(dsup + 5.0*l1) - math.log(20000.0)
            - 22*nK*math.log(2.0) - 1.5*ld, "u*(w_0, K)")

    for alpha in (0.0, 1.0 - 1.0/nK):
        consts = euler_product_bounds(alpha)
        led.add('c1({})'.format(alpha), math.log(consts['c1'][1]), "upper enclosure")
        led.add('c2({})'.format(alpha), math.log(consts['c2'][1]), "upper enclosure")

    led.add('three_primes_bound', 3*(led['t_K'] + lNq), "(t(K) N(q))^3")
    led.add('bt_tri_threshold', led['u_K'] + lNq, "X above u(K) N(q)")
    led.add('bt_threshold', (8*nK + 11)*math.log(1e6*nK) + 6*ld + 0.5*(ld + lNq)
            + nK*math.log(ld + lNq), "lower bound for X/Y in the coset bound")
    led.add('bt_log_offset', -0.5*lNq - nK*math.log(ld + lNq),
            "1/(sqrt(N q) log(|d| N q)^n) in the coset denominator")
    led.add('degree_one_bound', 25*nK*math.log(10.0) + 7*nK*ln + 4*ld + 3*lNq,
            "10^{25n} n^{7n} |d|^4 N(q)^3")
    led.add('kernel_prime_bound', math.log(8.0) + nK*(31*math.log(10.0) + 7*ln) + 4*ld
            + 2*lNq, "8 (10^31 n^7)^n |d|^4 N(q)^2")
    log_3F = math.log(3.0) + log_F
    led.add('degree_one_bis_bound', led['F1_q'] + lNq + nK**2*math.log(log_3F)
            + 2*math.log(math.log(led['B_K'] + log_F + lNq)),
            "F1(q) N(q) log(3F)^{n^2} loglog(B F N q)^2")
    led.add('Gz_threshold', 4*nK*math.log(1e6*nK) + 3*ld, "(10^6 n)^{4n} |d|^3")

    # Sandwich for alpha_K and the class number bound
    lo = math.log(9.0) + nK*math.log(2.0) + math.log(inv.h) - math.log(100.0) - 0.5*ld
    hi = math.log(6.0) + nK*math.log(2*math.pi**2/5) + 0.25*ld
    hmax = math.log(67.0) + nK*math.log(math.pi**2/5) + 0.75*ld
    led.add('alpha_K_lower', lo)
    led.add('alpha_K_upper', hi)
    led.add('h_K_upper', hmax)
    led.checks['alpha_sandwich'] = lo <= led['alpha_K'] <= hi
    led.checks['class_number_bound'] = math.log(inv.h) <= hmax

    lhs = 48*nK**3*ln + nK*log_Rh
    rhs = 25*nK*math.log(10.0) + 7*nK*ln
    led.add('simplify_lhs', lhs, "n^{48n^3} (R h)^n")
    led.add('simplify_rhs', rhs, "10^{25n} n^{7n}")
    led.checks['simplify_tK'] = lhs >= rhs
    led.checks['t_K_is_max'] = led['t_K'] >= led['u_K']

    failed = [kk for kk, vv in led.checks.items() if not vv]
    if failed:
        raise TheoremViolation("ledger checks {} fail for {} mod {}".format(failed, spec, q))
    log.debug(" - Ledger for {} mod {}: log t(K) = {:.6e}".format(spec, q, led['t_K']))
    return led


def ideal_count_main_term(spec, q, X, ledger=None):
    ledger = constant_ledger(spec, q) if ledger is None else ledger
    inv = field_invariants(spec)
    return inv.alpha*ledger.phi_q*X/(ledger.h_q*q.norm)


def ideal_count_log_error(ledger, X):
    """log of E(K) F^{1/n} log(3F)^n (X/N q)^{1-1/n} + n^{8n} (R/mu) F."""
    nK = ledger.field.degree
    log_F = ledger['F_q']
    lnq = math.log(ledger.modulus.norm)
    first = (ledger['E_K'] + log_F/nK + nK*math.log(math.log(3.0) + log_F)
             + (1.0 - 1.0/nK)*(math.log(X) - lnq))
    second = 8*nK*math.log(nK) + ledger['R_over_mu'] + log_F
    return log_sum(first, second)

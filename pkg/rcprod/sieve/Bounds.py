"""Explicit bounds attached to the sieve: Euler products, prime sums and classical checks.

Functions
---------
-   euler_product_bounds   - Certified [lower, upper] enclosures of c1(alpha) and c2(alpha).
-   c2_factorization_check - Per-prime check of c2(alpha)/(zeta(a) zeta(b)) as an Euler product.
-   lambda_norm_bounds     - sum |lambda_e|/N(e)^alpha against the absolute bound and corollaries.
-   prime_sum_checks       - Prime-ideal sums against their explicit majorants.
-   mellin_kernel_check    - max(0, 1-y)^k as a truncated contour integral.
-   classical_prime_checks - Prime-power counts and sums of 1/p over rational primes.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import functools
import logging
import math
from fractions import Fraction

import numpy as np
from scipy import integrate

from ..AuxFuncs import primes_up_to
from ..Constants import (ValidationError, TheoremViolation, EULER_TRUNCATION,
                         EXACT_RECIPROCAL_LIMIT)
from ..quadfield import enumerate_primes, enumerate_factored

log = logging.getLogger(__name__)

# pi(x) <= 1.25506 x/log x for x > 1
_PI_UPPER = 1.25506
_EPS = np.finfo(np.float64).eps


def _euler_tail(P, gamma):
    """Upper bound for sum_{p > P} 2*(P/(P-1))*p^{-gamma}, gamma > 1."""
    return 2.0*(P/(P - 1.0))*_PI_UPPER*gamma/((gamma - 1.0)*math.log(P))*P**(1.0 - gamma)


@functools.lru_cache(maxsize=None)
def euler_product_bounds(alpha, P=EULER_TRUNCATION):
    """Enclosures of

        c1(alpha) = prod_p (1 + (1 + p^alpha)/((p - 1) p)),
        c2(alpha) = prod_p (1 + (1 + p^alpha)/((p - 1) p^{(1 + 3 alpha)/4})).

    The product over p <= P is summed as log1p's; since log(1 + x) <= x the tail adds at
    most the sum of the terms over p > P, which is bounded through pi(x).
    """
    alpha = float(alpha)
    if not 0.0 <= alpha < 1.0:
        raise ValidationError("alpha must lie in [0, 1), got {}".format(alpha))
    pp = primes_up_to(int(P)).astype(np.float64)
    num = 1.0 + pp**alpha
    res = {}
    for name, beta in (('c1', 1.0), ('c2', (1.0 + 3.0*alpha)/4.0)):
        log_low = float(np.sum(np.log1p(num/((pp - 1.0)*pp**beta))))
        tail = _euler_tail(P, 1.0 + beta - alpha)
        res[name] = (math.exp(log_low), math.exp(log_low + tail))
    log.debug(" - Euler products at alpha = {}: {}".format(alpha, res))
    return res


def c2_factorization_check(alpha, pmax=10**4, rtol=1e-10):
    """Compare the local factors of c2(alpha)/(zeta((5+3a)/4) zeta((5-a)/4)) prime by prime.

    Returns the largest relative discrepancy; raises ``TheoremViolation`` above ``rtol``.
    """
    alpha = float(alpha)
    pp = primes_up_to(int(pmax)).astype(np.float64)
    beta = (1.0 + 3.0*alpha)/4.0
    left = (1.0 + (1.0 + pp**alpha)/((pp - 1.0)*pp**beta))
    left *= (1.0 - pp**(-(5.0 + 3.0*alpha)/4.0))*(1.0 - pp**(-(5.0 - alpha)/4.0))
    q4 = pp**0.25
    qa = pp**(alpha/4.0)
    first = (q4 - qa)*qa/(pp**2.5 - pp**1.5)
    numer = (-(pp**1.25 + q4)*pp**alpha + pp**((6.0 + 3.0*alpha)/4.0) + qa
             + pp**(1.25*alpha) - pp**1.25)
    second = numer/(pp**(1.5*alpha)*(pp**3.75 - pp**2.75))
    right = 1.0 + first + second
    worst = float(np.max(np.abs(left - right)/np.abs(right)))
    if worst > rtol:
        raise TheoremViolation("c2 local factors differ by {} at alpha = {}".format(
            worst, alpha))
    return worst


def lambda_norm_bounds(table, alpha):
    """sum_e |lambda_e|/N(e)^alpha against the absolute bound and its two corollaries."""
    alpha = Fraction(alpha)
    if not 0 <= alpha < 1:
        raise ValidationError("alpha must lie in [0, 1), got {}".format(alpha))
    ctx = table.ctx
    n = ctx.n
    z = float(ctx.z)
    if alpha == 0:
        lhs = sum((abs(val) for val in table.weights.values()), Fraction(0))
    else:
        lhs = math.fsum(abs(float(val))/table.norms[key]**float(alpha)
                        for key, val in table.weights.items())
    af = float(alpha)
    consts = euler_product_bounds(af)
    c1, c2 = consts['c1'][1], consts['c2'][1]
    den = 2.0 + math.log(z)
    rhs = 3.1*n*z**(1.0 - af)/((1.0 - af)*den)*c1**n + z**(0.75*(1.0 - af))*c2**n
    rec = {'alpha': alpha, 'lhs': lhs, 'c1': list(consts['c1']), 'c2': list(consts['c2']),
           'absolute_rhs': rhs, 'absolute_ok': float(lhs) <= rhs,
           'cor_alpha0_rhs': None, 'cor_alpha0_ok': None,
           'cor_alpha1n_rhs': None, 'cor_alpha1n_ok': None}
    if alpha == 0:
        rec['cor_alpha0_rhs'] = 6.0*89.0**n*z/den
        rec['cor_alpha0_ok'] = float(lhs) <= rec['cor_alpha0_rhs']
    if n >= 2 and alpha == 1 - Fraction(1, n):
        rec['cor_alpha1n_rhs'] = float(n)**(9*n)*z**(1.0/n)/den
        rec['cor_alpha1n_ok'] = float(lhs) <= rec['cor_alpha1n_rhs']
        rec['c2_linear_bound_ok'] = consts['c2'][1] <= 26.45*n
    failed = [kk for kk in ('absolute_ok', 'cor_alpha0_ok', 'cor_alpha1n_ok')
              if rec[kk] is False]
    if failed:
        raise TheoremViolation("lambda norm bound(s) {} fail at alpha = {}: {}".format(
            failed, alpha, rec))
    return rec


def _squarefree_norm_counts(spec, X):
    counts = np.zeros(X + 1, dtype=np.int64)
    for nrm, factors in enumerate_factored(spec, X):
        if all(ee == 1 for _, ee in factors):
            counts[nrm] += 1
    return counts


def prime_sum_checks(spec, X):
    """Prime-ideal sums against their explicit majorants, for alpha in {0, 1/2, 1 - 1/n}.

    (a) sum_{N P <= x} log N(P)/N(P)^alpha <= 1.02 n x^{1-alpha}/(1 - alpha), checked at
        every jump x = N(P);
    (b) sum_{N a <= x} mu^2(a) (x/N a)^alpha
            <= (1 + 1.02 n) x/((1 - alpha)(1 + log x)) sum_{N a <= x} mu^2(a)/N(a),
        checked at every integer x <= X.
    """
    X = int(X)
    if X < 2:
        raise ValidationError("prime sums need X >= 2, got {}".format(X))
    n = spec.degree
    alphas = sorted({0.0, 0.5, 1.0 - 1.0/n})
    norms = np.array(sorted(P.norm for P in enumerate_primes(spec, X)), dtype=np.float64)
    counts = _squarefree_norm_counts(spec, X).astype(np.float64)
    mm = np.arange(X + 1, dtype=np.float64)
    mm[0] = 1.0
    xx = np.arange(1, X + 1, dtype=np.float64)
    harm = np.cumsum(counts/mm)[1:]

    rows = []
    for alpha in alphas:
        cum = np.cumsum(np.log(norms)/norms**alpha)
        bound = 1.02*n*norms**(1.0 - alpha)/(1.0 - alpha)
        ratio_a = float(np.max(cum/bound)) if norms.size else 0.0
        lhs = xx**alpha*np.cumsum(counts/mm**alpha)[1:]
        rhs = (1.0 + 1.02*n)*xx/((1.0 - alpha)*(1.0 + np.log(xx)))*harm
        ratio_b = float(np.max(lhs/rhs))
        rows.append({'alpha': alpha, 'prime_log_ratio': ratio_a,
                     'squarefree_ratio': ratio_b,
                     'holds': ratio_a <= 1.0 and ratio_b <= 1.0})
    holds = all(rr['holds'] for rr in rows)
    if not holds:
        raise TheoremViolation("prime sum bound fails over {} up to {}: {}".format(
            spec, X, rows))
    return {'field': spec.label, 'X': X, 'rows': rows, 'holds': holds}


def mellin_kernel_check(y_values=(0.5, 1.0, 2.0), k_values=range(1, 7), T=1000.0, c=2.0):
    """Check max(0, 1-y)^k = (1/2 pi i) int_{(c)} y^{-s} k!/(s(s+1)...(s+k)) ds.

    The integral is taken over |Im s| <= T; the rest contributes at most
    y^{-c} k!/(pi k T^k).
    """
    rows = []
    for kk in k_values:
        fact = math.factorial(kk)
        for yy in y_values:
            def integrand(t):
                s = complex(c, t)
                den = 1.0 + 0.0j
                for jj in range(kk + 1):
                    den *= (s + jj)
                return (yy**(-s)*fact/den).real

            val, qerr = integrate.quad(integrand, 0.0, T, limit=5000)
            num = val/math.pi
            exact = max(0.0, 1.0 - yy)**kk
            tail = yy**(-c)*fact/(math.pi*kk*T**kk)
            err = abs(num - exact)
            rows.append({'k': kk, 'y': yy, 'numeric': num, 'exact': exact, 'error': err,
                         'allowed': tail + qerr/math.pi + 1e-9,
                         'holds': err <= tail + qerr/math.pi + 1e-9})
    holds = all(rr['holds'] for rr in rows)
    if not holds:
        log.warning(" - Contour check failed on {} rows".format(
            sum(not rr['holds'] for rr in rows)))
    return {'T': T, 'c': c, 'rows': rows, 'holds': holds}


def _loglog_lower(x):
    # Certified lower bound for 2 log log x given correctly rounded log
    return Fraction(2.0*math.log(math.log(x))*(1.0 - 8*_EPS))


def classical_prime_checks(x_max):
    """Check #{p^k <= x, k >= 2} <= (5/4) sqrt(x) for x <= x_max, and
    sum_{p <= x} 1/p <= 2 log log x for 100 <= x <= x_max.

    Both left sides are step functions and both right sides increase, so checking at the
    jumps (and at x = 100) covers every real x in range.
    """
    x_max = int(x_max)
    if x_max < 4:
        raise ValidationError("classical checks need x_max >= 4, got {}".format(x_max))
    primes = primes_up_to(x_max)

    powers = []
    for p in primes[primes <= math.isqrt(x_max)]:
        p = int(p)
        pk = p*p
        while pk <= x_max:
            powers.append(pk)
            pk *= p
    powers.sort()
    pp_ok = True
    worst = 0.0
    for idx, pk in enumerate(powers):
        cnt = idx + 1
        # cnt <= 1.25 sqrt(pk)  <=>  (4 cnt)^2 <= 25 pk
        pp_ok = pp_ok and (4*cnt)**2 <= 25*pk
        worst = max(worst, cnt/(1.25*math.sqrt(pk)))
    spot = sum(1 for pk in powers if pk <= 100) if x_max >= 100 else None
    prime_powers = {'checked': len(powers), 'max_ratio': worst, 'holds': pp_ok,
                    'count_at_100': spot}

    reciprocals = None
    if x_max >= 100:
        limit = min(EXACT_RECIPROCAL_LIMIT, x_max)
        small = primes[primes <= limit]
        exact = sum((Fraction(1, int(p)) for p in small[small <= 100]), Fraction(0))
        sum_100 = float(exact)
        lower = _loglog_lower(100)
        rec_ok = exact <= lower
        min_margin = float(lower - exact)
        checked = 1
        for p in small[small > 100]:
            p = int(p)
            exact += Fraction(1, p)
            lower = _loglog_lower(p)
            rec_ok = rec_ok and exact <= lower
            min_margin = min(min_margin, float(lower - exact))
            checked += 1

        rest = primes[primes > limit].astype(np.float64)
        if rest.size:
            cum = float(exact) + np.cumsum(1.0/rest)
            err = (np.arange(rest.size) + 2.0)*_EPS*cum
            lower = 2.0*np.log(np.log(rest))*(1.0 - 8*_EPS)
            margin = lower - (cum + err)
            rec_ok = rec_ok and bool(np.all(margin >= 0.0))
            min_margin = min(min_margin, float(np.min(margin)))
            checked += rest.size
        reciprocals = {'checked': checked, 'exact_limit': limit, 'min_margin': min_margin,
                       'sum_at_100': sum_100,
                       'holds': rec_ok}

    holds = pp_ok and (reciprocals is None or reciprocals['holds'])
    log.info(" - Classical prime checks up to {}: {}".format(x_max, holds))
    return {'x_max': x_max, 'prime_powers': prime_powers, 'reciprocals': reciprocals,
            'holds': holds}


__all__ = ['euler_product_bounds', 'c2_factorization_check', 'lambda_norm_bounds',
           'prime_sum_checks', 'mellin_kernel_check', 'classical_prime_checks']
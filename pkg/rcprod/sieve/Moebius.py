"""Moebius function on ideals and its truncations."""
from __future__ import absolute_import, division, print_function, unicode_literals

import itertools
from dataclasses import dataclass
from math import comb

from ..Constants import ValidationError, TheoremViolation
from ..quadfield import factor_ideal


def moebius(x):
    factors = factor_ideal(x)
    if any(ee > 1 for _, ee in factors):
        return 0
    return -1 if len(factors) % 2 else 1


@dataclass(frozen=True)
class MoebiusTruncation:
    """mu_R(d) = mu(d) when omega(d) <= R, else 0; psi_R(b) = sum_{d | b} mu_R(d)."""
    R: int

    def __post_init__(self):
        if self.R < 0:
            raise ValidationError("truncation level must be >= 0, got {}".format(self.R))

    def mu(self, x):
        factors = factor_ideal(x)
        if any(ee > 1 for _, ee in factors) or len(factors) > self.R:
            return 0
        return -1 if len(factors) % 2 else 1

    def psi(self, x):
        """Divisor sum of mu_R over a squarefree ideal, with |psi| <= C(omega - 1, R)."""
        factors = factor_ideal(x)
        if any(ee > 1 for _, ee in factors):
            raise ValidationError("{} is not squarefree".format(x))
        primes = [P for P, _ in factors]
        omega = len(primes)
        total = 0
        for size in range(min(self.R, omega) + 1):
            for _ in itertools.combinations(primes, size):
                total += (-1)**size
        if omega == 0:
            if total != 1:
                raise TheoremViolation("psi_R of the unit ideal is {}".format(total))
            return total
        if abs(total) > comb(omega - 1, self.R):
            err_str = "|psi_{}({})| = {} exceeds C({}, {})".format(
                self.R, x, abs(total), omega - 1, self.R)
            raise TheoremViolation(err_str)
        return total


def truncated_moebius(d_ideal, R):
    """Return (mu_R(d), psi_R(d)) for a squarefree ideal d."""
    trunc = MoebiusTruncation(R)
    psi = trunc.psi(d_ideal)
    return trunc.mu(d_ideal), psi

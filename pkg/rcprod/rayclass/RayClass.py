"""Narrow ray class groups H_q(K) with an explicit class map.

The modulus is an integral ideal q together with every real place.  H_q(K) sits in

    (O/q)^* x {+-1}^{r1}  /  image of O^*   -->   H_q(K)   -->   Cl(K)   -->   1,

so |H_q(K)| = h * phi(q) * 2^{r1} / |unit image|.  The group is realized from generator
primes of bounded norm and certified by reaching exactly that order.

Classes
-------
    RayClassGroup : the group, its generator primes and the class map ``class_of``.

Functions
---------
-   ray_class_order          - Exact order from the exact sequence above.
-   is_ray_principal         - Membership of an ideal in the ray P_q.
-   build_ray_class_group    - Saturate relations among generator primes.
-   class_of                 - Class of an ideal coprime to q.
-   conductor_of_character   - Least q' | q through which a character factors.
-   ray_class_oracle_count   - Class count by pairwise equivalence tests (slow oracle).
-   quadratic_characters     - Order-two characters with their kernels.

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import functools
import itertools
import logging
import threading

from ..Constants import (ValidationError, RCProdError, UnsaturatedError, TheoremViolation,
                         GEN_NORM_BOUND)
from ..abgroup import group_from_relations, subgroup_generated, characters
from ..abgroup import quadratic_characters as _group_quadratic_characters
from ..quadfield import (field_invariants, enumerate_primes, factor_ideal, ideal_from_factors,
                         ideal_product, ideal_power, ideal_sum, ideal_conjugate,
                         unit_ideal, contains_element, narrow_principal_generator,
                         enumerate_ideals)
from .Residues import ResidueSignGroup, modulus_phi

log = logging.getLogger(__name__)


@functools.lru_cache(maxsize=64)
def residue_sign_group(q):
    return ResidueSignGroup(q)


def _check_modulus(spec, q):
    if q.field != spec:
        raise ValidationError("modulus {} does not belong to {}".format(q, spec))


def _check_coprime(q, x):
    if not ideal_sum(q, x).is_unit():
        raise ValidationError("ideal {} is not coprime to the modulus {}".format(x, q))


def ray_class_order(spec, q):
    """h * phi(q) * 2^{r1} / |image of the units in the residue-sign group|."""
    _check_modulus(spec, q)
    inv = field_invariants(spec)
    rs = residue_sign_group(q)
    num = inv.h*rs.order
    if num % rs.unit_image.order:
        raise RCProdError("unit image order {} does not divide {}".format(
            rs.unit_image.order, num))
    order = num//rs.unit_image.order
    h_narrow = inv.h_narrow
    # h_{K,1} | h_{K,q} | 2^{r1} phi(q) h_{K,1}, and h_{K,q} <= 2^{r1} phi(q) h_K
    if order % h_narrow or (rs.order*h_narrow) % order or order > rs.order*inv.h:
        err_str = "ray class order {} mod {} breaks the divisibility bounds (h+ = {})".format(
            order, q, h_narrow)
        raise TheoremViolation(err_str)
    return order


def is_ray_principal(spec, q, x):
    """True iff x = (gamma) with u*gamma = 1 mod q and totally positive for some unit u."""
    _check_modulus(spec, q)
    _check_coprime(q, x)
    res = narrow_principal_generator(x)
    if res is None:
        return False
    gen, _ = res
    return residue_sign_group(q).in_unit_image(gen)


def _generator_primes(spec, q, bound):
    return enumerate_primes(spec, bound, q)


class RayClassGroup(object):
    """H_q(K) as a ``FinAbGroup`` with classes of generator primes.

    Elements of the presentation are (x, y) with x an exponent vector over the generator
    primes and y an element of the residue-sign quotient, standing for the ideal
    prod P_i^{x_i} times the class of any (alpha) with alpha in y.
    """

    def __init__(self, spec, q, gen_norm_bound, generators, presentation, reps, rs, order):
        self.field = spec
        self.modulus = q
        self.gen_norm_bound = gen_norm_bound
        self.generators = tuple(generators)
        self.presentation = presentation
        self.group = presentation.group
        self.order = order
        self._rs = rs
        self._reps = reps
        self._index = {P: ii for ii, P in enumerate(self.generators)}
        self._num_gens = len(self.generators)
        self._quot_rank = rs.quotient.group.rank
        self._extra = {}
        self._lock = threading.Lock()

    @property
    def residue_sign_group(self):
        return self._rs

    def _project(self, gen_vec, quot_elem=None):
        quot_elem = (0,)*self._quot_rank if quot_elem is None else tuple(quot_elem)
        return self.presentation.project(tuple(gen_vec) + quot_elem)

    def element_of_residue(self, quot_elem):
        return self._project((0,)*self._num_gens, quot_elem)

    def element_of_generator(self, ii):
        return self._project(tuple(int(jj == ii) for jj in range(self._num_gens)))

    def generator_classes(self):
        return [self.element_of_generator(ii) for ii in range(self._num_gens)]

    def principal_class(self, gen):
        """Class of (gen) for an integral gen coprime to q."""
        return self.element_of_residue(self._rs.quotient_image(gen))

    def _prime_class(self, P):
        if P in self._index:
            return self.element_of_generator(self._index[P])
        with self._lock:
            if P in self._extra:
                return self._extra[P]
            for vec, rep in self._reps:
                res = narrow_principal_generator(ideal_product(P.hnf, rep))
                if res is None:
                    continue
                # [P] + [rep] = [(gamma)]
                cls = self.group.sub(self.principal_class(res[0]), self._project(vec))
                self._extra[P] = cls
                log.debug(" - Extended class map of {} by {}".format(self, P))
                return cls
        err_str = "no class representative completes {} to a principal ideal".format(P)
        raise RCProdError(err_str)

    def class_of_factors(self, factors):
        """Class of prod P**e for a factorization into primes coprime to q."""
        cls = self.group.zero
        for P, ee in factors:
            cls = self.group.add(cls, self.group.scale(ee, self._prime_class(P)))
        return cls

    def class_of(self, x):
        _check_coprime(self.modulus, x)
        return self.class_of_factors(factor_ideal(x))

    def characters(self):
        return characters(self.group)

    def __str__(self):
        return "H_{}({})".format(self.modulus, self.field)

    def to_json(self):
        return {
            'field': self.field.label, 'modulus': str(self.modulus), 'order': self.order,
            'invariant_factors': self.group.to_json(),
            'gen_norm_bound': self.gen_norm_bound,
            'generators': [{'prime': P.to_json(), 'class': list(cc)}
                           for P, cc in zip(self.generators, self.generator_classes())],
        }


def build_ray_class_group(spec, q, gen_norm_bound=GEN_NORM_BOUND):
    """Build H_q(K) from the primes coprime to q of norm <= ``gen_norm_bound``.

    For each generator P_i in turn, the least k with P_i^k * I_r principal for a class
    representative I_r of the part of Cl(K) reached so far gives one relation
    k*e_i + v_r = image of the generator.  Together with the relations of the residue-sign
    quotient these present the subgroup generated so far.

    Raises
    ------
    UnsaturatedError
        If the presented group is smaller than ``ray_class_order``.

    """
    _check_modulus(spec, q)
    if gen_norm_bound < 2:
        raise ValidationError("generator norm bound must be >= 2, got {}".format(
            gen_norm_bound))
    expected = ray_class_order(spec, q)
    h = field_invariants(spec).h
    rs = residue_sign_group(q)
    quot = rs.quotient
    gens = _generator_primes(spec, q, gen_norm_bound)
    m = len(gens)
    kq = quot.group.rank

    reps = [((0,)*m, unit_ideal(spec))]
    rows = []
    for ii, P in enumerate(gens):
        found = None
        power = unit_ideal(spec)
        for k in range(1, h + 1):
            power = ideal_product(power, P.hnf)
            for vec, rep in reps:
                res = narrow_principal_generator(ideal_product(power, rep))
                if res is not None:
                    found = (k, vec, res[0])
                    break
            if found:
                break
        if found is None:
            raise RCProdError("no power of {} up to {} is principal modulo reps".format(P, h))
        k, vec, gamma = found
        gen_part = tuple(vv + k*int(jj == ii) for jj, vv in enumerate(vec))
        img = quot.project(rs.dlog(gamma))
        rows.append(gen_part + tuple(-cc for cc in img))
        if k > 1:
            powers = [ideal_power(P.hnf, jj) for jj in range(k)]
            reps = [(tuple(vv + jj*int(ll == ii) for ll, vv in enumerate(vec)),
                     ideal_product(rep, powers[jj]))
                    for vec, rep in reps for jj in range(k)]

    for jj, dd in enumerate(quot.group.invariant_factors):
        rows.append((0,)*m + tuple(dd*int(ll == jj) for ll in range(kq)))
    if m + kq == 0:
        pres = group_from_relations(0, [])
    else:
        pres = group_from_relations(m + kq, rows)

    achieved = pres.group.order
    if achieved != expected:
        err_str = ("generators of norm <= {} give order {} of {} for H_{}({}); "
                   "raise the generator bound").format(gen_norm_bound, achieved, expected, q,
                                                       spec)
        raise UnsaturatedError(err_str, achieved=achieved, expected=expected)
    rcg = RayClassGroup(spec, q, gen_norm_bound, gens, pres, reps, rs, expected)
    log.info(" - Built {}: {} with {} generator primes".format(rcg, rcg.group, m))
    return rcg


def class_of(rcg, x):
    return rcg.class_of(x)


def _modulus_divisors(q):
    factors = factor_ideal(q)
    divs = []
    for exps in itertools.product(*(range(ee + 1) for _, ee in factors)):
        divs.append(ideal_from_factors(q.field, [(P, ee) for (P, _), ee in zip(factors, exps)
                                                 if ee]))
    return sorted(divs, key=lambda dd: (dd.norm, str(dd)))


def conductor_of_character(rcg, chi):
    """Least divisor q' of q (by norm) such that ``chi`` factors through H_{q'}(K).

    ``chi`` factors through H_{q'} iff it vanishes on the image of the totally positive
    residues alpha = 1 mod q'; the index of that image is checked against |H_{q'}|.
    """
    if chi.group != rcg.group:
        raise ValidationError("character of {} given for {}".format(chi.group, rcg.group))
    rs = rcg.residue_sign_group
    spec, q = rcg.field, rcg.modulus
    keys = rs.unit_residue_keys()
    for qq in _modulus_divisors(q):
        kernel = [rcg.element_of_residue(rs.quotient.project(rs.dlog_key(key)))
                  for key in keys
                  if contains_element(qq, rs.key_element(key) - 1)]
        image = subgroup_generated(rcg.group, kernel)
        if rcg.order % image.order or rcg.order//image.order != ray_class_order(spec, qq):
            err_str = "H_{} maps onto a group of order {} != |H_{}| = {}".format(
                q, rcg.order//image.order, qq, ray_class_order(spec, qq))
            raise TheoremViolation(err_str)
        if all(chi.value(gg) == 0 for gg in kernel):
            return qq
    raise RCProdError("character {} does not factor through H_{}".format(chi.exponents, q))


def ray_equivalent(spec, q, x, y):
    """x ~ y in H_q(K) for ideals coprime to q and to its conjugate.

    With x*conj(y) = (gamma), x = (gamma/N(y))*y, so x ~ y iff gamma and the positive
    rational N(y) have the same image modulo the units.
    """
    res = narrow_principal_generator(ideal_product(x, ideal_conjugate(y)))
    if res is None:
        return False
    rs = residue_sign_group(q)
    diff = rs.group.sub(rs.dlog(res[0]), rs.dlog(spec.number(y.norm)))
    return diff in rs.unit_image


def ray_class_oracle_count(spec, q, norm_bound=None):
    """Number of ray classes met by ideals of norm <= ``norm_bound``.

    Ideals are compared pairwise with ``ray_equivalent``; the default bound is
    4*N(q)*h.  Only ideals coprime to q*conj(q) are used.
    """
    _check_modulus(spec, q)
    if norm_bound is None:
        norm_bound = 4*q.norm*field_invariants(spec).h
    qq = ideal_product(q, ideal_conjugate(q))
    reps = []
    for x in enumerate_ideals(spec, norm_bound, qq):
        if not any(ray_equivalent(spec, q, x, rr) for rr in reps):
            reps.append(x)
    log.debug(" - Oracle for H_{}({}): {} classes below norm {}".format(
        q, spec, len(reps), norm_bound))
    return len(reps)


def quadratic_characters(rcg):
    """Order-two characters of ``rcg`` with their (index-two) kernels."""
    res = []
    for chi in _group_quadratic_characters(rcg.group):
        ker = chi.kernel()
        if ker.index != 2:
            raise TheoremViolation("quadratic character with kernel of index {}".format(
                ker.index))
        res.append((chi, ker))
    return res


__all__ = ['RayClassGroup', 'modulus_phi', 'ray_class_order', 'is_ray_principal',
           'build_ray_class_group', 'class_of', 'conductor_of_character',
           'ray_equivalent', 'ray_class_oracle_count', 'quadratic_characters']

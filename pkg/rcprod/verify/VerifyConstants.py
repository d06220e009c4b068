"""Constants for the experiment harness.

Classes
-------
    REPORT     : enum-type class for experiment report dictionary keys.
    VERDICT    : enum-type class for report verdicts.
    EXPERIMENT : enum-type class for experiment identifiers.

"""
from __future__ import absolute_import, division, print_function, unicode_literals


class REPORT():
    # Meta Data
    EXPERIMENT = 'experiment'
    FIELD      = 'field'
    MODULUS    = 'modulus'
    PARAMS     = 'params'
    VERSION    = 'version'
    SEED       = 'seed'
    RUNTIME    = 'runtime_ms'

    # Results
    PER_CLASS  = 'per_class'
    EXTREMA    = 'extrema'
    BOUND_LOG  = 'bound_log'
    VERDICT    = 'verdict'
    NOTES      = 'notes'

REPORT_KEYS = [REPORT.EXPERIMENT, REPORT.FIELD, REPORT.MODULUS, REPORT.PARAMS,
               REPORT.VERSION, REPORT.SEED, REPORT.PER_CLASS, REPORT.EXTREMA,
               REPORT.BOUND_LOG, REPORT.VERDICT, REPORT.NOTES, REPORT.RUNTIME]


class VERDICT():
    HOLDS        = 'holds'
    VACUOUS      = 'vacuous-hypothesis'
    VIOLATED     = 'violated'
    INSUFFICIENT = 'insufficient X_max'
    NO_QUADRATIC = 'no quadratic characters'

VERDICTS = [VERDICT.HOLDS, VERDICT.VACUOUS, VERDICT.VIOLATED, VERDICT.INSUFFICIENT,
            VERDICT.NO_QUADRATIC]


class EXPERIMENT():
    THREE_PRIMES    = 'three-primes'
    DEGREE_ONE      = 'degree-one-ideal'
    KERNEL_PRIME    = 'kernel-prime'
    BRUN_TITCHMARSH = 'brun-titchmarsh'
    IDEAL_COUNT     = 'ideal-count'
    COVER           = 'cover'
    CLASSICAL       = 'classical-primes'
    KNESER          = 'kneser'
    COVER_SWEEP     = 'cover-sweep'

# Experiments run per (field, modulus) by ``run_all``
PER_MODULUS_EXPERIMENTS = [EXPERIMENT.THREE_PRIMES, EXPERIMENT.DEGREE_ONE,
                           EXPERIMENT.KERNEL_PRIME, EXPERIMENT.BRUN_TITCHMARSH,
                           EXPERIMENT.IDEAL_COUNT, EXPERIMENT.COVER]
GLOBAL_EXPERIMENTS = [EXPERIMENT.CLASSICAL, EXPERIMENT.KNESER, EXPERIMENT.COVER_SWEEP]
EXPERIMENTS = PER_MODULUS_EXPERIMENTS + GLOBAL_EXPERIMENTS

# X values for the counting experiments
COUNT_X_LIST = (100, 1000, 10000)

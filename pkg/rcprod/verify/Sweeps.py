"""Run every experiment over a matrix of fields and moduli, optionally in parallel.

Tasks are plain tuples ``(experiment, d, m, params)`` so that they pickle cleanly; a task
with ``d`` and ``m`` of ``None`` is a field-independent experiment.  With more than one
thread the task list is split into contiguous chunks, one per worker process, and the
reports are merged and sorted afterwards, so the result does not depend on the thread count.

Functions
---------
-   build_tasks   - Task tuples for a list of experiments over the field/modulus matrix.
-   run_task      - Execute one task and return its report.
-   run_all       - Execute all tasks (serially or over a process pool).

"""
from __future__ import absolute_import, division, print_function, unicode_literals

import logging
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..Constants import (KERNEL_SCAN_LIMIT, SEED, THREADS, VERIFY_ALL_FIELDS,
                         VERIFY_ALL_MODULI, VERIFY_ALL_XMAX, ValidationError)
from ..quadfield import FieldSpec, rational_ideal, parse_ideal_spec
from ..rayclass import build_ray_class_group
from . import Experiments
from .Reports import sort_reports
from .VerifyConstants import (EXPERIMENT, PER_MODULUS_EXPERIMENTS, GLOBAL_EXPERIMENTS,
                              COUNT_X_LIST)

log = logging.getLogger(__name__)

CLASSICAL_X = 10**5


def build_tasks(experiments=None, fields=VERIFY_ALL_FIELDS, moduli=VERIFY_ALL_MODULI,
                x_max=VERIFY_ALL_XMAX, seed=SEED, classical_x=CLASSICAL_X):
    experiments = PER_MODULUS_EXPERIMENTS + GLOBAL_EXPERIMENTS if experiments is None \
        else list(experiments)
    unknown = set(experiments) - set(PER_MODULUS_EXPERIMENTS + GLOBAL_EXPERIMENTS)
    if unknown:
        raise ValidationError("unknown experiment(s) {}".format(sorted(unknown)))
    tasks = []
    for exp in experiments:
        if exp in GLOBAL_EXPERIMENTS:
            params = {EXPERIMENT.CLASSICAL: {'x_max': classical_x},
                      EXPERIMENT.KNESER: {'max_order': 12},
                      EXPERIMENT.COVER_SWEEP: {'seed': seed}}[exp]
            tasks.append((exp, None, None, params))
            continue
        for d in fields:
            for m in moduli:
                tasks.append((exp, d, m, {'x_max': x_max}))
    return tasks


def _modulus(spec, m):
    if isinstance(m, str):
        return parse_ideal_spec(spec, m)
    return rational_ideal(spec, m)


def run_task(task):
    """Execute one task.

    ``m`` is either a positive integer (the ideal (m)) or an ideal spec string.  Optional
    ``params`` keys: ``target`` (class, default the identity), ``x_list``, ``z`` and ``limit``.
    """
    exp, d, m, params = task
    if exp == EXPERIMENT.CLASSICAL:
        return Experiments.run_classical_primes(params['x_max'])
    if exp == EXPERIMENT.KNESER:
        return Experiments.run_kneser_sweep(params['max_order'])
    if exp == EXPERIMENT.COVER_SWEEP:
        return Experiments.run_cover_sweep(runs=params.get('runs', 200), seed=params['seed'])

    spec = FieldSpec(d)
    q = _modulus(spec, m)
    x_max = params['x_max']
    if exp == EXPERIMENT.THREE_PRIMES:
        return Experiments.run_three_primes(spec, q, x_max)
    if exp == EXPERIMENT.DEGREE_ONE:
        return Experiments.run_degree_one_ideal(spec, q, x_max)
    if exp == EXPERIMENT.KERNEL_PRIME:
        return Experiments.run_kernel_prime(spec, q, params.get('limit', KERNEL_SCAN_LIMIT))
    if exp == EXPERIMENT.COVER:
        return Experiments.run_cover_argument(spec, q, x_max)

    target = params.get('target')
    if target is None:
        target = build_ray_class_group(spec, q).group.zero
    X_list = params.get('x_list') or [X for X in COUNT_X_LIST if X <= x_max] or [x_max]
    if exp == EXPERIMENT.BRUN_TITCHMARSH:
        return Experiments.run_brun_titchmarsh(spec, q, target, X_list,
                                               params.get('z', Experiments.BT_SIEVE_LEVEL))
    return Experiments.run_ideal_count(spec, q, target, X_list)


def _run_chunk(tasks):
    return [run_task(task) for task in tasks]


def run_all(tasks=None, threads=THREADS, **kwargs):
    """Run ``tasks`` (default: ``build_tasks(**kwargs)``) and return the sorted reports."""
    tasks = build_tasks(**kwargs) if tasks is None else list(tasks)
    if threads < 1:
        raise ValidationError("threads must be >= 1, got {}".format(threads))
    log.info(" - Running {} task(s) on {} thread(s)".format(len(tasks), threads))
    if threads == 1 or len(tasks) <= 1:
        reports = _run_chunk(tasks)
    else:
        chunks = [[tasks[ii] for ii in idx]
                  for idx in np.array_split(np.arange(len(tasks)), threads) if len(idx)]
        reports = []
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            for res in pool.map(_run_chunk, chunks):
                reports.extend(res)
    return sort_reports(reports)

"""Experiment harness: theorem-level checks on ray class groups, emitted as structured reports.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

from .VerifyConstants import REPORT, VERDICT, EXPERIMENT, EXPERIMENTS  # noqa
from .Experiments import (run_three_primes, run_degree_one_ideal, run_kernel_prime,  # noqa
                          run_brun_titchmarsh, run_ideal_count, run_cover_argument,
                          run_classical_primes, run_kneser_sweep, run_cover_sweep,
                          new_report)
from .Reports import (finalize, render, write_reports, sort_reports, any_violated,  # noqa
                      FORMATS)
from .Sweeps import build_tasks, run_task, run_all  # noqa

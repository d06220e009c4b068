import csv
import io
import json
import math

import pytest

from rcprod.Constants import ValidationError
from rcprod.quadfield import rational_ideal
from rcprod.verify import Experiments
from rcprod.verify.VerifyConstants import REPORT_KEYS
from rcprod.verify import (REPORT, VERDICT, EXPERIMENT, run_three_primes, run_degree_one_ideal,
                           run_kernel_prime, run_brun_titchmarsh, run_ideal_count,
                           run_cover_argument, run_classical_primes, run_kneser_sweep,
                           run_cover_sweep, finalize, render, write_reports, sort_reports,
                           any_violated, build_tasks, run_task, run_all,
                           new_report)


def _minima(rep):
    return {tuple(row['class']): row['min_norm'] for row in rep[REPORT.PER_CLASS]}


def test_three_primes(gauss, gauss_mod3):
    rep = run_three_primes(gauss, gauss_mod3, 100)
    assert rep[REPORT.EXPERIMENT] == EXPERIMENT.THREE_PRIMES
    assert rep[REPORT.FIELD] == 'Q(sqrt:-1)'
    assert _minima(rep) == {(0,): 13, (1,): 5}
    assert rep[REPORT.EXTREMA]['covered']
    assert rep[REPORT.EXTREMA]['conjugation_symmetric']
    assert rep[REPORT.VERDICT] == VERDICT.HOLDS
    assert rep[REPORT.RUNTIME] >= 0


def test_three_primes_insufficient(gauss, gauss_mod3):
    rep = run_three_primes(gauss, gauss_mod3, 10)
    assert rep[REPORT.VERDICT] == VERDICT.INSUFFICIENT
    assert _minima(rep) == {(0,): None, (1,): 5}


def test_degree_one_ideal(gauss, gauss_mod3):
    rep = run_degree_one_ideal(gauss, gauss_mod3, 100)
    assert _minima(rep) == {(0,): 4, (1,): 2}
    assert rep[REPORT.VERDICT] == VERDICT.HOLDS


def test_kernel_prime(gauss, gauss_mod3):
    rep = run_kernel_prime(gauss, gauss_mod3)
    row, = rep[REPORT.PER_CLASS]
    assert row['least_in_kernel'] == 13
    assert row['least_outside_kernel'] == 5
    assert rep[REPORT.VERDICT] == VERDICT.HOLDS


def test_kernel_prime_without_quadratic_characters(gauss):
    rep = run_kernel_prime(gauss, rational_ideal(gauss, 1))
    assert rep[REPORT.VERDICT] == VERDICT.NO_QUADRATIC


def test_brun_titchmarsh_is_vacuous_at_desk_scale(gauss, gauss_mod3):
    rep = run_brun_titchmarsh(gauss, gauss_mod3, (0,), X_list=(100, 1000))
    assert rep[REPORT.VERDICT] == VERDICT.VACUOUS
    assert [ee['X'] for ee in rep[REPORT.PER_CLASS]] == [100, 1000]
    assert all(ee['sieve_holds'] for ee in rep[REPORT.PER_CLASS])
    assert all('bt_tri_rhs' not in ee and 'coset_rhs' not in ee for ee in rep[REPORT.PER_CLASS])
    assert rep[REPORT.PER_CLASS][0]['count'] <= rep[REPORT.PER_CLASS][1]['count']


def test_brun_titchmarsh_failed_sieve_bound(monkeypatch, gauss, gauss_mod3):
    def failing(rcg, target, X, z):
        return {'rhs': 0.0, 'holds': False}

    monkeypatch.setattr(Experiments, 'selberg_pointwise_bound', failing)
    rep = run_brun_titchmarsh(gauss, gauss_mod3, (0,), X_list=(100,))
    assert rep[REPORT.VERDICT] == VERDICT.VIOLATED
    assert rep[REPORT.NOTES] == ["sieve_holds fails at X = 100"]


def _shifted_ledger(monkeypatch, threshold):
    real = Experiments._ledger

    def shifted(spec, q):
        led = real(spec, q)
        led.add('bt_tri_threshold', threshold)
        return led

    monkeypatch.setattr(Experiments, '_ledger', shifted)


def test_brun_titchmarsh_class_bound_evaluated(monkeypatch, gauss, gauss_mod3):
    # log denominator 0.01 at X = 1000
    _shifted_ledger(monkeypatch, math.log(1000) - 0.01)
    rep = run_brun_titchmarsh(gauss, gauss_mod3, (0,), X_list=(1000,))
    entry, = rep[REPORT.PER_CLASS]
    assert entry['bt_tri_rhs'] == pytest.approx(1.0e5, rel=1e-6)
    assert entry['bt_tri_holds']
    assert rep[REPORT.VERDICT] == VERDICT.HOLDS


def test_brun_titchmarsh_class_bound_violated(monkeypatch, gauss, gauss_mod3):
    _shifted_ledger(monkeypatch, -1.0e6)
    rep = run_brun_titchmarsh(gauss, gauss_mod3, (0,), X_list=(1000,))
    entry, = rep[REPORT.PER_CLASS]
    assert entry['count'] >= 1
    assert entry['bt_tri_rhs'] < 1
    assert not entry['bt_tri_holds']
    assert rep[REPORT.VERDICT] == VERDICT.VIOLATED


def test_ideal_count(gauss, gauss_mod3):
    rep = run_ideal_count(gauss, gauss_mod3, (1,), X_list=(100, 1000))
    assert rep[REPORT.VERDICT] == VERDICT.HOLDS
    assert all(ee['holds'] for ee in rep[REPORT.PER_CLASS])


def test_cover_argument(gauss, gauss_mod3):
    rep = run_cover_argument(gauss, gauss_mod3, 6)
    assert not rep[REPORT.EXTREMA]['covered']
    assert rep[REPORT.EXTREMA]['minimal_covering_X'] == 14
    rep = run_cover_argument(gauss, gauss_mod3, 14)
    assert rep[REPORT.EXTREMA]['covered']
    assert rep[REPORT.VERDICT] == VERDICT.HOLDS


def test_global_experiments():
    assert run_classical_primes(1000)[REPORT.VERDICT] == VERDICT.HOLDS
    assert run_classical_primes(50)[REPORT.VERDICT] == VERDICT.HOLDS
    assert run_kneser_sweep(6)[REPORT.VERDICT] == VERDICT.HOLDS
    rep = run_cover_sweep(runs=20, max_order=30, seed=3)
    assert rep[REPORT.SEED] == 3
    assert rep[REPORT.VERDICT] == VERDICT.HOLDS


def test_finalize_and_render(gauss, gauss_mod3):
    reports = [run_degree_one_ideal(gauss, gauss_mod3, 100),
               run_classical_primes(200)]
    final = finalize(reports, seed=11)
    assert [rep[REPORT.EXPERIMENT] for rep in final] == [EXPERIMENT.CLASSICAL,
                                                         EXPERIMENT.DEGREE_ONE]
    assert all(rep[REPORT.RUNTIME] is None for rep in final)
    assert all(rep[REPORT.SEED] == 11 for rep in final)
    # inputs are left untouched
    assert reports[0][REPORT.RUNTIME] is not None

    data = json.loads(render(final, 'json'))
    assert data[1][REPORT.VERDICT] == VERDICT.HOLDS
    rows = list(csv.DictReader(io.StringIO(render(final, 'csv'))))
    assert len(rows) == 2 + 2
    assert rows[0][REPORT.EXPERIMENT] == EXPERIMENT.CLASSICAL
    text = render(final, 'text')
    assert text.splitlines()[0].startswith(REPORT.EXPERIMENT)
    with pytest.raises(ValueError):
        render(final, 'xml')
    assert not any_violated(final)
    assert any_violated([{**final[0], REPORT.VERDICT: VERDICT.VIOLATED}])


def test_write_reports(tmp_path, gauss, gauss_mod3):
    final = finalize([run_kernel_prime(gauss, gauss_mod3)])
    out = tmp_path / 'sub' / 'reports.json'
    text = write_reports(final, 'json', out=str(out))
    assert out.read_text() == text
    stream = io.StringIO()
    write_reports(final, 'text', stream=stream)
    assert 'kernel-prime' in stream.getvalue()


def test_new_report_skeleton(gauss, gauss_mod3):
    rep = new_report('rayclass', gauss, gauss_mod3, {'z': 5})
    assert set(rep) == set(REPORT_KEYS)
    assert rep[REPORT.FIELD] == 'Q(sqrt:-1)'
    assert rep[REPORT.PARAMS] == {'z': 5}
    assert rep[REPORT.VERDICT] is None
    assert rep[REPORT.PER_CLASS] == [] and rep[REPORT.NOTES] == []


def test_build_tasks():
    tasks = build_tasks([EXPERIMENT.COVER, EXPERIMENT.KNESER], fields=[-1, 2], moduli=[1, 3],
                        x_max=50)
    assert len(tasks) == 4 + 1
    assert (EXPERIMENT.KNESER, None, None, {'max_order': 12}) in tasks
    with pytest.raises(ValidationError):
        build_tasks(['bogus'])


def test_run_task_parses_modulus_specs():
    rep = run_task((EXPERIMENT.DEGREE_ONE, -1, "(3)", {'x_max': 100}))
    assert _minima(rep) == {(0,): 4, (1,): 2}
    rep = run_task((EXPERIMENT.IDEAL_COUNT, -1, 3, {'x_max': 100}))
    assert rep[REPORT.PARAMS]['class'] == [0]
    assert rep[REPORT.PARAMS]['X_list'] == [100]


def test_run_all_independent_of_threads():
    tasks = build_tasks([EXPERIMENT.DEGREE_ONE, EXPERIMENT.COVER], fields=[-1, -3],
                        moduli=[1, 3], x_max=60)
    serial = finalize(run_all(tasks, threads=1))
    parallel = finalize(run_all(tasks, threads=2))
    assert render(serial) == render(parallel)
    assert sort_reports(serial) == serial
    with pytest.raises(ValidationError):
        run_all(tasks, threads=0)


@pytest.mark.slow
def test_run_all_default_matrix():
    reports = finalize(run_all())
    assert not any_violated(reports)


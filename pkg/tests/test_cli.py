import io
import json

import pytest

from rcprod import cli, Constants
from rcprod.Constants import TheoremViolation, FactoringCapError
from rcprod.verify import REPORT, VERDICT

GAUSS = ['--field', 'Q(sqrt:-1)', '--modulus', '(3)']


def _run(argv):
    stream = io.StringIO()
    status = cli.main(argv, stream=stream)
    return status, stream.getvalue()


def _error_payload(capsys):
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


@pytest.mark.parametrize('argv', [[], ['bogus'], ['field-info'],
                                  ['field-info', '--field', 'Q(sqrt:4)'],
                                  ['rayclass', '--field', 'Q(sqrt:-1)', '--modulus', 'three'],
                                  ['verify', 'cover', '--field', 'Q(sqrt:-1)']])
def test_usage_errors(argv):
    status, out = _run(argv)
    assert status == cli.EXIT_USAGE
    assert out == ""


def test_invalid_threads_env(monkeypatch):
    monkeypatch.setenv('RCPROD_THREADS', 'many')
    status, _ = _run(['field-info', '--field', 'Q(sqrt:-1)'])
    assert status == cli.EXIT_USAGE


def test_parse_args():
    plan = cli.parse_args(['verify', 'ideal-count'] + GAUSS + ['--class', '1', '--xmax', '500',
                                                              '--threads', '2'])
    assert plan.command == 'verify'
    assert plan.experiment == 'ideal-count'
    assert plan.spec.d == -1
    assert plan.modulus_text == '(3)'
    assert plan.params['target'] == (1,)
    assert plan.params['xmax'] == 500
    assert plan.threads == 2
    assert plan.fmt == 'json'
    plan = cli.parse_args(['verify', 'kneser', '--max-order', '6'])
    assert plan.spec is None
    assert cli._verify_tasks(plan) == [('kneser', None, None, {'max_order': 6})]


def test_field_info():
    status, out = _run(['field-info', '--field', 'Q(sqrt:-5)'])
    assert status == cli.EXIT_OK
    rep, = json.loads(out)
    assert rep[REPORT.PER_CLASS][0]['h'] == 2


def test_rayclass():
    status, out = _run(['rayclass'] + GAUSS)
    assert status == cli.EXIT_OK
    rep, = json.loads(out)
    assert rep[REPORT.EXTREMA]['order'] == 2
    assert len(rep[REPORT.EXTREMA]['conductors']) == 2


def test_primes_csv():
    status, out = _run(['primes'] + GAUSS + ['--xmax', '30', '--format', 'csv'])
    assert status == cli.EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith('experiment,field,modulus,verdict')
    assert len(lines) == 1 + 8


def test_sieve_check():
    status, out = _run(['sieve-check'] + GAUSS + ['--z', '5'])
    assert status == cli.EXIT_OK
    rep, = json.loads(out)
    assert rep[REPORT.EXTREMA]['reciprocal_identity']
    assert rep[REPORT.EXTREMA]['G'] == 2.5


def test_verify_cover():
    status, out = _run(['verify', 'cover'] + GAUSS + ['--xmax', '14'])
    assert status == cli.EXIT_OK
    rep, = json.loads(out)
    assert rep[REPORT.EXTREMA]['covered']
    assert rep[REPORT.EXTREMA]['minimal_covering_X'] == 14
    assert rep[REPORT.RUNTIME] is None
    assert rep[REPORT.SEED] == 42


def test_verify_text_and_timing():
    status, out = _run(['verify', 'kernel-prime'] + GAUSS + ['--format', 'text', '--timing'])
    assert status == cli.EXIT_OK
    header, rule, row = out.splitlines()
    assert 'runtime_ms' in header
    assert row.split()[:4] == ['kernel-prime', 'Q(sqrt:-1)', '(3)', 'holds']


def test_output_is_reproducible():
    argv = ['verify', 'degree-one-ideal'] + GAUSS + ['--xmax', '100']
    assert _run(argv) == _run(argv)


def test_out_file(tmp_path):
    out = tmp_path / 'report.json'
    status, printed = _run(['verify', 'cover-sweep', '--runs', '10', '--seed', '5',
                            '--out', str(out)])
    assert status == cli.EXIT_OK
    assert printed == ""
    rep, = json.loads(out.read_text())
    assert rep[REPORT.SEED] == 5


def test_theorem_violation_exit(monkeypatch, capsys):
    def boom(plan):
        raise TheoremViolation("forced")

    monkeypatch.setitem(cli._DISPATCH, 'field-info', boom)
    status, _ = _run(['field-info', '--field', 'Q(sqrt:-1)'])
    assert status == cli.EXIT_VIOLATED
    assert _error_payload(capsys)['error'] == 'TheoremViolation'


def test_violated_verdict_exit(monkeypatch):
    def violated(plan):
        rep = cli._report('field-info', plan, {})
        rep[REPORT.VERDICT] = VERDICT.VIOLATED
        return [rep]

    monkeypatch.setitem(cli._DISPATCH, 'field-info', violated)
    status, out = _run(['field-info', '--field', 'Q(sqrt:-1)'])
    assert status == cli.EXIT_VIOLATED
    assert json.loads(out)[0][REPORT.VERDICT] == VERDICT.VIOLATED


def test_cap_error_exit(monkeypatch, capsys):
    def capped(plan):
        raise FactoringCapError("norm too large")

    monkeypatch.setitem(cli._DISPATCH, 'primes', capped)
    status, _ = _run(['primes'] + GAUSS + ['--xmax', '10'])
    assert status == cli.EXIT_UNDECIDED
    assert _error_payload(capsys)['status'] == cli.EXIT_UNDECIDED


def test_unsaturated_generators_exit(capsys):
    status, out = _run(['rayclass', '--field', 'Q(sqrt:-1)', '--modulus', '(7)',
                        '--gen-bound', '2'])
    assert status == cli.EXIT_UNDECIDED
    assert out == ""
    payload = _error_payload(capsys)
    assert payload['error'] == 'UnsaturatedError'
    assert payload['expected'] == 12


def test_logger_writes_file_without_stacking(monkeypatch, tmp_path):
    monkeypatch.setattr(Constants, '_LOG_DIR', str(tmp_path / 'logs'))
    logger = Constants._loadLogger('rcprod_check', verbose=False, tofile=True)
    num = len(logger.handlers)
    assert (tmp_path / 'logs').is_dir()
    assert not logger.propagate
    again = Constants._loadLogger('rcprod_check', verbose=False, tofile=True)
    assert again is logger
    assert len(again.handlers) == num
    for hand in list(logger.handlers):
        hand.close()
        logger.removeHandler(hand)

"""Command-line front end of ``rcprod``.

Commands
--------
    field-info      invariants of a quadratic field
    rayclass        structure and generator classes of H_q(K)
    primes          degree-one primes up to a norm bound, with their ray classes
    sieve-check     Selberg weights, the reciprocal identity and the G_q(z) lower bounds
    analytic-check  norm, Mellin and integral claims for the smoothing polynomial w_0
    verify          one experiment, or ``all`` over the configured matrix

Exit statuses
-------------
    0 success; 1 a 'violated' verdict or ``TheoremViolation``; 2 usage or ``ValidationError``;
    3 ``UndecidedError``, ``FactoringCapError``, ``TableCapError`` or ``UnsaturatedError``.

Reports go to stdout (or ``--out``), log messages to stderr.
"""
from __future__ import absolute_import, division, print_function, unicode_literals

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from . import __version__
from .Constants import (GEN_NORM_BOUND, SEED, VERBOSE, VERIFY_ALL_FIELDS, VERIFY_ALL_MODULI,
                        VERIFY_ALL_XMAX, ValidationError, TheoremViolation, UndecidedError,
                        FactoringCapError, TableCapError, UnsaturatedError, get_threads,
                        _loadLogger)
from .quadfield import (parse_field_spec, parse_ideal_spec, field_invariants,
                        enumerate_degree_one_primes)
from .rayclass import build_ray_class_group, conductor_of_character
from .sieve import (make_sieve_context, lambda_table, verify_reciprocal_identity,
                    g_lower_bound_checks, lambda_norm_bounds)
from .analytic import verify_smoothing_claims
from .verify import (REPORT, VERDICT, EXPERIMENT, EXPERIMENTS, FORMATS, run_all, finalize,
                     write_reports, any_violated, new_report)
from .verify.Sweeps import build_tasks, CLASSICAL_X

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3

_CAP_ERRORS = (UndecidedError, FactoringCapError, TableCapError, UnsaturatedError)

COMMANDS = ('field-info', 'rayclass', 'primes', 'sieve-check', 'analytic-check', 'verify')
_ALL = 'all'

log = logging.getLogger('rcprod')


@dataclass
class CommandPlan:
    command: str
    spec: object = None
    modulus: object = None
    modulus_text: str = None
    experiment: str = None
    params: dict = field(default_factory=dict)
    fmt: str = 'json'
    out: str = None
    threads: int = 1
    seed: int = SEED
    timing: bool = False
    verbose: bool = VERBOSE
    debug: bool = False


def _buildParser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', type=str, default=None, help='Write the report to this file')
    common.add_argument('--format', dest='fmt', choices=FORMATS, default='json',
                        help='Report format')
    common.add_argument('--threads', type=int, default=None,
                        help='Worker processes (overrides $RCPROD_THREADS)')
    common.add_argument('--seed', type=int, default=SEED, help='Seed of randomized sweeps')
    common.add_argument('--timing', action='store_true', help='Emit runtimes in reports')
    common.add_argument('-v', '--verbose', action='store_true', default=VERBOSE,
                        help='Verbose output')
    common.add_argument('--debug', action='store_true', help='Debug output')

    parser = argparse.ArgumentParser(prog='rcprod', description=__doc__.splitlines()[0])
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    subs = parser.add_subparsers(dest='command', metavar='command')

    sub = subs.add_parser('field-info', parents=[common], help='Field invariants')
    sub.add_argument('--field', required=True)

    sub = subs.add_parser('rayclass', parents=[common], help='Ray class group structure')
    sub.add_argument('--field', required=True)
    sub.add_argument('--modulus', required=True)
    sub.add_argument('--gen-bound', dest='gen_bound', type=int, default=GEN_NORM_BOUND)

    sub = subs.add_parser('primes', parents=[common], help='Degree-one primes and classes')
    sub.add_argument('--field', required=True)
    sub.add_argument('--modulus', required=True)
    sub.add_argument('--xmax', type=int, required=True)
    sub.add_argument('--include-ramified', dest='include_ramified', action='store_true')

    sub = subs.add_parser('sieve-check', parents=[common], help='Selberg sieve checks')
    sub.add_argument('--field', required=True)
    sub.add_argument('--modulus', required=True)
    sub.add_argument('--z', type=int, required=True)
    sub.add_argument('--alpha', type=str, default='0')

    sub = subs.add_parser('analytic-check', parents=[common], help='Smoothing function checks')
    sub.add_argument('--n', type=int, required=True)

    sub = subs.add_parser('verify', parents=[common], help='Theorem-level experiments')
    sub.add_argument('experiment', choices=EXPERIMENTS + [_ALL])
    sub.add_argument('--field', default=None)
    sub.add_argument('--modulus', default=None)
    sub.add_argument('--xmax', type=int, default=None)
    sub.add_argument('--class', dest='target', type=str, default=None,
                     help='Target class as comma separated coordinates')
    sub.add_argument('--z', type=int, default=None)
    sub.add_argument('--limit', type=int, default=None, help='Kernel prime scan limit')
    sub.add_argument('--runs', type=int, default=200, help='Runs of the cover sweep')
    sub.add_argument('--max-order', dest='max_order', type=int, default=12,
                     help='Largest group order of the Kneser sweep')
    return parser


def _parseTarget(text):
    try:
        return tuple(int(tok) for tok in text.split(','))
    except ValueError:
        raise ValidationError("invalid class '{}'".format(text))


def _parseArguments(argv):
    """Parse ``argv`` into a validated ``CommandPlan``.

    Usage errors exit through ``SystemExit(2)``; malformed specs raise ``ValidationError``.
    """
    parser = _buildParser()
    if not argv:
        parser.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)

    threads = get_threads() if args.threads is None else args.threads
    if threads < 1:
        raise ValidationError("--threads must be positive, got {}".format(threads))
    plan = CommandPlan(args.command, fmt=args.fmt, out=args.out, threads=threads,
                       seed=args.seed, timing=args.timing, verbose=args.verbose,
                       debug=args.debug)

    if getattr(args, 'field', None) is not None:
        plan.spec = parse_field_spec(args.field)
    if getattr(args, 'modulus', None) is not None:
        if plan.spec is None:
            raise ValidationError("--modulus '{}' needs --field".format(args.modulus))
        plan.modulus = parse_ideal_spec(plan.spec, args.modulus)
        plan.modulus_text = args.modulus

    if args.command == 'rayclass':
        plan.params = {'gen_bound': args.gen_bound}
    elif args.command == 'primes':
        plan.params = {'xmax': args.xmax, 'include_ramified': args.include_ramified}
    elif args.command == 'sieve-check':
        plan.params = {'z': args.z, 'alpha': args.alpha}
    elif args.command == 'analytic-check':
        plan.params = {'n': args.n}
    elif args.command == 'verify':
        plan.experiment = args.experiment
        plan.params = {'xmax': args.xmax, 'z': args.z, 'limit': args.limit, 'runs': args.runs,
                       'max_order': args.max_order,
                       'target': None if args.target is None else _parseTarget(args.target)}
        per_modulus = args.experiment not in (
            EXPERIMENT.CLASSICAL, EXPERIMENT.KNESER, EXPERIMENT.COVER_SWEEP, _ALL)
        if per_modulus and (plan.spec is None or plan.modulus is None):
            raise ValidationError("verify {} needs --field and --modulus".format(
                args.experiment))
    return plan


def parse_args(argv):
    return _parseArguments(argv)


# Commands
# ========

def _report(command, plan, params):
    return new_report(command, plan.spec, plan.modulus, params)


def _field_info(plan):
    rep = _report('field-info', plan, {})
    rep[REPORT.PER_CLASS] = [field_invariants(plan.spec).to_json()]
    rep[REPORT.VERDICT] = VERDICT.HOLDS
    return [rep]


def _rayclass(plan):
    rep = _report('rayclass', plan, plan.params)
    rcg = build_ray_class_group(plan.spec, plan.modulus, plan.params['gen_bound'])
    data = rcg.to_json()
    rep[REPORT.PER_CLASS] = data.pop('generators')
    data['conductors'] = [{'character': chi.to_json(), 'conductor': str(cond)}
                          for chi, cond in ((chi, conductor_of_character(rcg, chi))
                                            for chi in rcg.characters())]
    rep[REPORT.EXTREMA] = data
    rep[REPORT.VERDICT] = VERDICT.HOLDS
    return [rep]


def _primes(plan):
    rep = _report('primes', plan, plan.params)
    spec, q = plan.spec, plan.modulus
    primes = enumerate_degree_one_primes(spec, plan.params['xmax'], q,
                                         include_ramified=plan.params['include_ramified'])
    rcg = build_ray_class_group(spec, q)
    rows = []
    for P in primes:
        row = P.to_json()
        row['class'] = list(rcg.class_of_factors(((P, 1),)))
        rows.append(row)
    rep[REPORT.PER_CLASS] = rows
    rep[REPORT.EXTREMA] = {'count': len(rows)}
    rep[REPORT.VERDICT] = VERDICT.HOLDS
    return [rep]


def _sieve_check(plan):
    rep = _report('sieve-check', plan, plan.params)
    ctx = make_sieve_context(plan.spec, plan.modulus, plan.params['z'])
    table = lambda_table(ctx)
    identity = verify_reciprocal_identity(ctx, table)
    if not identity:
        raise TheoremViolation("reciprocal identity fails for {}".format(ctx))
    data = table.to_json()
    rep[REPORT.PER_CLASS] = data['weights']
    rep[REPORT.EXTREMA] = {'G': data['G'], 'reciprocal_identity': identity,
                           'lower_bounds': g_lower_bound_checks(ctx, table),
                           'norm_bounds': lambda_norm_bounds(table, plan.params['alpha'])}
    rep[REPORT.VERDICT] = VERDICT.HOLDS
    return [rep]


def _analytic_check(plan):
    rep = _report('analytic-check', plan, plan.params)
    rec = verify_smoothing_claims(plan.params['n'])
    rep[REPORT.PER_CLASS] = [{'claim': kk, **vv} for kk, vv in rec.items()
                             if isinstance(vv, dict)]
    rep[REPORT.EXTREMA] = {'integrals': rec['integrals']}
    rep[REPORT.VERDICT] = VERDICT.HOLDS if rec['holds'] else VERDICT.VIOLATED
    return [rep]


def _verify_tasks(plan):
    pars = plan.params
    if plan.experiment == _ALL:
        fields = VERIFY_ALL_FIELDS if plan.spec is None else (plan.spec.d,)
        moduli = VERIFY_ALL_MODULI if plan.modulus is None else (plan.modulus_text,)
        return build_tasks(fields=fields, moduli=moduli,
                           x_max=pars['xmax'] or VERIFY_ALL_XMAX, seed=plan.seed,
                           classical_x=pars['xmax'] or CLASSICAL_X)

    exp = plan.experiment
    if exp == EXPERIMENT.CLASSICAL:
        return [(exp, None, None, {'x_max': pars['xmax'] or CLASSICAL_X})]
    if exp == EXPERIMENT.KNESER:
        return [(exp, None, None, {'max_order': pars['max_order']})]
    if exp == EXPERIMENT.COVER_SWEEP:
        return [(exp, None, None, {'runs': pars['runs'], 'seed': plan.seed})]
    params = {'x_max': pars['xmax'] or VERIFY_ALL_XMAX}
    for key in ('target', 'z', 'limit'):
        if pars[key] is not None:
            params[key] = pars[key]
    return [(exp, plan.spec.d, plan.modulus_text, params)]


def _verify(plan):
    return run_all(tasks=_verify_tasks(plan), threads=plan.threads)


_DISPATCH = {
    'field-info': _field_info,
    'rayclass': _rayclass,
    'primes': _primes,
    'sieve-check': _sieve_check,
    'analytic-check': _analytic_check,
    'verify': _verify,
}


def execute(plan, stream=None):
    """Run ``plan``, write its report and return the exit status."""
    stream = sys.stdout if stream is None else stream
    reports = _DISPATCH[plan.command](plan)
    reports = finalize(reports, timing=plan.timing, seed=plan.seed)
    write_reports(reports, plan.fmt, out=plan.out, stream=stream)
    if any_violated(reports):
        log.error("Violated verdict in {} report(s)".format(
            sum(rep[REPORT.VERDICT] == VERDICT.VIOLATED for rep in reports)))
        return EXIT_VIOLATED
    return EXIT_OK


def _error(err, status):
    payload = {'error': type(err).__name__, 'message': str(err), 'status': status}
    for attr in ('achieved', 'expected'):
        if getattr(err, attr, None) is not None:
            payload[attr] = getattr(err, attr)
    sys.stderr.write(json.dumps(payload, sort_keys=True) + "\n")
    return status


def main(argv=None, stream=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        plan = _parseArguments(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code is None else err.code
    except ValidationError as err:
        return _error(err, EXIT_USAGE)

    _loadLogger('rcprod', verbose=plan.verbose, debug=plan.debug)
    log.info("rcprod {}: {} {}".format(__version__, plan.command, plan.experiment or ""))
    try:
        return execute(plan, stream=stream)
    except TheoremViolation as err:
        return _error(err, EXIT_VIOLATED)
    except ValidationError as err:
        return _error(err, EXIT_USAGE)
    except _CAP_ERRORS as err:
        return _error(err, EXIT_UNDECIDED)

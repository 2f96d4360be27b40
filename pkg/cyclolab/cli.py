import argparse
import logging
import sys
from typing import List, Optional

from cyclolab.models.config import RunConfig, SUITES
from .cyclo_api import Cyclo
from .cyclo_dataadapter import FORMATS
from .cyclo_module import parse_range, parse_split, parse_int_list
from .exceptions import (
    TheCycloLabException,
    InvalidArgument,
    InsufficientPrecision,
    EigenvalueRejected,
    )

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_REJECTED = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--range', dest='range_', type=str, default=None, help='prime range LO:HI')
    common.add_argument('--prime', type=int, default=None, help='single prime P')
    common.add_argument('--precision', type=int, default=None, help='coefficient precision a in [2, 8]')
    common.add_argument('--format', dest='output_format', choices=FORMATS, default='json')
    common.add_argument('--out', type=str, default=None, help='write the report here instead of stdout')
    common.add_argument('--seed', type=int, default=0)
    common.add_argument('--workers', type=int, default=1)
    common.add_argument('--verbose', action='store_true')

    parser = argparse.ArgumentParser(prog='cyclolab', description='pi-adic congruence checks for Q(zeta_p)')
    commands = parser.add_subparsers(dest='command', required=True)

    commands.add_parser('irregular', parents=[common], help='irregular pairs and minus eigenvalues')

    annihilator = commands.add_parser('annihilator', parents=[common], help='rank profile of an eigenvalue set')
    annihilator.add_argument('--mu', type=str, required=True, help='eigenvalues, e.g. 2,6')
    annihilator.add_argument('--split', action='append', default=[], help='coprime splitting d:g, repeatable')
    annihilator.add_argument('--u', type=int, default=None, help='primitive root, smallest by default')
    annihilator.add_argument('--vandiver', action='store_true', help='reject plus-part eigenvalues')

    singular = commands.add_parser('singular', parents=[common], help='closed-form singular candidate')
    singular.add_argument('--m', type=int, required=True, help='half index, 2m+1 > (p-1)/2')
    singular.add_argument('--gamma', type=int, default=1, help='free scalar gamma_{p-3}')
    singular.add_argument('--u', type=int, default=None, help='primitive root, smallest by default')

    units = commands.add_parser('units', parents=[common], help='cyclotomic unit survey')
    units.add_argument('--survey-precision', type=int, default=None)
    units.add_argument('--r-plus', type=int, default=0, help='assumed plus rank r_p^+')

    verify = commands.add_parser('verify', parents=[common], help='run the verification suites')
    verify.add_argument('--suites', type=str, default=','.join(SUITES), help='comma separated suite names')
    verify.add_argument('--fixtures', type=str, default=None, help='directory of CycloElem fixtures')
    verify.add_argument('--survey-precision', type=int, default=None)
    verify.add_argument('--pairs', type=int, default=None, help='Frobenius pairs per prime up to 13')
    verify.add_argument('--sets', type=int, default=None, help='random eigenvalue sets per prime above 13')

    return parser


def _bounds(args) -> tuple:
    if args.prime is not None:
        return args.prime, args.prime
    if args.range_ is not None:
        return parse_range(args.range_)
    return None, None


def _config(args) -> RunConfig:
    lo, hi = _bounds(args)
    suites = None
    if getattr(args, 'suites', None):
        suites = tuple(s.strip() for s in args.suites.split(',') if s.strip())
    return RunConfig.from_env(
        lo=lo, hi=hi, precision=args.precision, survey_precision=getattr(args, 'survey_precision', None),
        suites=suites, output_format=args.output_format, out=args.out, seed=args.seed, workers=args.workers,
        r_p_plus=getattr(args, 'r_plus', None), vandiver=getattr(args, 'vandiver', None),
        frobenius_pairs=getattr(args, 'pairs', None), sampled_sets=getattr(args, 'sets', None),
    )


def _single_prime(args) -> int:
    if args.prime is None:
        raise InvalidArgument(f'{args.command} needs --prime P')
    return args.prime


def cmd_irregular(cyclo: Cyclo, args) -> int:
    reports = cyclo.get_irregularities()
    code = EXIT_OK if all(r.consistent for r in reports) else EXIT_CHECK_FAILED
    cyclo.report('irregular', reports, code, 'ok' if code == EXIT_OK else 'inconsistent irregularity data')
    return code


def cmd_annihilator(cyclo: Cyclo, args) -> int:
    p = _single_prime(args)
    splittings = [parse_split(s) for s in args.split]
    profile = cyclo.get_annihilator_profile(p, parse_int_list(args.mu), splittings, args.u)
    code = EXIT_OK if profile['passed'] else EXIT_CHECK_FAILED
    cyclo.report('annihilator', [profile], code, 'ok' if code == EXIT_OK else 'rank inequality violated')
    return code


def cmd_singular(cyclo: Cyclo, args) -> int:
    p = _single_prime(args)
    record = cyclo.get_singular(p, args.m, args.gamma, args.u)
    ok = record['recurrence_agrees'] and not record['violations']
    code = EXIT_OK if ok else EXIT_CHECK_FAILED
    cyclo.report('singular', [record], code, 'ok' if ok else 'singular laws violated')
    return code


def cmd_units(cyclo: Cyclo, args) -> int:
    if args.prime is not None:
        reports = [cyclo.get_unit_survey(args.prime)]
    else:
        reports = cyclo.get_unit_surveys()
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED
    cyclo.report('units', reports, code, 'ok' if code == EXIT_OK else 'unit survey violations')
    return code


def cmd_verify(cyclo: Cyclo, args) -> int:
    results = cyclo.verify(fixtures=args.fixtures)
    code = EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED
    cyclo.report('verify', results, code, 'ok' if code == EXIT_OK else 'suite failures')
    return code


COMMANDS = {
    'irregular': cmd_irregular,
    'annihilator': cmd_annihilator,
    'singular': cmd_singular,
    'units': cmd_units,
    'verify': cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one cyclolab subcommand

    Parameters
    ----------
    argv : list
        arguments without the program name, sys.argv[1:] by default

    Returns
    -------
    int
        0 all checks pass, 1 a check failed, 2 usage or range error, 3 eigenvalue rejected
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    if args.verbose:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG)

    try:
        cyclo = Cyclo(_config(args))
        return COMMANDS[args.command](cyclo, args)
    except EigenvalueRejected as e:
        sys.stderr.write(f'error: {e}\n')
        return EXIT_REJECTED
    except (InvalidArgument, InsufficientPrecision) as e:
        sys.stderr.write(f'error: {e}\n')
        return EXIT_USAGE
    except TheCycloLabException as e:
        _logger.error(f'command={args.command}, error={type(e).__name__}, message={e}')
        sys.stderr.write(f'error: {e}\n')
        return EXIT_CHECK_FAILED


if __name__ == '__main__':
    sys.exit(main())

from .records import *
from .tables import *
from .fixtures import *
from .verification import *
from .quadrature import *

import argparse
import os
import sys

formatVariable = 'SECONDKIND_FORMAT'


class UsageError(Exception):
    pass


def defaultFormat() -> str:
    format = os.environ.get(formatVariable, 'plain')
    if format not in outputFormats:
        raise UsageError("{0}={1} is not one of {2}.".format(formatVariable, format, ", ".join(outputFormats)))
    return format


def buildParser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog='python -m secondkind',
                                 description="Stirling numbers of the first kind, Bernoulli numbers of the "
                                             "second kind and checks of their derivative and integral formulas.")
    commands = ap.add_subparsers(dest='command', metavar='command')
    commands.required = True

    table = commands.add_parser('table', help="Print the Stirling triangle or the coefficient table")
    table.add_argument("kind", choices=tableKinds, help="'stirling' for s(n,k), 'coeffs' for a(n,i)")
    table.add_argument("--n-max", type=int, default=10, help="Last row (default 10)")
    table.add_argument("--format", choices=outputFormats, default=None,
                       help="Output format (default ${0} or plain)".format(formatVariable))

    bernoulli = commands.add_parser('bernoulli2', help="Bernoulli number of the second kind b_n")
    bernoulli.add_argument("--n", type=int, required=True, help="Index n >= 0")
    bernoulli.add_argument("--method", choices=bernoulli2Methods, default='all',
                           help="Computation route (qi = coefficients, nemes = stirling), "
                                "or all of them compared (default all)")
    bernoulli.add_argument("--format", choices=outputFormats, default=None)

    verify = commands.add_parser('verify', help="Run a verification suite")
    verify.add_argument("suite", choices=suiteNames)
    verify.add_argument("--n-max", type=int, default=None, help="Largest index (default depends on the suite)")
    verify.add_argument("--tol", type=float, default=None, help="Relative tolerance of floating-point checks")
    verify.add_argument("--processes", type=int, default=1, help="Worker processes for the Stieltjes cases")
    verify.add_argument("--quadrature-n-max", type=int, default=8,
                        help="Largest n of the Gauss-Laguerre comparison (default 8)")

    oeis = commands.add_parser('oeis-check', help="Compare a local OEIS-style fixture file with computed values")
    oeis.add_argument("kind", choices=fixtureKinds)
    oeis.add_argument("--fixture", required=True, help="Fixture path, or 'bundled' for the shipped data")
    oeis.add_argument("--n-max", type=int, default=None, help="Skip rows with a larger n")
    return ap


def runTable(args) -> int:
    print(renderTable(args.kind, args.n_max, args.format or defaultFormat()), end='')
    return 0


def runBernoulli2(args) -> int:
    records = bernoulli2Records(args.n, args.method)
    print(renderRecords(records, args.format or defaultFormat()), end='')
    return 0 if all(record.status == 'ok' for record in records) else 1


def runVerify(args) -> int:
    results = runSuite(args.suite, nMax=args.n_max, tolerance=args.tol, processes=args.processes,
                       quadratureNMax=args.quadrature_n_max)
    print(formatReport(results), end='')
    return 0 if all(result.passed for result in results) else 1


def runOeisCheck(args) -> int:
    report = checkFixture(args.fixture, args.kind, nMax=args.n_max)
    print(report)
    return 0 if report.passed else 1


def main(argv=None) -> int:
    """Command-line entry point.

    Returns the exit status: 0 when everything requested succeeds, 1 when a
    check fails or methods disagree, 2 on usage or fixture parse errors.
    """
    ap = buildParser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exit:
        return exit.code if isinstance(exit.code, int) else 2

    commands = {'table': runTable, 'bernoulli2': runBernoulli2, 'verify': runVerify, 'oeis-check': runOeisCheck}
    try:
        return commands[args.command](args)
    except FixtureParseError as error:
        print("error: {0}".format(error), file=sys.stderr)
        return 2
    except FileNotFoundError as error:
        print("error: {0}".format(error), file=sys.stderr)
        return 2
    except (UsageError, ValueError, TypeError) as error:
        print("error: {0}".format(error), file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())

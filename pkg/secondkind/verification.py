from .utils import *
from .harmonicnest import *
from .stirling import *
from .coefficients import *
from .bernoulli import *
from .powerseries import *
from .derivatives import *
from .quadrature import *
from .integrals import *

import math
import multiprocessing
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

suiteNames = ('core', 'derivatives', 'thm41', 'thm42', 'conjecture', 'all')

defaultBounds = {'core': 25, 'derivatives': 8, 'thm41': 12, 'thm42': 5, 'conjecture': 40}
defaultTolerances = {'derivatives': 1e-9, 'thm41': 1e-8, 'thm42': 1e-5}

reciprocalLogAbscissae = (0.5, 2.0, 10.0)
shiftedLogAbscissae = (0.5, 2.0, 10.0)
xOverLogAbscissae = (0.7, 2.0, 5.0)
expReciprocalAbscissae = (0.5, 1.0, 3.0)
gammaStirlingAbscissae = (0.5, 1.0, 3.0)
smokeAbscissae = (1.0, math.e - 1, 9.0)
stieltjesAbscissae = (0.5, 1.0, math.e - 1, 9.0)


@dataclass(frozen=True)
class CheckResult:
    """One line of a verification report.

    Attributes
    ----------
    name : str
        What is compared.
    cases : str
        Range of indices or abscissae covered.
    maxResidual : float
        Largest relative residual over the cases (0 for exact checks that pass).
    passed : bool
    failures : tuple of str
        Description of every failing case.
    """
    name: str
    cases: str
    maxResidual: float
    passed: bool
    failures: tuple = field(default_factory=tuple)

    def __str__(self):
        line = "{0:<48} {1:<28} max residual {2:<10.3g} {3}".format(
            self.name, self.cases, self.maxResidual, "pass" if self.passed else "FAIL")
        for failure in self.failures:
            line += "\n    failed: {0}".format(failure)
        return line


def exactCheck(name: str, cases: str, comparisons) -> CheckResult:
    """ comparisons yields (label, computed, expected) with exact values """
    failures = []
    maxResidual = 0.0
    for label, computed, expected in comparisons:
        if computed != expected:
            if isinstance(computed, (int, Fraction)) and isinstance(expected, (int, Fraction)):
                maxResidual = max(maxResidual, relativeResidual(computed, expected))
            else:
                maxResidual = math.inf
            failures.append("{0}: computed {1}, expected {2}".format(label, computed, expected))
    return CheckResult(name=name, cases=cases, maxResidual=maxResidual, passed=not failures,
                       failures=tuple(failures))


def toleranceCheck(name: str, cases: str, comparisons, tolerance: float) -> CheckResult:
    """ comparisons yields (label, computed, reference) floats; passes if every relative residual <= tolerance """
    failures = []
    maxResidual = 0.0
    for label, computed, reference in comparisons:
        residual = relativeResidual(computed, reference)
        maxResidual = max(maxResidual, residual)
        if not residual <= tolerance:
            failures.append("{0}: computed {1!r}, reference {2!r}, residual {3:.3g}".format(
                label, computed, reference, residual))
    return CheckResult(name=name, cases=cases, maxResidual=maxResidual, passed=not failures,
                       failures=tuple(failures))


def coreChecks(nMax: int) -> list:
    triangle = StirlingTriangle(nMax)
    table = CoeffTable(max(nMax, 1))
    seriesTriangle = stirlingTriangleFromSeries(nMax)
    bernoulliSeries = bernoulli2FromSeries(nMax)
    stirlingCases = "0 <= k <= n <= {0}".format(nMax)
    coefficientCases = "2 <= i <= n+1, n <= {0}".format(nMax)

    checks = [
        exactCheck("Stirling recursion vs product", stirlingCases,
                   (("s({0},{1})".format(n, k), triangle.value(n, k), stirlingFromProduct(n)[k])
                    for n in range(nMax + 1) for k in range(n + 1))),
        exactCheck("Stirling recursion vs nested sums", "1 <= k <= n <= {0}".format(nMax),
                   (("s({0},{1})".format(n, k), stirlingFromNested(n, k), triangle.value(n, k))
                    for n in range(1, nMax + 1) for k in range(1, n + 1))),
        exactCheck("Stirling recursion vs series", stirlingCases,
                   (("s({0},{1})".format(n, k), seriesTriangle[n][k], triangle.value(n, k))
                    for n in range(nMax + 1) for k in range(n + 1))),
        exactCheck("Stirling row sums", "2 <= n <= {0}".format(nMax),
                   (("sum s({0},k)".format(n), triangle.rowSum(n), 0) for n in range(2, nMax + 1))),
        exactCheck("Stirling absolute row sums = n!", "n <= {0}".format(nMax),
                   (("sum |s({0},k)|".format(n), triangle.absoluteRowSum(n), math.factorial(n))
                    for n in range(nMax + 1))),
        exactCheck("Coefficient recursion vs Stirling link", coefficientCases,
                   (("a({0},{1})".format(n, i), coefficientFromStirling(n, i, triangle), table.value(n, i))
                    for n in range(1, nMax + 1) for i in range(2, n + 2))),
        exactCheck("Coefficient recursion vs nested sums", coefficientCases,
                   (("a({0},{1})".format(n, i), coefficientFromNested(n, i), table.value(n, i))
                    for n in range(1, nMax + 1) for i in range(2, n + 2))),
        exactCheck("a(n,3) vs harmonic numbers", "2 <= n <= {0}".format(nMax),
                   (("a({0},3)".format(n), harmonicClosedForm(n), table.value(n, 3)) for n in range(2, nMax + 1))),
        exactCheck("b_n coefficients vs Stirling sum", "n <= {0}".format(nMax),
                   (("b_{0}".format(n), bernoulli2FromCoefficients(n, table), bernoulli2FromStirling(n, triangle))
                    for n in range(nMax + 1))),
        exactCheck("b_n coefficients vs series", "n <= {0}".format(nMax),
                   (("b_{0}".format(n), bernoulli2FromCoefficients(n, table), bernoulliSeries[n])
                    for n in range(nMax + 1))),
        exactCheck("Derivative limit at 0 vs i! b_i", "2 <= i <= {0}".format(nMax),
                   (("i={0}".format(i), xOverLogDerivativeAtZero(i, table), math.factorial(i) * bernoulliSeries[i])
                    for i in range(2, nMax + 1))),
        exactCheck("Nested sum H(n,n) = 1/n!", "1 <= n <= {0}".format(nMax),
                   (("n={0}".format(n), reciprocalFactorial(n), Fraction(1, math.factorial(n)))
                    for n in range(1, nMax + 1))),
        exactCheck("Nested sum recursion vs chains", "j <= m <= 8",
                   (("H({0},{1})".format(j, m), nestedHarmonicSum(j, m), nestedHarmonicSumByChains(j, m))
                    for m in range(min(nMax, 8) + 1) for j in range(m + 1))),
    ]
    return checks


def derivativeChecks(nMax: int, tolerance: float) -> list:
    table = CoeffTable(max(nMax, 1))
    triangle = StirlingTriangle(nMax)
    orders = range(1, nMax + 1)
    cases = "order <= {0}".format(nMax)

    return [
        toleranceCheck("(1/ln x)^(n) closed form vs jet", cases + ", x in {0}".format(reciprocalLogAbscissae),
                       (("n={0}, x={1}".format(n, x), reciprocalLogDerivative(n, x, table),
                         reciprocalLogDerivativeByJet(n, x))
                        for n in orders for x in reciprocalLogAbscissae), tolerance),
        toleranceCheck("(1/ln(1+t))^(m) vs (1/ln x)^(m)", cases + ", x in {0}".format(shiftedLogAbscissae),
                       (("m={0}, x={1}".format(m, x), reciprocalLogShiftedDerivative(m, x - 1, triangle),
                         reciprocalLogDerivative(m, x, table))
                        for m in orders for x in shiftedLogAbscissae), tolerance),
        toleranceCheck("(x/ln(1+x))^(i) two closed forms", cases + ", x in {0}".format(xOverLogAbscissae),
                       (("i={0}, x={1}".format(i, x), xOverLogDerivative(i, x, 'stirling', triangle=triangle),
                         xOverLogDerivative(i, x, 'coefficients', table=table))
                        for i in orders for x in xOverLogAbscissae), tolerance),
        toleranceCheck("(x/ln(1+x))^(i) closed form vs jet", cases + ", x in {0}".format(xOverLogAbscissae),
                       (("i={0}, x={1}".format(i, x), xOverLogDerivative(i, x, table=table),
                         xOverLogDerivativeByJet(i, x))
                        for i in orders for x in xOverLogAbscissae), tolerance),
        toleranceCheck("(exp(-1/t))^(i) closed form vs jet", cases + ", t in {0}".format(expReciprocalAbscissae),
                       (("i={0}, t={1}".format(i, t), expReciprocalDerivative(i, t), expReciprocalDerivativeByJet(i, t))
                        for i in orders for t in expReciprocalAbscissae), tolerance),
        toleranceCheck("(ln x)^(n) closed form vs jet", cases + ", x in {0}".format(reciprocalLogAbscissae),
                       (("n={0}, x={1}".format(n, x), logDerivativeByJet(n, x), logDerivative(n, x))
                        for n in orders for x in reciprocalLogAbscissae), tolerance),
    ]


def integralChecks(nMax: int, tolerance: float, quadratureNMax: int = 8, config: QuadratureConfig = None) -> list:
    triangle = StirlingTriangle(nMax)
    indices = [(n, k) for n in range(1, nMax + 1) for k in range(1, n + 2)]
    quadratureIndices = [(n, k) for n, k in indices if n <= quadratureNMax]
    polynomialReports = [gammaStirlingPolynomialCheck(m, triangle) for m in range(1, nMax + 1)]

    return [
        exactCheck("Factorial Stirling sum = integral (exact)", "1 <= k <= n+1, n <= {0}".format(nMax),
                   (("n={0}, k={1}".format(n, k), risingFactorialIntegralExact(n, k, triangle),
                     factorialStirlingSum(n, k, triangle)) for n, k in indices)),
        toleranceCheck("Gauss-Laguerre integral vs exact", "1 <= k <= n+1, n <= {0}".format(quadratureNMax),
                       (("n={0}, k={1}".format(n, k), risingFactorialIntegral(n, k, config, triangle=triangle),
                         risingFactorialIntegralExact(n, k, triangle)) for n, k in quadratureIndices), tolerance),
        exactCheck("Gamma ratio integral, polynomial in t", "1 <= m <= {0}".format(nMax),
                   (("m={0}".format(report.m), report.leftCoefficients, report.rightCoefficients)
                    for report in polynomialReports)),
        toleranceCheck("Gamma ratio integral at finite t", "m <= 6, t in {0}".format(gammaStirlingAbscissae),
                       (("m={0}, t={1}".format(m, t), gammaStirlingIntegral(m, t, config), gammaStirlingSum(m, t))
                        for m in range(1, 7) for t in gammaStirlingAbscissae), tolerance),
        toleranceCheck("1/ln(1+x) as an integral", "x in (1, e-1, 9)",
                       (("x={0}".format(x), reciprocalLogIntegral(x, config), 1 / math.log1p(x))
                        for x in smokeAbscissae), tolerance),
        toleranceCheck("1/ln(1+x) Stieltjes representation", "x in (0.5, 1, e-1, 9)",
                       (("x={0}".format(x), reciprocalLogStieltjes(x, config), 1 / math.log1p(x))
                        for x in stieltjesAbscissae), tolerance),
    ]


def stieltjesCase(m: int, k: int, config: QuadratureConfig = None):
    """ One (m, k) case: (m, k, exact side, numerical side or None, error message) """
    expected = stieltjesLeftSide(m, k)
    try:
        return m, k, expected, stieltjesRightSide(m, k, config), ''
    except QuadratureError as error:
        return m, k, expected, None, "{0}: {1}".format(type(error).__name__, error)


def stieltjesChecks(nMax: int, tolerance: float, processes: int = 1, config: QuadratureConfig = None) -> list:
    if nMax < 1:
        raise ValueError("The Stieltjes check needs nMax >= 1 (got {0}).".format(nMax))
    arguments = [(m, k, config) for m in range(1, nMax + 1) for k in range(1, m + 2)]
    if processes > 1:
        with multiprocessing.Pool(processes=processes) as pool:
            outcomes = pool.starmap(stieltjesCase, arguments)
    else:
        outcomes = [stieltjesCase(*argument) for argument in arguments]

    failures = []
    maxResidual = 0.0
    for m, k, expected, computed, error in outcomes:
        if computed is None:
            failures.append("m={0}, k={1}: {2}".format(m, k, error))
            continue
        residual = relativeResidual(computed, expected)
        maxResidual = max(maxResidual, residual)
        if not residual <= tolerance:
            failures.append("m={0}, k={1}: computed {2!r}, expected {3}, residual {4:.3g}".format(
                m, k, computed, expected, residual))
    return [CheckResult(name="Stieltjes representation, k-th t-derivative", cases="1 <= k <= m+1, m <= {0}".format(nMax),
                        maxResidual=maxResidual, passed=not failures, failures=tuple(failures))]


def conjectureChecks(nMax: int) -> list:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = conjectureCheck(nMax)
    cases = "n <= {0}".format(nMax)
    strict = "strict unimodality violations (reported): {0}".format(
        ", ".join("n={0}".format(n) for n in report.strictUnimodalityViolations) or "none")
    return [
        CheckResult(name="a(n+1,i) > a(n,i)", cases=cases, maxResidual=float(len(report.monotonicityViolations)),
                    passed=not report.monotonicityViolations,
                    failures=tuple("n={0}, i={1}".format(n, i) for n, i in report.monotonicityViolations)),
        CheckResult(name="i -> a(n,i) unimodal", cases=cases, maxResidual=float(len(report.unimodalityViolations)),
                    passed=not report.unimodalityViolations,
                    failures=tuple("row n={0}".format(n) for n in report.unimodalityViolations)),
        CheckResult(name=strict, cases=cases, maxResidual=0.0, passed=True),
    ]


def runSuite(name: str, nMax: int = None, tolerance: float = None, processes: int = 1,
             quadratureNMax: int = 8, config: QuadratureConfig = None) -> list:
    """Runs a verification suite and returns its CheckResult list.

    Parameters
    ----------
    name : str
        'core', 'derivatives', 'thm41', 'thm42', 'conjecture' or 'all'.
    nMax : int (Optional)
        Largest index of the suite. Each suite has its own default
        (see defaultBounds); with 'all' it overrides every suite.
    tolerance : float (Optional)
        Relative tolerance of the floating-point checks (see defaultTolerances).
    processes : int
        Number of worker processes for the Stieltjes cases. (default = 1)
    quadratureNMax : int
        Largest n of the Gauss-Laguerre comparison. (default = 8)
    config : QuadratureConfig (Optional)
        Numerical settings of every integral.
    """
    if name not in suiteNames:
        raise ValueError("Unknown suite '{0}': use one of {1}.".format(name, ", ".join(suiteNames)))
    if nMax is not None:
        checkNonNegativeInteger(nMax, 'nMax')
    if processes < 1:
        raise ValueError("processes must be at least 1 (got {0}).".format(processes))

    if name == 'all':
        results = []
        for suite in suiteNames[:-1]:
            results.extend(runSuite(suite, nMax, tolerance, processes, quadratureNMax, config))
        return results

    bound = defaultBounds[name] if nMax is None else nMax
    allowed = defaultTolerances.get(name) if tolerance is None else tolerance

    if name == 'core':
        return coreChecks(bound)
    elif name == 'derivatives':
        return derivativeChecks(bound, allowed)
    elif name == 'thm41':
        return integralChecks(bound, allowed, quadratureNMax, config)
    elif name == 'thm42':
        return stieltjesChecks(bound, allowed, processes, config)
    return conjectureChecks(max(bound, 2))


def formatReport(results) -> str:
    results = list(results)
    failed = sum(1 for result in results if not result.passed)
    lines = [str(result) for result in results]
    lines.append("{0} checks, {1} failed".format(len(results), failed))
    return "\n".join(lines) + "\n"

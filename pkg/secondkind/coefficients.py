from .utils import *
from .harmonicnest import *
from .stirling import *

import math
import warnings
from fractions import Fraction
from dataclasses import dataclass, field


class CoeffTable:
    r"""The positive integers a(n,i) in the n-th derivative of 1/ln x:

        (1/ln x)^(n) = (-1)^n / x^n  sum_{i=2}^{n+1} a(n,i) / (ln x)^i

    for 1 <= n <= nMax and 2 <= i <= n+1. The table is built from a(1,2) = 1
    with the recursions obtained by differentiating once more:

        a(n+1,2)   = n a(n,2)
        a(n+1,n+2) = (n+1) a(n,n+1)
        a(n+1,i)   = (i-1) a(n,i-1) + n a(n,i)      for 3 <= i <= n+1

    Parameters
    ----------
    nMax : int
        Largest derivative order tabulated (must be >= 1).

    Examples
    --------
    >>> from secondkind import *
    >>> table = CoeffTable(nMax=5)
    >>> table.row(5)
    (24, 100, 210, 240, 120)
    >>> table.value(4, 3)
    22

    Notes
    -----
    The first index is the derivative order n, the second the power i of
    1/ln x, so that row(n) starts at i=2.
    """

    def __init__(self, nMax: int):
        checkNonNegativeInteger(nMax, 'nMax')
        if nMax < 1:
            raise ValueError("The coefficient table starts at n=1 (got nMax={0}).".format(nMax))
        self.nMax = nMax

        rows = [(1,)]
        for n in range(1, nMax):
            previous = rows[-1]  # a(n, 2..n+1) stored at index i-2
            row = [0] * (n + 1)
            row[0] = n * previous[0]
            for i in range(3, n + 2):
                row[i - 2] = (i - 1) * previous[i - 3] + n * previous[i - 2]
            row[n] = (n + 1) * previous[n - 1]
            rows.append(tuple(row))
        self._rows = tuple(rows)

    def value(self, n: int, i: int) -> int:
        """ a(n,i), with a(n,i) = 0 outside 2 <= i <= n+1 (so that a(n-1,n+1) = 0) """
        if not 1 <= n <= self.nMax:
            raise ValueError("Row n={0} is outside the table (1 <= n <= {1}).".format(n, self.nMax))
        if i < 2 or i > n + 1:
            return 0
        return self._rows[n - 1][i - 2]

    def __getitem__(self, index) -> int:
        n, i = index
        return self.value(n, i)

    def row(self, n: int) -> tuple:
        """ a(n,2), a(n,3), ..., a(n,n+1) """
        if not 1 <= n <= self.nMax:
            raise ValueError("Row n={0} is outside the table (1 <= n <= {1}).".format(n, self.nMax))
        return self._rows[n - 1]

    @property
    def rows(self) -> tuple:
        return self._rows

    def isConsistent(self) -> bool:
        for n in range(1, self.nMax + 1):
            if self.value(n, 2) != math.factorial(n - 1):
                return False
            if self.value(n, n + 1) != math.factorial(n):
                return False
            if any(v <= 0 for v in self.row(n)):
                return False
        for n in range(1, self.nMax):
            for i in range(3, n + 2):
                if self.value(n + 1, i) != (i - 1) * self.value(n, i - 1) + n * self.value(n, i):
                    return False
        return True

    def __len__(self) -> int:
        return self.nMax

    def __str__(self):
        description = ""
        for n, row in enumerate(self._rows, start=1):
            description += "{0:>3}: {1}\n".format(n, " ".join(str(v) for v in row))
        return description


def coefficientFromStirling(n: int, i: int, triangle: StirlingTriangle = None) -> int:
    """a(n,i) = (-1)^(n+i-1) (i-1)! s(n,i-1) for 2 <= i <= n+1.

    Parameters
    ----------
    n : int
        Derivative order (>= 1).
    i : int
        Power of 1/ln x.
    triangle : StirlingTriangle (Optional)
        A precomputed triangle with at least n rows. One is built if absent.
    """
    checkNonNegativeInteger(n, 'n')
    if n < 1 or not 2 <= i <= n + 1:
        raise ValueError("Need n >= 1 and 2 <= i <= n+1 (got n={0}, i={1}).".format(n, i))
    if triangle is None or triangle.nMax < n:
        triangle = StirlingTriangle(n)
    return alternatingSign(n + i - 1) * math.factorial(i - 1) * triangle.value(n, i - 1)


def coefficientFromNested(n: int, i: int) -> int:
    """a(n,i) from the closed form with nested harmonic sums:

        a(n,2) = (n-1)!
        a(n,i) = (i-1)! (n-1)! H(i-2, n-1)       for 3 <= i <= n+1
    """
    checkNonNegativeInteger(n, 'n')
    if n < 1 or not 2 <= i <= n + 1:
        raise ValueError("Need n >= 1 and 2 <= i <= n+1 (got n={0}, i={1}).".format(n, i))
    if i == 2:
        return math.factorial(n - 1)
    nest = nestedHarmonicSum(i - 2, n - 1)
    return asInteger(math.factorial(i - 1) * math.factorial(n - 1) * nest)


def harmonicClosedForm(n: int) -> int:
    """ a(n,3) = 2 (n-1)! (1 + 1/2 + ... + 1/(n-1)), for n >= 2 """
    if n < 2:
        raise ValueError("a(n,3) exists for n >= 2 (got {0}).".format(n))
    harmonic = sum(Fraction(1, k) for k in range(1, n))
    return asInteger(2 * math.factorial(n - 1) * harmonic)


def reciprocalFactorial(n: int) -> Fraction:
    """The n-fold nested harmonic sum H(n,n), which equals 1/n!.

    Only one chain (n > n-1 > ... > 1) contributes, but the value is
    obtained through the same recurrence as every other nested sum.
    """
    checkNonNegativeInteger(n, 'n')
    if n < 1:
        raise ValueError("n must be >= 1 (got {0}).".format(n))
    return nestedHarmonicSum(n, n)


def isUnimodal(sequence, strict: bool = False) -> bool:
    """True if the sequence rises to a single peak then falls.

    With strict=False, equal neighbours (plateaus) are allowed anywhere.
    With strict=True, every step must be a strict rise or a strict fall.
    """
    values = list(sequence)
    falling = False
    for left, right in zip(values, values[1:]):
        if right == left:
            if strict:
                return False
            continue
        if right > left:
            if falling:
                return False
        else:
            falling = True
    return True


@dataclass(frozen=True)
class ConjectureReport:
    """Outcome of the scan of a(n,i): increasing in n, unimodal in i.

    Attributes
    ----------
    nMax : int
        Largest row scanned.
    monotonicityViolations : tuple of (n, i)
        Pairs with a(n+1,i) <= a(n,i).
    unimodalityViolations : tuple of int
        Rows that are not unimodal, plateaus allowed.
    strictUnimodalityViolations : tuple of int
        Rows that are not strictly unimodal. Reported only.
    peaks : tuple of int
        For every row n, the index i of its largest entry (first one on ties).
    """
    nMax: int
    monotonicityViolations: tuple = field(default_factory=tuple)
    unimodalityViolations: tuple = field(default_factory=tuple)
    strictUnimodalityViolations: tuple = field(default_factory=tuple)
    peaks: tuple = field(default_factory=tuple)

    @property
    def hasViolations(self) -> bool:
        return bool(self.monotonicityViolations) or bool(self.unimodalityViolations)

    def __str__(self):
        description = "Conjecture scan up to n={0}\n".format(self.nMax)
        description += "monotonicity violations: {0}\n".format(len(self.monotonicityViolations))
        description += "unimodality violations: {0}\n".format(len(self.unimodalityViolations))
        description += "strict unimodality violations: {0}\n".format(len(self.strictUnimodalityViolations))
        return description


def conjectureCheck(nMax: int, table: CoeffTable = None) -> ConjectureReport:
    """Scans a(n,i) for n <= nMax: a(n+1,i) > a(n,i) for 2 <= i <= n+1, and
    i -> a(n,i) unimodal for each row.

    Parameters
    ----------
    nMax : int
        Largest row (>= 2). Monotonicity is checked between rows n and n+1
        for 2 <= n < nMax.
    table : CoeffTable (Optional)
        Precomputed table with at least nMax rows.

    Returns
    -------
    report : ConjectureReport
        A UserWarning is also issued when violations are found.
    """
    checkNonNegativeInteger(nMax, 'nMax')
    if nMax < 2:
        raise ValueError("The scan needs nMax >= 2 (got {0}).".format(nMax))
    if table is None or table.nMax < nMax:
        table = CoeffTable(nMax)

    monotonicity = []
    # a(1,2) = a(2,2) = 1: the comparison starts at row 2
    for n in range(2, nMax):
        for i in range(2, n + 2):
            if table.value(n + 1, i) <= table.value(n, i):
                monotonicity.append((n, i))

    weak = []
    strict = []
    peaks = []
    for n in range(1, nMax + 1):
        row = table.row(n)
        if not isUnimodal(row):
            weak.append(n)
        if not isUnimodal(row, strict=True):
            strict.append(n)
        peaks.append(row.index(max(row)) + 2)

    report = ConjectureReport(nMax=nMax,
                              monotonicityViolations=tuple(monotonicity),
                              unimodalityViolations=tuple(weak),
                              strictUnimodalityViolations=tuple(strict),
                              peaks=tuple(peaks))
    if report.hasViolations:
        warnings.warn("Coefficient conjecture violated: {0} monotonicity and {1} unimodality cases.".format(
            len(monotonicity), len(weak)), UserWarning)
    return report

from .utils import *
from .stirling import *
from .powerseries import *
from .records import *

import os
import re
import warnings
from dataclasses import dataclass, field

fixtureKinds = ('stirling', 'bernoulli2-num', 'bernoulli2-den')

bundledFixtures = {'stirling': 'stirling_first_kind.csv',
                   'bernoulli2-num': 'bernoulli2_numerators.txt',
                   'bernoulli2-den': 'bernoulli2_denominators.txt'}

dataDirectory = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')

fieldSeparator = re.compile(r"[,\s]+")


class FixtureParseError(ValueError):
    """ A fixture line that cannot be read, with its file and 1-based line number """

    def __init__(self, path: str, lineNumber: int, line: str, reason: str):
        self.path = path
        self.lineNumber = lineNumber
        self.line = line
        super(FixtureParseError, self).__init__(
            "{0}:{1}: {2}: '{3}'".format(path, lineNumber, reason, line.rstrip("\n")))


@dataclass(frozen=True)
class FixtureRow:
    """ Indices and expected exact value of one fixture line """
    indices: tuple
    expected: object
    lineNumber: int = 0


def bundledFixturePath(kind: str) -> str:
    if kind not in bundledFixtures:
        raise ValueError("No bundled fixture for '{0}'.".format(kind))
    return os.path.join(dataDirectory, bundledFixtures[kind])


def readFixture(path: str, fieldCount: int) -> list:
    """Reads integer fields separated by commas or blanks, one row per line.

    Everything after '#' is a comment and blank lines are ignored. The last
    field is the expected value and may be a rational "p/q".

    Raises
    ------
    FixtureParseError
        If a line does not have fieldCount fields or a field is not a number.
    """
    rows = []
    with open(path, "r") as file:
        for lineNumber, line in enumerate(file, start=1):
            content = line.split('#', 1)[0].strip()
            if not content:
                continue
            fields = fieldSeparator.split(content)
            if len(fields) != fieldCount:
                raise FixtureParseError(path, lineNumber, line,
                                        "expected {0} fields, found {1}".format(fieldCount, len(fields)))
            try:
                indices = tuple(int(value) for value in fields[:-1])
                expected = parseValue(fields[-1])
            except ValueError:
                raise FixtureParseError(path, lineNumber, line, "not a number")
            rows.append(FixtureRow(indices=indices, expected=expected, lineNumber=lineNumber))
    return rows


def readStirlingFixture(path: str) -> list:
    """ Rows "n,k,s(n,k)" (or "n k s(n,k)") """
    return readFixture(path, 3)


def readBFile(path: str) -> list:
    """ OEIS b-file style rows "index value" """
    return readFixture(path, 2)


@dataclass(frozen=True)
class FixtureReport:
    """Comparison of a fixture file with the computed values.

    mismatches holds (indices, expected, computed) triples and skipped the
    indices of rows outside the computable range.
    """
    path: str
    kind: str
    matches: int = 0
    mismatches: tuple = field(default_factory=tuple)
    skipped: tuple = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def records(self) -> list:
        recordKind = 'stirling' if self.kind == 'stirling' else 'bernoulli2'
        return [OutputRecord.fromValue(recordKind, indices, computed, status='mismatch', method=self.kind)
                for indices, expected, computed in self.mismatches]

    def __str__(self):
        description = "{0} ({1}): {2} matches, {3} mismatches".format(
            self.path, self.kind, self.matches, len(self.mismatches))
        if self.skipped:
            description += ", {0} skipped".format(len(self.skipped))
        for indices, expected, computed in self.mismatches:
            description += "\n    {0}: expected {1}, computed {2}".format(
                ",".join(str(index) for index in indices), formatValue(expected), formatValue(computed))
        return description


def isComputableRow(indices: tuple, nMax: int = None) -> bool:
    """ Rows with a negative n or n above nMax are skipped; s(n,k) = 0 outside 0 <= k <= n is still compared """
    n = indices[0]
    return 0 <= n and (nMax is None or n <= nMax)


def checkFixture(path: str, kind: str, nMax: int = None) -> FixtureReport:
    """Compares every row of a fixture file against the computed value.

    Parameters
    ----------
    path : str
        Fixture file, or 'bundled' for the file shipped with the package.
    kind : str
        'stirling' (rows n,k,s(n,k)), 'bernoulli2-num' or 'bernoulli2-den'
        (b-file rows n, numerator or denominator of b_n).
    nMax : int (Optional)
        Rows with a larger n are skipped with a warning.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    FixtureParseError
        On the first malformed line.
    """
    if kind not in fixtureKinds:
        raise ValueError("Unknown fixture kind '{0}': use one of {1}.".format(kind, ", ".join(fixtureKinds)))
    if path == 'bundled':
        path = bundledFixturePath(kind)

    if kind == 'stirling':
        rows = readStirlingFixture(path)
    else:
        rows = readBFile(path)

    computable = []
    skipped = []
    for row in rows:
        if isComputableRow(row.indices, nMax):
            computable.append(row)
        else:
            skipped.append(row.indices)
    if skipped:
        warnings.warn("{0}: {1} rows outside the computable range were skipped.".format(path, len(skipped)),
                      UserWarning)

    largestN = max((row.indices[0] for row in computable), default=0)
    if kind == 'stirling':
        triangle = StirlingTriangle(largestN)
        compute = lambda indices: triangle.value(indices[0], indices[1])
    else:
        bernoulli = bernoulli2FromSeries(largestN)
        if kind == 'bernoulli2-num':
            compute = lambda indices: bernoulli[indices[0]].numerator
        else:
            compute = lambda indices: bernoulli[indices[0]].denominator

    matches = 0
    mismatches = []
    for row in computable:
        computed = compute(row.indices)
        if computed == row.expected:
            matches += 1
        else:
            mismatches.append((row.indices, row.expected, computed))

    return FixtureReport(path=path, kind=kind, matches=matches, mismatches=tuple(mismatches),
                         skipped=tuple(skipped))

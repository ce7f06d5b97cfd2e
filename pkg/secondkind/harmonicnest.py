from .utils import *

import itertools
from fractions import Fraction


class HarmonicNest:
    r"""Nested harmonic sums of a fixed depth.

    H(j, m) is the sum, over all strictly decreasing chains
    m >= l_1 > l_2 > ... > l_j >= 1, of 1/(l_1 l_2 ... l_j). It is also the
    elementary symmetric polynomial e_j(1, 1/2, ..., 1/m).

    The values are obtained with the recurrence

        H(j, m) = H(j, m-1) + H(j-1, m-1)/m

    which needs O(j*m) exact rationals instead of the exponential number
    of terms of the literal nested sums.

    Parameters
    ----------
    depth : int
        The number j of nested sums. H(0, m) = 1 for every m.
    mMax : int
        The largest outer bound m that is tabulated.

    Examples
    --------
    >>> from secondkind import *
    >>> nest = HarmonicNest(depth=1, mMax=3)
    >>> print(nest.value(3))
    11/6

    Notes
    -----
    A nest deeper than its range is empty: H(j, m) = 0 when j > m.
    """

    def __init__(self, depth: int, mMax: int):
        checkNonNegativeInteger(depth, 'depth')
        checkNonNegativeInteger(mMax, 'mMax')
        self.depth = depth
        self.mMax = mMax

        # previous[m] holds H(d-1, m) while building depth d
        previous = [Fraction(1)] * (mMax + 1)
        for d in range(1, depth + 1):
            current = [Fraction(0)] * (mMax + 1)
            for m in range(1, mMax + 1):
                current[m] = current[m - 1] + previous[m - 1] / m
            previous = current
        self._values = tuple(previous)

    @property
    def values(self):
        return self._values

    def value(self, m: int) -> Fraction:
        if not 0 <= m <= self.mMax:
            raise ValueError("m must be between 0 and {0} (got {1}).".format(self.mMax, m))
        return self._values[m]

    def __getitem__(self, m: int) -> Fraction:
        return self.value(m)

    def __len__(self) -> int:
        return len(self._values)

    def __str__(self):
        description = "Nested harmonic sums of depth {0}\n".format(self.depth)
        for m, value in enumerate(self._values):
            description += "H({0},{1}) = {2}\n".format(self.depth, m, value)
        return description


def nestedHarmonicSum(depth: int, m: int) -> Fraction:
    """The nested harmonic sum H(depth, m) computed by the recurrence.

    Parameters
    ----------
    depth : int
        Number of nested sums.
    m : int
        Upper bound of the outermost sum.

    Returns
    -------
    value : Fraction
        The exact value, 1 for depth 0 and 0 when depth > m.
    """
    return HarmonicNest(depth, m).value(m)


def nestedHarmonicSumByChains(depth: int, m: int) -> Fraction:
    """Direct enumeration of every decreasing chain. Exponential: only for small m,
    where it serves as the reference for HarmonicNest."""
    checkNonNegativeInteger(depth, 'depth')
    checkNonNegativeInteger(m, 'm')
    total = Fraction(0)
    for chain in itertools.combinations(range(1, m + 1), depth):
        term = Fraction(1)
        for ell in chain:
            term /= ell
        total += term
    return total

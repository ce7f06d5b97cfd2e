from .utils import *
from .harmonicnest import *

import math


class StirlingTriangle:
    r"""Signed Stirling numbers of the first kind s(n,k) for 0 <= k <= n <= nMax.

    s(n,k) is the coefficient of x**k in the falling factorial
    x(x-1)(x-2)...(x-n+1). The table is filled with the triangular
    recursion

        s(n+1,i) = s(n,i-1) - n s(n,i)

    starting from s(0,0) = 1. Entries outside the triangle (k < 0 or k > n)
    are zero.

    Parameters
    ----------
    nMax : int
        Largest row of the triangle (must be >= 0).

    Examples
    --------
    >>> from secondkind import *
    >>> triangle = StirlingTriangle(nMax=4)
    >>> triangle.row(3)
    (0, 2, -3, 1)
    >>> triangle.value(4, 2)
    11

    See Also
    --------
    secondkind.stirlingFromProduct
    secondkind.stirlingFromNested
    secondkind.stirlingFromSeries
    """

    def __init__(self, nMax: int):
        checkNonNegativeInteger(nMax, 'nMax')
        self.nMax = nMax

        rows = [(1,)]
        for n in range(nMax):
            previous = rows[-1]
            row = [0] * (n + 2)
            for i in range(1, n + 2):
                left = previous[i - 1]
                right = previous[i] if i <= n else 0
                row[i] = left - n * right
            rows.append(tuple(row))
        self._rows = tuple(rows)

    def value(self, n: int, k: int) -> int:
        if not 0 <= n <= self.nMax:
            raise ValueError("Row n={0} is outside the triangle (nMax={1}).".format(n, self.nMax))
        if k < 0 or k > n:
            return 0
        return self._rows[n][k]

    def __getitem__(self, index) -> int:
        n, k = index
        return self.value(n, k)

    def unsigned(self, n: int, k: int) -> int:
        """ |s(n,k)|, the number of permutations of n elements with k cycles """
        return abs(self.value(n, k))

    def row(self, n: int) -> tuple:
        if not 0 <= n <= self.nMax:
            raise ValueError("Row n={0} is outside the triangle (nMax={1}).".format(n, self.nMax))
        return self._rows[n]

    @property
    def rows(self) -> tuple:
        return self._rows

    def rowSum(self, n: int) -> int:
        """ Value of the falling factorial at x=1: zero as soon as n >= 2 """
        return sum(self.row(n))

    def absoluteRowSum(self, n: int) -> int:
        """ Value of the rising factorial at x=1: always n! """
        return sum(abs(v) for v in self.row(n))

    def isConsistent(self) -> bool:
        """ Checks the boundary values and the triangular recursion on every entry. """
        if self.value(0, 0) != 1:
            return False
        for n in range(1, self.nMax + 1):
            if self.value(n, 0) != 0 or self.value(n, n) != 1:
                return False
        for n in range(self.nMax):
            for i in range(1, n + 2):
                if self.value(n + 1, i) != self.value(n, i - 1) - n * self.value(n, i):
                    return False
        return True

    def __len__(self) -> int:
        return self.nMax + 1

    def __str__(self):
        description = ""
        for n, row in enumerate(self._rows):
            description += "{0:>3}: {1}\n".format(n, " ".join(str(v) for v in row))
        return description


def stirlingFromProduct(n: int) -> tuple:
    """Coefficients of x(x-1)...(x-n+1), lowest degree first.

    This expands the product one linear factor at a time and does not use
    the triangular recursion, so it can be used to validate StirlingTriangle.

    Parameters
    ----------
    n : int
        Number of linear factors (n=0 gives the empty product 1).

    Returns
    -------
    coefficients : tuple of int
        n+1 coefficients, the k-th being s(n,k).
    """
    checkNonNegativeInteger(n, 'n')
    coefficients = [1]
    for j in range(n):
        # multiply by (x - j)
        product = [0] * (len(coefficients) + 1)
        for k, c in enumerate(coefficients):
            product[k + 1] += c
            product[k] -= j * c
        coefficients = product
    return tuple(coefficients)


def stirlingFromNested(n: int, i: int) -> int:
    """s(n,i) from nested harmonic sums, for 1 <= i <= n:

        s(n,i) = (-1)**(n+i) (n-1)! H(i-1, n-1)

    Raises
    ------
    ArithmeticError
        If the rational result is not an integer, which cannot happen
        unless the nested sums are wrong.
    """
    checkNonNegativeInteger(n, 'n')
    if not 1 <= i <= n:
        raise ValueError("The nested-sum formula needs 1 <= i <= n (got n={0}, i={1}).".format(n, i))
    nest = nestedHarmonicSum(i - 1, n - 1)
    return alternatingSign(n + i) * asInteger(math.factorial(n - 1) * nest)

from .utils import *
from .stirling import *
from .coefficients import *

import math
from fractions import Fraction

# The closed formula through a(n,i) only holds for n >= 2
bernoulli2InitialValues = {0: Fraction(1), 1: Fraction(1, 2)}


def xOverLogDerivativeAtZero(i: int, table: CoeffTable = None) -> Fraction:
    r"""Exact limit at x -> 0 of the i-th derivative of x/ln(1+x), for i >= 2:

        (-1)^i ( 1/(i+1) + sum_{k=2}^{i} (a(i,k) - i a(i-1,k)) / k! )

    This limit is i! b_i.

    Parameters
    ----------
    i : int
        Order of the derivative (>= 2).
    table : CoeffTable (Optional)
        Precomputed coefficients with at least i rows.
    """
    checkNonNegativeInteger(i, 'i')
    if i < 2:
        raise ValueError("The limit formula holds for i >= 2 (got {0}).".format(i))
    if table is None or table.nMax < i:
        table = CoeffTable(i)

    total = Fraction(1, i + 1)
    for k in range(2, i + 1):
        total += Fraction(table.value(i, k) - i * table.value(i - 1, k), math.factorial(k))
    return alternatingSign(i) * total


def bernoulli2FromCoefficients(n: int, table: CoeffTable = None) -> Fraction:
    """Bernoulli number of the second kind b_n from the coefficients a(n,k):

        b_n = (-1)^n / n! ( 1/(n+1) + sum_{k=2}^{n} (a(n,k) - n a(n-1,k)) / k! )

    b_0 = 1 and b_1 = 1/2 are returned directly.

    Parameters
    ----------
    n : int
        Index (>= 0).
    table : CoeffTable (Optional)
        Precomputed coefficients with at least n rows, to share the work
        when many b_n are needed.

    Returns
    -------
    b_n : Fraction

    Examples
    --------
    >>> from secondkind import *
    >>> print(bernoulli2FromCoefficients(4))
    -19/720
    """
    checkNonNegativeInteger(n, 'n')
    if n in bernoulli2InitialValues:
        return bernoulli2InitialValues[n]
    return xOverLogDerivativeAtZero(n, table) / math.factorial(n)


def bernoulli2FromStirling(n: int, triangle: StirlingTriangle = None) -> Fraction:
    """Bernoulli number of the second kind as a Stirling sum:

        b_n = 1/n! sum_{k=0}^{n} s(n,k) / (k+1)

    Valid for every n >= 0.
    """
    checkNonNegativeInteger(n, 'n')
    if triangle is None or triangle.nMax < n:
        triangle = StirlingTriangle(n)
    total = sum(Fraction(s, k + 1) for k, s in enumerate(triangle.row(n)))
    return total / math.factorial(n)


def cauchyNumber(n: int) -> Fraction:
    """ Cauchy number of the first kind, n! b_n """
    return math.factorial(n) * bernoulli2FromStirling(n)

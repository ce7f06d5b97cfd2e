from .utils import *

import math
from fractions import Fraction


class PowerSeries:
    r"""A formal power series truncated at order N, with exact rational coefficients.

    The series c_0 + c_1 x + ... + c_N x^N represents every series that
    agrees with it up to x^N. Arithmetic never reads or produces a
    coefficient beyond the order, so two series must have the same order
    to be combined.

    The operators are overloaded so that the generating functions read
    naturally:

    logSeries = log1pSeries(order=10)
    square = logSeries * logSeries
    inverse = logSeries.shiftedDown().reciprocal()

    Parameters
    ----------
    coefficients : iterable of int or Fraction
        c_0, c_1, ... Missing coefficients up to the order are zero.
    order : int (Optional)
        Truncation order N. Defaults to len(coefficients)-1.

    Examples
    --------
    >>> from secondkind import *
    >>> geometric = PowerSeries([1, 1], order=4).reciprocal()
    >>> geometric.coefficients
    (Fraction(1, 1), Fraction(-1, 1), Fraction(1, 1), Fraction(-1, 1), Fraction(1, 1))
    """

    def __init__(self, coefficients, order: int = None):
        values = [Fraction(c) for c in coefficients]
        if order is None:
            order = len(values) - 1
        checkNonNegativeInteger(order, 'order')
        if len(values) > order + 1:
            if any(c != 0 for c in values[order + 1:]):
                raise ValueError("Coefficients beyond order {0} were given.".format(order))
            values = values[:order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        self._coefficients = tuple(values)
        self.order = order

    @classmethod
    def one(cls, order: int) -> 'PowerSeries':
        return cls([1], order=order)

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError("Coefficient x^{0} is beyond the order {1}.".format(k, self.order))
        return self._coefficients[k]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self._coefficients == other._coefficients

    def __hash__(self):
        return hash((self.order, self._coefficients))

    def _checkOrder(self, other: 'PowerSeries'):
        if other.order != self.order:
            raise ValueError("Series orders do not match: {0} and {1}.".format(self.order, other.order))

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            self._checkOrder(other)
            return PowerSeries([a + b for a, b in zip(self._coefficients, other._coefficients)], self.order)
        elif isinstance(other, (int, Fraction)):
            return self + PowerSeries([other], self.order)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self._coefficients], self.order)

    def __sub__(self, other):
        if isinstance(other, (PowerSeries, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, rightSide):
        """Cauchy product truncated at the common order, or a scalar product.

        A scalar (int or Fraction) multiplies every coefficient.
        """
        if isinstance(rightSide, PowerSeries):
            return self.mul_series(rightSide)
        elif isinstance(rightSide, (int, Fraction)):
            return PowerSeries([c * rightSide for c in self._coefficients], self.order)
        else:
            raise TypeError(
                "Unrecognized right side element in multiply: '{0}'\
                 cannot be multiplied by a PowerSeries".format(rightSide))

    def __rmul__(self, leftSide):
        if isinstance(leftSide, (int, Fraction)):
            return self * leftSide
        return NotImplemented

    def mul_series(self, rightSide: 'PowerSeries') -> 'PowerSeries':
        self._checkOrder(rightSide)
        a = self._coefficients
        b = rightSide._coefficients
        product = []
        for n in range(self.order + 1):
            product.append(sum((a[j] * b[n - j] for j in range(n + 1) if a[j] and b[n - j]), Fraction(0)))
        return PowerSeries(product, self.order)

    def __pow__(self, exponent: int) -> 'PowerSeries':
        """ Non-negative integer powers by repeated squaring """
        checkNonNegativeInteger(exponent, 'exponent')
        result = PowerSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        elif isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Division of a series by zero.")
            return PowerSeries([c / other for c in self._coefficients], self.order)
        return NotImplemented

    def reciprocal(self) -> 'PowerSeries':
        """The series c with a*c = 1 up to the order:

            c_0 = 1/a_0,   c_n = -(1/a_0) sum_{j=1}^{n} a_j c_{n-j}

        Raises
        ------
        ValueError
            If the constant term is zero (the reciprocal is not a power series).
        """
        a = self._coefficients
        if a[0] == 0:
            raise ValueError("Cannot invert a series whose constant term is zero.")
        inverse = [1 / a[0]]
        for n in range(1, self.order + 1):
            total = sum((a[j] * inverse[n - j] for j in range(1, n + 1) if a[j]), Fraction(0))
            inverse.append(-total / a[0])
        return PowerSeries(inverse, self.order)

    def shiftedDown(self) -> 'PowerSeries':
        """Exact division by x of a series with zero constant term.

        The result has order N-1 since the x^N coefficient moves to x^(N-1).
        """
        if self._coefficients[0] != 0:
            raise ValueError("Only a series with zero constant term can be divided by x.")
        if self.order == 0:
            raise ValueError("An order-0 series cannot be divided by x.")
        return PowerSeries(self._coefficients[1:], self.order - 1)

    def truncated(self, order: int) -> 'PowerSeries':
        if order > self.order:
            raise ValueError("Cannot extend a series from order {0} to {1}.".format(self.order, order))
        return PowerSeries(self._coefficients[:order + 1], order)

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coefficients):
            if c != 0:
                terms.append("{0} x^{1}".format(c, k) if k else str(c))
        if not terms:
            terms.append("0")
        return " + ".join(terms) + " + O(x^{0})".format(self.order + 1)


def log1pSeries(order: int) -> PowerSeries:
    """ ln(1+x) = x - x^2/2 + x^3/3 - ... up to x^order """
    checkNonNegativeInteger(order, 'order')
    if order < 1:
        raise ValueError("The log series needs order >= 1 (got {0}).".format(order))
    return PowerSeries([0] + [Fraction(alternatingSign(k - 1), k) for k in range(1, order + 1)], order)


def stirlingFromSeries(n: int, m: int) -> int:
    """s(n,m) from the generating function

        [ln(1+x)]^m / m! = sum_k s(k,m) x^k / k!

    i.e. s(n,m) = n! [x^n] ln(1+x)^m / m!
    """
    checkNonNegativeInteger(n, 'n')
    if not 0 <= m <= n:
        raise ValueError("Need 0 <= m <= n (got n={0}, m={1}).".format(n, m))
    if n == 0:
        return 1
    power = log1pSeries(n) ** m
    return asInteger(power[n] * math.factorial(n) / math.factorial(m))


def stirlingTriangleFromSeries(nMax: int) -> tuple:
    """All rows s(n, 0..n) for n <= nMax from a single sweep of the powers of ln(1+x).

    Returns
    -------
    rows : tuple of tuple of int
        rows[n][m] = s(n,m).
    """
    checkNonNegativeInteger(nMax, 'nMax')
    rows = [[0] * (n + 1) for n in range(nMax + 1)]
    rows[0][0] = 1
    if nMax == 0:
        return (tuple(rows[0]),)

    logSeries = log1pSeries(nMax)
    power = PowerSeries.one(nMax)
    for m in range(1, nMax + 1):
        power = power * logSeries
        for n in range(m, nMax + 1):
            rows[n][m] = asInteger(power[n] * math.factorial(n) / math.factorial(m))
    return tuple(tuple(row) for row in rows)


def bernoulli2FromSeries(nMax: int) -> tuple:
    """b_0, ..., b_nMax as the coefficients of x/ln(1+x).

    The division is done as the reciprocal of ln(1+x)/x, whose constant
    term is 1, so no series with a zero constant term is ever inverted.
    The log series is taken at order nMax+1 so that the shifted series
    has order nMax.
    """
    checkNonNegativeInteger(nMax, 'nMax')
    shifted = log1pSeries(nMax + 1).shiftedDown()
    return shifted.reciprocal().coefficients

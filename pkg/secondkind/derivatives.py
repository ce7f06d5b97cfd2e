from .utils import *
from .stirling import *
from .coefficients import *
from .jet import *

import math


class CWeights:
    r"""The integers c(k,l) = C(k,l) C(k-1,l) l! for 0 <= l <= k-1.

    They appear in the derivatives of exp(-1/t):

        (e^{-1/t})^(k) = 1/(e^{1/t} t^{2k}) sum_{l=0}^{k-1} (-1)^l c(k,l) t^l

    Parameters
    ----------
    k : int
        Order of the derivative (>= 1).

    Examples
    --------
    >>> from secondkind import *
    >>> CWeights(3).values
    (1, 6, 6)
    """

    def __init__(self, k: int):
        checkNonNegativeInteger(k, 'k')
        if k < 1:
            raise ValueError("The weights are defined for k >= 1 (got {0}).".format(k))
        self.k = k
        self._values = tuple(math.comb(k, l) * math.comb(k - 1, l) * math.factorial(l) for l in range(k))

    @property
    def values(self) -> tuple:
        return self._values

    def value(self, l: int) -> int:
        if not 0 <= l <= self.k - 1:
            raise ValueError("l must be between 0 and {0} (got {1}).".format(self.k - 1, l))
        return self._values[l]

    def __getitem__(self, l: int) -> int:
        return self.value(l)

    def __len__(self) -> int:
        return self.k


def checkLogArgument(x: float):
    if x <= 0:
        raise ValueError("ln x needs x > 0 (got {0}).".format(x))
    if x == 1:
        raise ValueError("1/ln x is singular at x = 1.")


def checkShiftedLogArgument(t: float):
    if t <= -1:
        raise ValueError("ln(1+t) needs t > -1 (got {0}).".format(t))
    if t == 0:
        raise ValueError("1/ln(1+t) is singular at t = 0.")


def logDerivative(n: int, x: float) -> float:
    """ (ln x)^(n) = (-1)^(n-1) (n-1)! / x^n for n >= 1 """
    if n < 1:
        raise ValueError("n must be >= 1 (got {0}).".format(n))
    if x <= 0:
        raise ValueError("ln x needs x > 0 (got {0}).".format(x))
    return alternatingSign(n - 1) * math.factorial(n - 1) / x ** n


def logDerivativeByJet(n: int, x: float) -> float:
    if x <= 0:
        raise ValueError("ln x needs x > 0 (got {0}).".format(x))
    return Jet.variable(x, n).log().derivative(n)


def reciprocalLogDerivative(n: int, x: float, table: CoeffTable = None) -> float:
    r"""The n-th derivative of 1/ln x from the closed form

        (1/ln x)^(n) = (-1)^n / x^n  sum_{i=2}^{n+1} a(n,i) / (ln x)^i

    Parameters
    ----------
    n : int
        Order of the derivative (>= 1).
    x : float
        Abscissa, x > 0 and x != 1.
    table : CoeffTable (Optional)
        Precomputed coefficients with at least n rows.

    Returns
    -------
    derivative : float

    Examples
    --------
    >>> from secondkind import *
    >>> import math
    >>> reciprocalLogDerivative(2, math.e) * math.e ** 2
    3.0
    """
    checkNonNegativeInteger(n, 'n')
    if n < 1:
        raise ValueError("n must be >= 1 (got {0}).".format(n))
    checkLogArgument(x)
    if table is None or table.nMax < n:
        table = CoeffTable(n)

    logX = math.log(x)
    total = 0.0
    for i in range(2, n + 2):
        total += table.value(n, i) / logX ** i
    return alternatingSign(n) * total / x ** n


def reciprocalLogShiftedDerivative(m: int, t: float, triangle: StirlingTriangle = None) -> float:
    r"""The m-th derivative of 1/ln(1+t) with Stirling numbers:

        [1/ln(1+t)]^(m) = 1/(1+t)^m  sum_{i=0}^{m} (-1)^i i! s(m,i) / [ln(1+t)]^(i+1)

    Valid for every m >= 0, t > -1 and t != 0.
    """
    checkNonNegativeInteger(m, 'm')
    checkShiftedLogArgument(t)
    if triangle is None or triangle.nMax < m:
        triangle = StirlingTriangle(m)

    logT = math.log1p(t)
    total = 0.0
    for i in range(m + 1):
        coefficient = alternatingSign(i) * math.factorial(i) * triangle.value(m, i)
        total += coefficient / logT ** (i + 1)
    return total / (1 + t) ** m


def reciprocalLogDerivativeByJet(n: int, x: float) -> float:
    """ (1/ln x)^(n) by truncated Taylor arithmetic, the reference for the closed forms """
    checkNonNegativeInteger(n, 'n')
    checkLogArgument(x)
    variable = Jet.variable(x, n)
    return (1 / variable.log()).derivative(n)


def xOverLogDerivative(i: int, x: float, variant: str = 'coefficients',
                       table: CoeffTable = None, triangle: StirlingTriangle = None) -> float:
    r"""The i-th derivative of x/ln(1+x) from one of two equivalent closed forms.

    With L = ln(1+x):

    variant='coefficients':
        (-1)^i/(1+x)^i  sum_{k=1}^{i+1} [x a(i,k) - i(1+x) a(i-1,k)] / L^k
    variant='stirling':
        (-1)^i/(1+x)^i  sum_{k=0}^{i} (-1)^(i+k) k! [x s(i,k) + i(1+x) s(i-1,k)] / L^(k+1)

    where a(i-1,i+1) = 0, s(i-1,i) = 0, and a(0,1) = 1, a(0,k) = 0 otherwise.
    The k=1 (resp. k=0) term only contributes for i=1, where it carries the
    1/L of the product rule.

    Parameters
    ----------
    i : int
        Order of the derivative (>= 1).
    x : float
        Abscissa, x > -1 and x != 0.
    variant : str
        'coefficients' or 'stirling'.

    Notes
    -----
    Near x = 0 both forms suffer from cancellation between terms of size
    1/L^(i+1). The limit itself is i! b_i, obtained exactly with
    xOverLogDerivativeAtZero().
    """
    checkNonNegativeInteger(i, 'i')
    if i < 1:
        raise ValueError("i must be >= 1 (got {0}).".format(i))
    checkShiftedLogArgument(x)
    logX = math.log1p(x)

    total = 0.0
    if variant == 'coefficients':
        if table is None or table.nMax < i:
            table = CoeffTable(i)

        def previous(k):
            if i == 1:
                return 1 if k == 1 else 0
            return table.value(i - 1, k)

        for k in range(1, i + 2):
            total += (x * table.value(i, k) - i * (1 + x) * previous(k)) / logX ** k
    elif variant == 'stirling':
        if triangle is None or triangle.nMax < i:
            triangle = StirlingTriangle(i)
        for k in range(0, i + 1):
            weight = alternatingSign(i + k) * math.factorial(k)
            current = weight * triangle.value(i, k)
            shifted = weight * triangle.value(i - 1, k)
            total += (x * current + i * (1 + x) * shifted) / logX ** (k + 1)
    else:
        raise ValueError("Unknown variant '{0}': use 'coefficients' or 'stirling'.".format(variant))
    return alternatingSign(i) * total / (1 + x) ** i


def xOverLogDerivativeByJet(i: int, x: float) -> float:
    checkNonNegativeInteger(i, 'i')
    checkShiftedLogArgument(x)
    variable = Jet.variable(x, i)
    return (variable / (variable + 1).log()).derivative(i)


def expReciprocalDerivative(i: int, t: float) -> float:
    r"""The i-th derivative of exp(-1/t):

        1/(e^{1/t} t^{2i})  sum_{k=0}^{i-1} (-1)^k c(i,k) t^k
    """
    checkNonNegativeInteger(i, 'i')
    if i < 1:
        raise ValueError("i must be >= 1 (got {0}).".format(i))
    if t == 0:
        raise ValueError("exp(-1/t) is not differentiable in this form at t = 0.")
    weights = CWeights(i)
    total = 0.0
    for k, c in enumerate(weights.values):
        total += alternatingSign(k) * c * t ** k
    return math.exp(-1 / t) * total / t ** (2 * i)


def expReciprocalDerivativeByJet(i: int, t: float) -> float:
    checkNonNegativeInteger(i, 'i')
    if t == 0:
        raise ValueError("exp(-1/t) is not differentiable in this form at t = 0.")
    variable = Jet.variable(t, i)
    return (-1 / variable).exp().derivative(i)

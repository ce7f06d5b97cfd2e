from .utils import *
from .stirling import *
from .jet import *
from .derivatives import *
from .quadrature import *

import math
from dataclasses import dataclass

import numpy as np


class RisingFactorialPoly:
    r"""The rising factorial u(u+1)...(u+n-1) = Gamma(u+n)/Gamma(u) as a polynomial in u.

    Its coefficients are the unsigned Stirling numbers of the first kind:
    coefficients[j] = |s(n,j)| = (-1)^(n-j) s(n,j).

    Parameters
    ----------
    n : int
        Number of factors (>= 0).
    triangle : StirlingTriangle (Optional)
        Precomputed triangle with at least n rows.

    Examples
    --------
    >>> from secondkind import *
    >>> RisingFactorialPoly(3).coefficients
    (0, 2, 3, 1)
    """

    def __init__(self, n: int, triangle: StirlingTriangle = None):
        checkNonNegativeInteger(n, 'n')
        if triangle is None or triangle.nMax < n:
            triangle = StirlingTriangle(n)
        self.n = n
        self._coefficients = tuple(triangle.unsigned(n, j) for j in range(n + 1))

    @property
    def coefficients(self) -> tuple:
        return self._coefficients

    @property
    def degree(self) -> int:
        return self.n

    def __call__(self, u):
        value = 0
        for c in reversed(self._coefficients):
            value = value * u + c
        return value

    def times(self, other) -> tuple:
        """ Integer coefficients of the product with another polynomial (lowest degree first) """
        product = [0] * (len(self._coefficients) + len(other) - 1)
        for j, a in enumerate(self._coefficients):
            if a:
                for l, b in enumerate(other):
                    product[j + l] += a * b
        return tuple(product)


def checkIdentityIndices(n: int, k: int):
    checkNonNegativeInteger(n, 'n')
    checkNonNegativeInteger(k, 'k')
    if n < 1 or not 1 <= k <= n + 1:
        raise ValueError("Need n >= 1 and 1 <= k <= n+1 (got n={0}, k={1}).".format(n, k))


def expReciprocalWeightPolynomial(k: int) -> tuple:
    """ Coefficients in u of sum_{l=0}^{k-1} (-1)^l c(k,l) u^(k-l), lowest degree first """
    weights = CWeights(k)
    coefficients = [0] * (k + 1)
    for l, c in enumerate(weights.values):
        coefficients[k - l] = alternatingSign(l) * c
    return tuple(coefficients)


def factorialStirlingSum(n: int, k: int, triangle: StirlingTriangle = None) -> int:
    r"""The integer

        sum_{i=k-1}^{n} (-1)^(n+i) i! (i+1)! s(n,i) / (i-k+1)!

    for n >= 1 and 1 <= k <= n+1. Each term is an integer because
    (i+1)!/(i-k+1)! is a product of k consecutive integers.
    """
    checkIdentityIndices(n, k)
    if triangle is None or triangle.nMax < n:
        triangle = StirlingTriangle(n)
    total = 0
    for i in range(k - 1, n + 1):
        total += alternatingSign(n + i) * math.factorial(i) * fallingFactorial(i + 1, k) * triangle.value(n, i)
    return total


def risingFactorialIntegralExact(n: int, k: int, triangle: StirlingTriangle = None) -> int:
    r"""The integral

        int_0^inf Gamma(u+n)/Gamma(u) [sum_{l=0}^{k-1} (-1)^l c(k,l) u^(k-l)] e^{-u} du

    evaluated term by term with int_0^inf u^p e^{-u} du = p!, so that the
    result is an exact integer. It equals factorialStirlingSum(n, k).
    """
    checkIdentityIndices(n, k)
    rising = RisingFactorialPoly(n, triangle)
    product = rising.times(expReciprocalWeightPolynomial(k))
    return sum(c * math.factorial(p) for p, c in enumerate(product) if c)


def risingFactorialIntegral(n: int, k: int, config: QuadratureConfig = None, method: str = 'laguerre',
                            triangle: StirlingTriangle = None) -> float:
    """Same integral as risingFactorialIntegralExact(), computed numerically.

    Parameters
    ----------
    method : str
        'laguerre' (default) uses Gauss-Laguerre nodes, exact for the
        polynomial degree n+k up to rounding. 'adaptive' integrates
        p(u) exp(-u) over [0, inf) with scipy's QUADPACK.

    Raises
    ------
    QuadratureError
        If the adaptive quadrature does not converge.
    """
    checkIdentityIndices(n, k)
    if config is None:
        config = QuadratureConfig()
    rising = RisingFactorialPoly(n, triangle)
    product = rising.times(expReciprocalWeightPolynomial(k))

    if method == 'laguerre':
        return laguerreIntegral(product, config=config)
    elif method == 'adaptive':
        polynomial = np.polynomial.Polynomial([float(c) for c in product])
        value, errorEstimate = adaptiveIntegral(lambda u: polynomial(u) * math.exp(-u), 0, math.inf, config)
        return value
    raise ValueError("Unknown method '{0}': use 'laguerre' or 'adaptive'.".format(method))


@dataclass(frozen=True)
class PolynomialCheckReport:
    """Coefficient by coefficient comparison of two polynomials in t.

    leftCoefficients[j] and rightCoefficients[j] are the coefficients of t^(j+1).
    """
    m: int
    leftCoefficients: tuple
    rightCoefficients: tuple

    @property
    def passed(self) -> bool:
        return self.leftCoefficients == self.rightCoefficients

    @property
    def mismatches(self) -> tuple:
        return tuple(j + 1 for j, (a, b) in enumerate(zip(self.leftCoefficients, self.rightCoefficients)) if a != b)


def gammaStirlingPolynomialCheck(m: int, triangle: StirlingTriangle = None) -> PolynomialCheckReport:
    r"""Compares both sides of

        int_0^inf Gamma(u+m)/Gamma(u) e^{-u/t} du = sum_i (-1)^(m+i) i! s(m,i) t^(i+1)

    as polynomials in t. The left side is integrated term by term,
    int_0^inf u^j e^{-u/t} du = j! t^(j+1), with the unsigned coefficients of
    the rising factorial.
    """
    checkNonNegativeInteger(m, 'm')
    if m < 1:
        raise ValueError("m must be >= 1 (got {0}).".format(m))
    if triangle is None or triangle.nMax < m:
        triangle = StirlingTriangle(m)
    rising = RisingFactorialPoly(m, triangle)
    left = tuple(c * math.factorial(j) for j, c in enumerate(rising.coefficients))
    right = tuple(alternatingSign(m + i) * math.factorial(i) * triangle.value(m, i) for i in range(m + 1))
    return PolynomialCheckReport(m=m, leftCoefficients=left, rightCoefficients=right)


def gammaStirlingSum(m: int, t: float, triangle: StirlingTriangle = None) -> float:
    """ sum_{i=0}^{m} (-1)^(m+i) i! s(m,i) / [ln(1+t)]^(i+1), for t > 0 """
    checkNonNegativeInteger(m, 'm')
    if t <= 0:
        raise ValueError("t must be positive (got {0}).".format(t))
    if triangle is None or triangle.nMax < m:
        triangle = StirlingTriangle(m)
    rate = math.log1p(t)
    return sum(alternatingSign(m + i) * math.factorial(i) * triangle.value(m, i) / rate ** (i + 1)
               for i in range(m + 1))


def gammaStirlingIntegral(m: int, t: float, config: QuadratureConfig = None) -> float:
    """int_0^inf Gamma(u+m)/Gamma(u) (1+t)^(-u) du with Gauss-Laguerre nodes scaled
    to the rate ln(1+t). Must equal gammaStirlingSum(m, t)."""
    checkNonNegativeInteger(m, 'm')
    if t <= 0:
        raise ValueError("t must be positive (got {0}).".format(t))
    rising = RisingFactorialPoly(m)
    return laguerreIntegral(rising.coefficients, scale=math.log1p(t), config=config)


def stieltjesLeftSide(m: int, k: int, triangle: StirlingTriangle = None) -> int:
    """ The exact integer side of the Stieltjes-type representation; the same sum as factorialStirlingSum() """
    return factorialStirlingSum(m, k, triangle)


@dataclass(frozen=True)
class StieltjesEvaluation:
    """Pieces of the numerical side of the Stieltjes-type representation.

    Attributes
    ----------
    boundaryTerm : float
        k-th t-derivative of e^{m/t}/(e^{1/t}-1)^(m+1) at t=1.
    integral : float
        Integral over the truncation window, after u = 1 + e^v.
    errorEstimate : float
        QUADPACK error estimate of the integral.
    truncationBound : float
        Estimated integral outside the window.
    value : float
        m! (boundaryTerm + integral).
    """
    m: int
    k: int
    boundaryTerm: float
    integral: float
    errorEstimate: float
    truncationBound: float
    value: float


def evaluateStieltjesRightSide(m: int, k: int, config: QuadratureConfig = None) -> StieltjesEvaluation:
    r"""Numerical value of

        m! { d^k/dt^k [e^{m/t}/(e^{1/t}-1)^(m+1)]
             + int_1^inf 1/([ln(u-1)]^2 + pi^2) d^k/dt^k [e^{m/t}/(e^{1/t}-1+u)^(m+1)] du }  at t = 1

    The t-derivatives are read from jets of order k at t=1. The integral
    uses u = 1 + e^v: the weight becomes 1/(v^2+pi^2), du = e^v dv, and the
    integrand decays like e^{-m v} for large v and like e^v for very
    negative v. It is integrated over [config.vLo, config.vHi] and the
    tails are bounded from the values at both ends.

    Raises
    ------
    QuadratureError
        If the adaptive quadrature does not converge.
    TruncationError
        If the estimated tails exceed the tolerance.
    """
    checkIdentityIndices(m, k)
    if config is None:
        config = QuadratureConfig()

    inverse = 1 / Jet.variable(1.0, k)
    numerator = (inverse * m).exp()
    exponential = inverse.exp()
    boundaryTerm = (numerator * (exponential - 1) ** -(m + 1)).derivative(k)

    def integrand(v):
        shifted = math.exp(v)
        derivative = (numerator * (exponential + shifted) ** -(m + 1)).derivative(k)
        return derivative * shifted / (v * v + math.pi ** 2)

    integral, errorEstimate = adaptiveIntegral(integrand, config.vLo, config.vHi, config)
    truncationBound = logisticTailBounds(integrand, config, upperRate=m, lowerRate=1.0,
                                         reference=boundaryTerm + integral)
    value = math.factorial(m) * (boundaryTerm + integral)
    return StieltjesEvaluation(m=m, k=k, boundaryTerm=boundaryTerm, integral=integral,
                               errorEstimate=errorEstimate, truncationBound=truncationBound, value=value)


def stieltjesRightSide(m: int, k: int, config: QuadratureConfig = None) -> float:
    """ Value of evaluateStieltjesRightSide(); compare with stieltjesLeftSide(m, k) """
    return evaluateStieltjesRightSide(m, k, config).value


def reciprocalLogIntegral(x: float, config: QuadratureConfig = None) -> float:
    """ int_0^inf (1+x)^(-u) du, which is 1/ln(1+x) for x > 0 """
    if x <= 0:
        raise ValueError("The integral converges for x > 0 (got {0}).".format(x))
    rate = math.log1p(x)
    value, errorEstimate = adaptiveIntegral(lambda u: math.exp(-rate * u), 0, math.inf, config)
    return value


def reciprocalLogStieltjes(x: float, config: QuadratureConfig = None) -> float:
    r"""1/x + int_1^inf dt / (([ln(t-1)]^2 + pi^2)(x+t)), equal to 1/ln(1+x) for x > 0.

    After t = 1 + e^v the integrand e^v/((v^2+pi^2)(x+1+e^v)) only decays
    like 1/v^2, so it is integrated over the whole line rather than a
    truncation window.
    """
    if x <= 0:
        raise ValueError("The representation is checked for x > 0 (got {0}).".format(x))

    def integrand(v):
        # e^v/(x+1+e^v) written to avoid overflow for large v
        if v > 0:
            fraction = 1 / ((x + 1) * math.exp(-v) + 1)
        else:
            shifted = math.exp(v)
            fraction = shifted / (x + 1 + shifted)
        return fraction / (v * v + math.pi ** 2)

    value, errorEstimate = adaptiveIntegral(integrand, -math.inf, math.inf, config)
    return 1 / x + value

from .utils import *

import math
import numpy as np


class Jet:
    r"""A truncated Taylor expansion at a point x0, with float coefficients.

    The jet of f at x0 to order K holds c_k = f^(k)(x0)/k! for k = 0..K.
    Arithmetic on jets is the arithmetic of truncated power series in
    (x - x0), so composing jets gives the derivatives of the composite
    function to working precision, without the cancellation of finite
    differences.

    The operators are overloaded and the elementary functions are methods:

    x = Jet.variable(2.0, order=5)
    f = 1 / x.log()
    f.derivative(5)

    Parameters
    ----------
    coefficients : array-like of float
        Taylor coefficients c_0..c_K.
    x0 : float
        Expansion point, kept for display and consistency checks. (default = 0)

    Notes
    -----
    Jets combined together must have the same order. Division requires a
    non-zero constant coefficient; the logarithm requires a positive one.
    """

    def __init__(self, coefficients, x0: float = 0.0):
        self._coefficients = np.array(coefficients, dtype=float)
        if self._coefficients.ndim != 1 or len(self._coefficients) == 0:
            raise ValueError("A jet needs a one-dimensional, non-empty list of coefficients.")
        self._coefficients.setflags(write=False)
        self.x0 = float(x0)

    @classmethod
    def variable(cls, x0: float, order: int) -> 'Jet':
        """ The identity function x at x0 """
        checkNonNegativeInteger(order, 'order')
        coefficients = np.zeros(order + 1)
        coefficients[0] = x0
        if order >= 1:
            coefficients[1] = 1.0
        return cls(coefficients, x0)

    @classmethod
    def constant(cls, value: float, order: int, x0: float = 0.0) -> 'Jet':
        checkNonNegativeInteger(order, 'order')
        coefficients = np.zeros(order + 1)
        coefficients[0] = value
        return cls(coefficients, x0)

    @property
    def order(self) -> int:
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> np.ndarray:
        return self._coefficients

    @property
    def value(self) -> float:
        return float(self._coefficients[0])

    def derivative(self, k: int) -> float:
        """ k-th derivative at x0, k! c_k """
        if not 0 <= k <= self.order:
            raise ValueError("Derivative {0} is beyond the jet order {1}.".format(k, self.order))
        return math.factorial(k) * float(self._coefficients[k])

    def _like(self, coefficients) -> 'Jet':
        return Jet(coefficients, self.x0)

    def _coerce(self, other):
        if isinstance(other, Jet):
            if other.order != self.order:
                raise ValueError("Jet orders do not match: {0} and {1}.".format(self.order, other.order))
            return other._coefficients
        elif isinstance(other, (int, float, np.floating, np.integer)):
            coefficients = np.zeros(self.order + 1)
            coefficients[0] = other
            return coefficients
        raise TypeError("Cannot combine a Jet with '{0}'.".format(other))

    def __add__(self, other):
        return self._like(self._coefficients + self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-self._coefficients)

    def __sub__(self, other):
        return self._like(self._coefficients - self._coerce(other))

    def __rsub__(self, other):
        return self._like(self._coerce(other) - self._coefficients)

    def __mul__(self, other):
        if isinstance(other, Jet):
            product = np.convolve(self._coefficients, self._coerce(other))[:self.order + 1]
            return self._like(product)
        elif isinstance(other, (int, float, np.floating, np.integer)):
            return self._like(self._coefficients * other)
        raise TypeError("Cannot multiply a Jet by '{0}'.".format(other))

    __rmul__ = __mul__

    def reciprocal(self) -> 'Jet':
        """ 1/f with c_0 = 1/a_0 and c_n = -(1/a_0) sum_{j=1}^{n} a_j c_{n-j} """
        a = self._coefficients
        if a[0] == 0:
            raise ZeroDivisionError("Cannot divide by a jet whose value is zero.")
        c = np.zeros_like(a)
        c[0] = 1.0 / a[0]
        for n in range(1, len(a)):
            c[n] = -np.dot(a[1:n + 1], c[n - 1::-1]) / a[0]
        return self._like(c)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        elif isinstance(other, (int, float, np.floating, np.integer)):
            return self._like(self._coefficients / other)
        raise TypeError("Cannot divide a Jet by '{0}'.".format(other))

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, exponent: int) -> 'Jet':
        """ Integer powers; negative exponents go through the reciprocal """
        if not isinstance(exponent, int):
            raise TypeError("Only integer powers of a jet are supported.")
        base = self if exponent >= 0 else self.reciprocal()
        exponent = abs(exponent)
        result = Jet.constant(1.0, self.order, self.x0)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def exp(self) -> 'Jet':
        """ e_0 = exp(a_0), e_n = (1/n) sum_{k=1}^{n} k a_k e_{n-k} """
        a = self._coefficients
        e = np.zeros_like(a)
        e[0] = math.exp(a[0])
        for n in range(1, len(a)):
            k = np.arange(1, n + 1)
            e[n] = np.dot(k * a[1:n + 1], e[n - 1::-1]) / n
        return self._like(e)

    def log(self) -> 'Jet':
        """ l_0 = ln(a_0), l_n = (a_n - (1/n) sum_{k=1}^{n-1} k l_k a_{n-k}) / a_0 """
        a = self._coefficients
        if a[0] <= 0:
            raise ValueError("The logarithm of a jet needs a positive value (got {0}).".format(a[0]))
        l = np.zeros_like(a)
        l[0] = math.log(a[0])
        for n in range(1, len(a)):
            k = np.arange(1, n)
            l[n] = (a[n] - np.dot(k * l[1:n], a[n - 1:0:-1]) / n) / a[0]
        return self._like(l)

    def __str__(self):
        terms = ["{0:.6g}".format(self._coefficients[0])]
        for k, c in enumerate(self._coefficients[1:], start=1):
            terms.append("{0:.6g} h^{1}".format(c, k))
        return "Jet at x0={0}: ".format(self.x0) + " + ".join(terms)

from .utils import *

import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import laguerre
from scipy import integrate


class QuadratureError(Exception):
    """ The adaptive quadrature did not converge within the allowed subdivisions """


class TruncationError(QuadratureError):
    """ The integral outside the truncation window is larger than the tolerance """


@dataclass(frozen=True)
class QuadratureConfig:
    """Numerical settings shared by all the improper integrals.

    Parameters
    ----------
    absTol : float
        Absolute tolerance requested from the adaptive quadrature, also the
        largest tail allowed outside the truncation window. (default = 1e-12)
    relTol : float
        Relative tolerance requested from the adaptive quadrature. (default = 1e-10)
    maxSubdivisions : int
        Largest number of subintervals of the adaptive quadrature. (default = 200)
    vLo : float
        Lower end of the window in v after the substitution u = 1 + e^v. (default = -30)
    vHi : float
        Upper end of that window. (default = 30)
    laguerreNodes : int (Optional)
        Number of Gauss-Laguerre nodes. By default, the smallest number that
        integrates the polynomial exactly.
    """
    absTol: float = 1e-12
    relTol: float = 1e-10
    maxSubdivisions: int = 200
    vLo: float = -30.0
    vHi: float = 30.0
    laguerreNodes: int = None

    def __post_init__(self):
        if not self.absTol > 0 or not self.relTol > 0:
            raise ValueError("Tolerances must be strictly positive.")
        if self.maxSubdivisions < 1:
            raise ValueError("maxSubdivisions must be at least 1.")
        if not self.vLo < self.vHi:
            raise ValueError("The truncation window needs vLo < vHi (got [{0}, {1}]).".format(self.vLo, self.vHi))
        if self.laguerreNodes is not None and self.laguerreNodes < 1:
            raise ValueError("laguerreNodes must be at least 1.")


def adaptiveIntegral(function, lower: float, upper: float, config: QuadratureConfig = None):
    """Integrates with scipy's adaptive QUADPACK routine.

    Infinite bounds are accepted. The call fails with QuadratureError when
    QUADPACK reports a problem and its error estimate is above both
    tolerances; a reported problem with an acceptable error estimate only
    issues a warning.

    Returns
    -------
    (value, errorEstimate) : (float, float)
    """
    if config is None:
        config = QuadratureConfig()
    result = integrate.quad(function, lower, upper, epsabs=config.absTol, epsrel=config.relTol,
                            limit=config.maxSubdivisions, full_output=1)
    value, errorEstimate = result[0], result[1]
    if len(result) > 3:
        message = result[3]
        if errorEstimate > max(config.absTol, config.relTol * abs(value)):
            raise QuadratureError("Integral over [{0}, {1}] did not converge: {2} (error estimate {3:.3g})".format(
                lower, upper, message, errorEstimate))
        warnings.warn("Quadrature over [{0}, {1}] accepted with a warning: {2}".format(lower, upper, message),
                      UserWarning)
    return value, errorEstimate


def laguerreNodeCount(degree: int, config: QuadratureConfig = None) -> int:
    """ Smallest Gauss-Laguerre rule exact for a polynomial of this degree, unless configured """
    if config is not None and config.laguerreNodes is not None:
        return config.laguerreNodes
    return degree // 2 + 1


def laguerreIntegral(coefficients, scale: float = 1.0, config: QuadratureConfig = None) -> float:
    r"""Integral of p(u) exp(-scale*u) over [0, inf) with Gauss-Laguerre nodes.

    p(u) = sum_j coefficients[j] u^j. The rule with N nodes is exact when
    the degree of p is at most 2N-1, so the result only carries the
    rounding errors of the nodes and weights.

    Parameters
    ----------
    coefficients : sequence of numbers
        Polynomial coefficients, lowest degree first. Integers are converted
        to floats.
    scale : float
        Rate of the exponential weight (> 0).
    """
    if scale <= 0:
        raise ValueError("The exponential rate must be positive (got {0}).".format(scale))
    values = np.array([float(c) for c in coefficients])
    nodes, weights = laguerre.laggauss(laguerreNodeCount(len(values) - 1, config))
    polynomial = np.polynomial.Polynomial(values)
    return float(np.dot(weights, polynomial(nodes / scale))) / scale


def logisticTailBounds(function, config: QuadratureConfig, upperRate: float, lowerRate: float = 1.0,
                       reference: float = 0.0):
    """Estimated integral of a function outside [vLo, vHi], assuming it decays
    like exp(-upperRate*v) above the window and like exp(lowerRate*v) below.

    Raises
    ------
    TruncationError
        If the sum of both tails exceeds max(config.absTol, config.relTol*|reference|).
    """
    upperTail = abs(function(config.vHi)) / upperRate
    lowerTail = abs(function(config.vLo)) / lowerRate
    bound = upperTail + lowerTail
    allowed = max(config.absTol, config.relTol * abs(reference))
    if bound > allowed:
        raise TruncationError("Truncation window [{0}, {1}] leaves a tail of {2:.3g} (> {3:.3g}).".format(
            config.vLo, config.vHi, bound, allowed))
    return bound

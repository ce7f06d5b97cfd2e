import warnings
from fractions import Fraction


def warningLineFormat(message, category, filename, lineno, line=None):
    return '\n%s:%s\n%s:%s\n' % (filename, lineno, category.__name__, message)


warnings.formatwarning = warningLineFormat


def alternatingSign(exponent: int) -> int:
    """ (-1)**exponent without going through floats or negative powers """
    return -1 if exponent % 2 else 1


def fallingFactorial(x: int, k: int) -> int:
    """ x(x-1)...(x-k+1), with the empty product equal to 1 """
    if k < 0:
        raise ValueError("The number of factors must be non-negative.")
    product = 1
    for j in range(k):
        product *= x - j
    return product


def asInteger(value: Fraction) -> int:
    """Converts an exact rational that must be integral into an int.

    Raises
    ------
    ArithmeticError
        If the denominator is not 1. Callers use this where integrality
        is a mathematical certainty, so a failure is a bug, not bad input.
    """
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError("Expected an integer, obtained {0}".format(value))
    return value.numerator


def checkNonNegativeInteger(value, name: str):
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError("'{0}' must be an integer, not {1}.".format(name, type(value).__name__))
    if value < 0:
        raise ValueError("'{0}' must be non-negative (got {1}).".format(name, value))


def relativeResidual(value, reference) -> float:
    """ |value - reference| / |reference|, or the absolute difference when reference is zero """
    difference = abs(float(value) - float(reference))
    if reference == 0:
        return difference
    return difference / abs(float(reference))

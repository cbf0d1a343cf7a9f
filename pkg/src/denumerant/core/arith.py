""" Exact integer primitives and the combinatorial coefficient functions.

All values are Python integers, so nothing overflows regardless of magnitude.

"""
import math

from .errors import InvalidInputError, InvariantError


__all__ = "gcd_lcm_all", "rising_factorial", "c_poly", "stars_and_bars"


def _check_positive(values):
    values = list(values)
    if not values:
        raise InvalidInputError("coefficient list is empty")
    for i, value in enumerate(values, 1):
        if isinstance(value, bool) or not isinstance(value, int):
            raise InvalidInputError(f"coefficient a{i}={value!r} is not an integer")
        if value < 1:
            raise InvalidInputError(f"coefficient a{i}={value} is not positive")
    return values


def gcd_lcm_all(coefficients) -> tuple[int, int]:
    """ Greatest common divisor and least common multiple of all entries.

    :param coefficients: non-empty sequence of positive integers
    :return: (gcd, lcm)
    """
    values = _check_positive(coefficients)
    return math.gcd(*values), math.lcm(*values)


def rising_factorial(k: int, l: int) -> int:
    """ k(k+1)...(k+l-1); 1 for l = 0.

    """
    return math.prod(range(k, k + l))


def c_poly(k: int, l: int) -> int:
    """ Rising-factorial coefficient C(k, l).

    For k >= 1 this is k(k+1)...(k+l-1)/l!, i.e. binomial(k+l-1, l), and
    C(k, 0) = 1. Any k <= 0 gives 0.

    :param k: integer argument
    :param l: non-negative order
    """
    if l < 0:
        raise InvalidInputError(f"order l={l} is negative")
    if k < 1:
        return 0
    quotient, remainder = divmod(rising_factorial(k, l), math.factorial(l))
    if remainder:
        raise InvariantError(f"C({k}, {l}): rising factorial not divisible by {l}!")
    return quotient


def stars_and_bars(m: int, n: int) -> int:
    """ Number of non-negative solutions of x1 + ... + xn = m.

    :param m: right-hand side
    :param n: number of unknowns, at least 1
    """
    if n < 1:
        raise InvalidInputError(f"number of unknowns n={n} must be at least 1")
    if m < 0:
        return 0
    if n == 1:
        return 1
    return math.comb(m + n - 1, n - 1)

""" Closed forms for two coefficient families.

For x1 + ... + x_{n-1} + 2 x_n = b (M = 2) the bounded profile is binomial,
P'(c) = binom(n-1, c), which turns the residue formula into one binomial sum
for even b and another for odd b. All-ones coefficients reduce to stars and
bars.

"""
import math

from .arith import c_poly, stars_and_bars


__all__ = "matches_unit_two", "matches_all_ones", "unit_two_profile", "unit_two_count", "all_ones_count"


def matches_unit_two(coefficients) -> bool:
    """ True for a permutation of (1, ..., 1, 2).

    """
    coefficients = sorted(coefficients)
    return bool(coefficients) and coefficients[-1] == 2 and all(a == 1 for a in coefficients[:-1])


def matches_all_ones(coefficients) -> bool:
    coefficients = list(coefficients)
    return bool(coefficients) and all(a == 1 for a in coefficients)


def unit_two_profile(n: int) -> list[int]:
    """ P'(0), ..., P'(n-1) for n - 1 ones and a two.

    """
    return [math.comb(n - 1, c) for c in range(n)]


def unit_two_count(n: int, b: int) -> int:
    """ Solutions of x1 + ... + x_{n-1} + 2 x_n = b.

    """
    half = b // 2
    if b % 2 == 0:
        return sum(math.comb(n - 1, 2 * k) * c_poly(half - k + 1, n - 1) for k in range((n - 1) // 2 + 1))
    return sum(math.comb(n - 1, 2 * k + 1) * c_poly(half - k + 1, n - 1) for k in range((n - 2) // 2 + 1))


def all_ones_count(n: int, b: int) -> int:
    return stars_and_bars(b, n)

""" Reference counts by dynamic programming over the value axis.

Nothing here shares code with the formula routes; the tests compare the two.

"""
from .config import limit
from .errors import InvalidInputError, ResourceError


__all__ = "count_dp", "count_leq_dp", "count_bounded_dp", "denumerant_series"


def _check(coefficients, b, cap):
    coefficients = list(coefficients)
    if not coefficients:
        raise InvalidInputError("coefficient list is empty")
    for i, a in enumerate(coefficients, 1):
        if isinstance(a, bool) or not isinstance(a, int) or a < 1:
            raise InvalidInputError(f"coefficient a{i}={a!r} is not a positive integer")
    if isinstance(b, bool) or not isinstance(b, int) or b < 0:
        raise InvalidInputError(f"right-hand side b={b!r} is not a non-negative integer")
    cap = limit("oracle_cap", cap)
    if b > cap:
        raise ResourceError(f"b={b} exceeds the oracle cap of {cap}")
    return coefficients


def denumerant_series(coefficients, b_max: int, cap=None) -> list[int]:
    """ [P(0), ..., P(b_max)] from the unbounded-coin recurrence.

    """
    coefficients = _check(coefficients, b_max, cap)
    ways = [0] * (b_max + 1)
    ways[0] = 1
    for a in coefficients:
        for c in range(a, b_max + 1):
            ways[c] += ways[c - a]
    return ways


def count_dp(coefficients, b: int, cap=None) -> int:
    """ Number of non-negative solutions of sum(a_i x_i) = b.

    :param coefficients: positive integers
    :param b: right-hand side, at most the oracle cap
    :param cap: oracle cap (configured oracle_cap by default)
    """
    return denumerant_series(coefficients, b, cap)[b]


def count_leq_dp(coefficients, b: int, cap=None) -> int:
    """ Number of non-negative solutions of sum(a_i x_i) <= b.

    """
    total = 0
    for ways in denumerant_series(coefficients, b, cap):
        total += ways
    return total


def count_bounded_dp(coefficients, upper_bounds, c: int, cap=None) -> int:
    """ Number of tuples with sum(a_j t_j) = c and 0 <= t_j <= upper_bounds[j].

    """
    coefficients = _check(coefficients, c, cap)
    upper_bounds = list(upper_bounds)
    if len(upper_bounds) != len(coefficients):
        raise InvalidInputError(f"{len(coefficients)} coefficients but {len(upper_bounds)} bounds")
    if any(bound < 0 for bound in upper_bounds):
        raise InvalidInputError(f"negative bound in {upper_bounds}")
    ways = [0] * (c + 1)
    ways[0] = 1
    for a, bound in zip(coefficients, upper_bounds):
        new = [0] * (c + 1)
        for value, count in enumerate(ways):
            if not count:
                continue
            for t in range(bound + 1):
                target = value + t * a
                if target > c:
                    break
                new[target] += count
        ways = new
    return ways[c]

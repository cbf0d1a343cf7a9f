""" Direct summation formulas for the equation and the inequality.

P(b) is the sum over the index box 0 <= t_i <= d_i - 1 of C(f + 1, n - 1),
where f = (b - sum(a_i t_i)) / M. Summands with a non-integer f vanish, and so
do summands with f < 0. The inequality count Q(b) is P(b) of the equation with
one extra slack unknown of coefficient 1.

"""
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

from .arith import c_poly
from .config import limit
from .EquationSpec import EquationSpec, term_count
from .errors import InvalidInputError, ResourceError
from .logger import logger
from .MixedRadixCursor import MixedRadixCursor


__all__ = "count_eq_direct", "count_leq_direct", "iter_terms", "check_rhs"


def check_rhs(b) -> int:
    """ Validate a right-hand side.

    """
    if isinstance(b, bool) or not isinstance(b, int):
        raise InvalidInputError(f"right-hand side b={b!r} is not an integer")
    if b < 0:
        raise InvalidInputError(f"right-hand side b={b} is negative")
    return b


def _prune_position(cursor, b):
    # Highest digit position whose suffix sum already exceeds b.
    acc = 0
    for pos in range(len(cursor.digits) - 1, -1, -1):
        acc += cursor.weights[pos] * cursor.digits[pos]
        if acc > b:
            return pos
    return 0


def _count_range(spec, b, start, stop, prune):
    cursor = MixedRadixCursor(spec, start, stop)
    modulus = spec.modulus
    order = spec.n - 1
    total = 0
    skips = 0
    while not cursor.exhausted:
        rest = b - cursor.running_sum
        if rest < 0 and prune:
            cursor.skip_subtree(_prune_position(cursor, b))
            skips += 1
            continue
        if rest % modulus == 0:
            total += c_poly(rest // modulus + 1, order)
        cursor.advance()
    logger.debug(f"range [{start}, {stop}) of {spec}: {skips} subtrees pruned")
    return total


def _check_budget(spec, budget, route):
    terms = term_count(spec)
    budget = limit("term_budget", budget)
    if terms > budget:
        raise ResourceError(
            f"{route} needs {terms} terms for {spec}, over the budget of {budget}; "
            "build a residue table (build-table) and query it instead"
        )
    return terms


def count_eq_direct(spec: EquationSpec, b: int, budget=None, prune=True, partitions=1, workers=None) -> int:
    """ Number of non-negative solutions of sum(a_i x_i) = b.

    :param spec: the equation
    :param b: non-negative right-hand side
    :param budget: maximal number of summands (configured term_budget by
        default)
    :param prune: skip index subtrees whose partial sum already exceeds b
    :param partitions: number of disjoint index ranges to sum separately
    :param workers: process count; more than one sums the ranges in parallel
    """
    check_rhs(b)
    terms = _check_budget(spec, budget, "direct formula")
    return _sum_partitions(spec, b, terms, prune, partitions, workers)


def count_leq_direct(spec: EquationSpec, b: int, budget=None, prune=True, partitions=1, workers=None) -> int:
    """ Number of non-negative solutions of sum(a_i x_i) <= b.

    Counted as the equation x_{n+1} + sum(a_i x_i) = b, whose extra radix is M.
    Parameters are those of count_eq_direct.
    """
    check_rhs(b)
    slack = spec.with_slack()
    terms = _check_budget(slack, budget, "direct inequality formula")
    return _sum_partitions(slack, b, terms, prune, partitions, workers)


def _sum_partitions(spec, b, terms, prune, partitions, workers):
    workers = limit("workers", workers)
    if partitions < 1:
        raise InvalidInputError(f"partitions={partitions} must be at least 1")
    if workers > 1 and partitions == 1:
        partitions = workers
    partitions = min(partitions, terms)
    bounds = [terms * i // partitions for i in range(partitions + 1)]
    logger.debug(f"direct route for {spec}, b={b}: {terms} terms in {partitions} ranges")
    starts, stops = bounds[:-1], bounds[1:]
    if workers == 1:
        return sum(map(_count_range, repeat(spec), repeat(b), starts, stops, repeat(prune)))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return sum(executor.map(_count_range, repeat(spec), repeat(b), starts, stops, repeat(prune)))


def iter_terms(spec: EquationSpec, b: int):
    """ Yield (digits, f) for every non-zero summand of the direct formula.

    No pruning is applied; intended for inspection of small instances.
    """
    check_rhs(b)
    modulus = spec.modulus
    cursor = MixedRadixCursor(spec)
    for digits in cursor:
        rest = b - cursor.running_sum
        if rest % modulus == 0 and rest >= 0:
            yield digits, rest // modulus

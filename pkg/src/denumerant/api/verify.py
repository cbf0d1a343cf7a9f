""" Implement the verify command.

Every route that applies to the instance is compared with the DP oracle for
b = 0..b_max, followed by structural checks on the bounded profile and the
residue table. The first disagreement stops the run.

"""
import math
from typing import Optional

from pydantic import BaseModel

from ..core.closed_form import all_ones_count, matches_all_ones, matches_unit_two, unit_two_count
from ..core.closed_form import unit_two_profile
from ..core.config import limit
from ..core.direct import count_eq_direct, count_leq_direct
from ..core.EquationSpec import make_spec, term_count
from ..core.errors import ResourceError
from ..core.logger import logger
from ..core.oracle import denumerant_series
from ..core.ResidueTable import bounded_profile, build_table, query_table


class Divergence(BaseModel):
    b: Optional[int]
    route: str
    expected: int
    actual: int

    def __str__(self):
        where = "" if self.b is None else f"b={self.b} "
        return f"DIVERGENCE {where}route={self.route} expected={self.expected} actual={self.actual}"


class VerifyReport(BaseModel):
    checks: int = 0
    routes: dict[str, int] = {}
    divergence: Optional[Divergence] = None

    @property
    def ok(self) -> bool:
        return self.divergence is None

    def __str__(self):
        return f"OK {self.checks}" if self.ok else str(self.divergence)


class _Checker:
    """ Count comparisons and remember the first failure.

    """
    def __init__(self):
        self.report = VerifyReport()

    def check(self, route, expected, actual, b=None) -> bool:
        self.report.checks += 1
        self.report.routes[route] = self.report.routes.get(route, 0) + 1
        if expected != actual:
            self.report.divergence = Divergence(b=b, route=route, expected=expected, actual=actual)
            logger.error(str(self.report.divergence))
            return False
        return True


def _routes(spec, budget, table_cap):
    """ Equation routes as (name, b -> count) pairs, skipping unaffordable ones.

    """
    routes = []
    budget = limit("term_budget", budget)
    if term_count(spec) <= budget:
        routes.append(("direct", lambda b: count_eq_direct(spec, b, budget=budget)))
        doubled = make_spec(spec.coefficients, 2 * spec.modulus)
        if term_count(doubled) <= budget:
            routes.append(("direct-2M", lambda b: count_eq_direct(doubled, b, budget=budget)))
        slack = spec.with_slack()
        if term_count(slack) <= budget:
            routes.append(("leq-direct", lambda b: count_leq_direct(spec, b, budget=budget)))
    else:
        logger.warning(f"direct route skipped: {term_count(spec)} terms over the budget of {budget}")
    table = None
    try:
        table = build_table(spec, table_cap)
    except ResourceError as err:
        logger.warning(f"table route skipped: {err}")
    else:
        routes.append(("table", lambda b: query_table(table, b)))
    coefficients = spec.coefficients
    if matches_unit_two(coefficients):
        routes.append(("closed-form", lambda b: unit_two_count(spec.n, b)))
    if matches_all_ones(coefficients):
        routes.append(("stars-and-bars", lambda b: all_ones_count(spec.n, b)))
    return routes, table


def _check_structure(checker, spec, table, series, table_cap):
    if table is None:
        return
    profile = bounded_profile(spec, table_cap)
    if not checker.check("profile-sum", term_count(spec), profile.total()):
        return
    if not checker.check("profile-bound", 0, profile[profile.support_bound + 1]):
        return
    for c in range(min(profile.support_bound, len(series) - 1) + 1):
        if profile[c] > series[c]:
            checker.check("profile-domination", series[c], profile[c], c)
            return
    checker.check("profile-domination", 0, 0)
    if matches_unit_two(spec.coefficients) and spec.modulus == 2:
        for c, expected in enumerate(unit_two_profile(spec.n)):
            if not checker.check("closed-form-profile", expected, profile[c], c):
                return
    n = spec.n
    for r in range(min(spec.modulus, len(series))):
        values = [query_table(table, r + k * spec.modulus) for k in range(n - 1, 2 * n)]
        difference = sum((-1) ** (n - j) * math.comb(n, j) * values[j] for j in range(n + 1))
        if not checker.check("quasi-polynomial", 0, difference, r):
            return


def main(coefficients, b_max, modulus=None, budget=None, oracle_cap=None, table_cap=None) -> VerifyReport:
    """ Cross-check all routes for one instance.

    :param coefficients: positive integers
    :param b_max: largest right-hand side, at most the oracle cap
    :param modulus: common multiple to use instead of the lcm
    :param budget: term budget of the direct routes
    :param oracle_cap: largest b for the DP oracle
    :param table_cap: largest modulus for the residue table
    """
    spec = make_spec(coefficients, modulus)
    series = denumerant_series(spec.coefficients, b_max, oracle_cap)
    routes, table = _routes(spec, budget, table_cap)
    checker = _Checker()
    cumulative = 0
    for b, expected in enumerate(series):
        cumulative += expected
        for name, route in routes:
            target = cumulative if name == "leq-direct" else expected
            if not checker.check(name, target, route(b), b):
                return checker.report
    _check_structure(checker, spec, table, series, table_cap)
    logger.info(f"verify {spec}: {checker.report.checks} checks over routes {sorted(checker.report.routes)}")
    return checker.report

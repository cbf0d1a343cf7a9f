""" Implement the bench command.

Times each route for every requested b. The direct route always evaluates
the same number of summands, the table route n, and the oracle route walks
n * (b + 1) DP cells. Timings are reported, never judged.

"""
import csv
from time import perf_counter

import yaml

from ..core.config import limit
from ..core.direct import count_eq_direct
from ..core.EquationSpec import make_spec, term_count
from ..core.errors import ResourceError
from ..core.logger import logger
from ..core.oracle import count_dp
from ..core.ResidueTable import build_table, query_table


COLUMNS = "route", "b", "wall_time", "terms", "count"


def _timed(route, b, terms, func):
    start = perf_counter()
    count = func()
    elapsed = perf_counter() - start
    return {"route": route, "b": b, "wall_time": elapsed, "terms": terms, "count": count}


def main(coefficients, b_values, modulus=None, budget=None, oracle_cap=None, table_cap=None) -> list[dict]:
    """ Time the direct, table and oracle routes.

    :param coefficients: positive integers
    :param b_values: right-hand sides to time
    :param modulus: common multiple to use instead of the lcm
    :param budget: term budget of the direct route
    :param oracle_cap: largest b for the oracle route
    :param table_cap: largest modulus for the table route
    :return: one row per (route, b) with the columns in COLUMNS
    """
    spec = make_spec(coefficients, modulus)
    terms = term_count(spec)
    budget = limit("term_budget", budget)
    oracle_cap = limit("oracle_cap", oracle_cap)
    rows = []
    table = None
    try:
        start = perf_counter()
        table = build_table(spec, table_cap)
    except ResourceError as err:
        logger.warning(f"table route skipped: {err}")
    else:
        elapsed = perf_counter() - start
        rows.append({"route": "table-build", "b": None, "wall_time": elapsed, "terms": spec.n * spec.modulus, "count": None})
    for b in b_values:
        if terms <= budget:
            rows.append(_timed("direct", b, terms, lambda: count_eq_direct(spec, b, budget=budget)))
        else:
            logger.warning(f"direct route skipped for b={b}: {terms} terms over the budget of {budget}")
        if table is not None:
            rows.append(_timed("table", b, spec.n, lambda: query_table(table, b)))
        if b <= oracle_cap:
            rows.append(_timed("oracle", b, spec.n * (b + 1), lambda: count_dp(spec.coefficients, b, oracle_cap)))
        else:
            logger.debug(f"oracle route omitted for b={b} over the cap of {oracle_cap}")
    return rows


def write(rows, stream, style="csv"):
    """ Write bench rows as CSV or YAML.

    Counts are written as decimal strings.
    """
    records = [
        {**row, "count": None if row["count"] is None else str(row["count"]), "b": None if row["b"] is None else str(row["b"])}
        for row in rows
    ]
    if style == "yaml":
        yaml.safe_dump(records, stream, sort_keys=False)
        return
    writer = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for record in records:
        writer.writerow({key: "" if value is None else value for key, value in record.items()})
    return

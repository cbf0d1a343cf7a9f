""" Implement the count and count-leq commands.

"""
from ..core.direct import count_eq_direct, count_leq_direct
from ..core.EquationSpec import make_spec
from ..core.errors import InvalidInputError
from ..core.logger import logger
from ..core.ResidueTable import load_table, query_table


def count(coefficients, b, table=None, modulus=None, budget=None, workers=None, prune=True) -> int:
    """ Count solutions of the equation.

    The residue table is used when one is given, the direct formula otherwise.

    :param coefficients: positive integers, optional when a table is given
    :param b: non-negative right-hand side
    :param table: path of a saved residue table
    :param modulus: common multiple to use instead of the lcm (direct route)
    :param budget: term budget of the direct route
    :param workers: processes for the direct route
    :param prune: enable subtree pruning in the direct route
    """
    if table is not None:
        if modulus is not None:
            raise InvalidInputError("a modulus cannot be combined with a table; the table fixes its own")
        residues = load_table(table)
        if coefficients and tuple(coefficients) != residues.coefficients:
            raise InvalidInputError(
                f"coefficients {list(coefficients)} do not match the table's {list(residues.coefficients)}"
            )
        logger.debug(f"table route for {residues.spec}")
        return query_table(residues, b)
    if not coefficients:
        raise InvalidInputError("coefficients are required without a table")
    spec = make_spec(coefficients, modulus)
    logger.debug(f"direct route for {spec}")
    return count_eq_direct(spec, b, budget=budget, prune=prune, workers=workers)


def count_leq(coefficients, b, modulus=None, budget=None, workers=None, prune=True) -> int:
    """ Count solutions of the inequality with the direct formula.

    """
    spec = make_spec(coefficients, modulus)
    return count_leq_direct(spec, b, budget=budget, prune=prune, workers=workers)

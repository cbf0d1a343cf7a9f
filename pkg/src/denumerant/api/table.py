""" Implement the build-table and query commands.

"""
from ..core.EquationSpec import make_spec, nonnegative_threshold, term_count
from ..core.ResidueTable import build_table, load_table, query_table, save_table


def build(coefficients, output, modulus=None, cap=None) -> dict:
    """ Build and save a residue table.

    :param coefficients: positive integers
    :param output: destination path or stream
    :param modulus: common multiple to use instead of the lcm
    :param cap: largest accepted modulus
    :return: summary of the table
    """
    spec = make_spec(coefficients, modulus)
    table = build_table(spec, cap)
    save_table(table, output)
    return {
        "modulus": spec.modulus,
        "unknowns": spec.n,
        "terms": term_count(spec),
        "support": table.support_size(),
        "bound": nonnegative_threshold(spec),
    }


def query(table, b) -> int:
    """ Count solutions of the equation from a saved table.

    """
    return query_table(load_table(table), b)

""" Implementation of the command line interface.

"""

import os
import re
import sys
from argparse import ArgumentParser, ArgumentTypeError

from . import api
from . import defaults
from .__version__ import __version__
from .core.config import config
from .core.errors import InvalidInputError, InvariantError, ResourceError
from .core.logger import logger


__all__ = "main",


EXIT_OK = 0
EXIT_DIVERGENCE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_INVARIANT = 4
EXIT_IO = 5

# Checked in order, so subclasses must precede their bases.
EXIT_CODES = (
    (InvalidInputError, EXIT_INPUT),
    (ResourceError, EXIT_RESOURCE),
    (InvariantError, EXIT_INVARIANT),
    (OSError, EXIT_IO),
)

_DECIMAL = re.compile(r"^[0-9]+$")


def main(argv=None) -> int:
    """ Execute the application CLI.

    :param argv: argument list to parse (sys.argv by default)
    :return: exit status
    """
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        # argparse reports usage errors with status 2 and --help with 0.
        return exit.code
    try:
        _configure(args)
        return args.func(args)
    except tuple(cls for cls, _ in EXIT_CODES) as err:
        for cls, status in EXIT_CODES:
            if isinstance(err, cls):
                return die(str(err), status)
    finally:
        logger.stop()


def _parser():
    parser = ArgumentParser("denumerant", description="Count non-negative integer solutions of a*x = b and a*x <= b")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(required=True, help="sub-command help")

    # One sub parser for each command
    count_parser = subparsers.add_parser("count", help="Count solutions of the equation")
    leq_parser = subparsers.add_parser("count-leq", help="Count solutions of the inequality")
    build_parser = subparsers.add_parser("build-table", help="Precompute and save a residue table")
    query_parser = subparsers.add_parser("query", help="Count solutions of the equation from a saved table")
    verify_parser = subparsers.add_parser("verify", help="Cross-check every route against the DP oracle")
    bench_parser = subparsers.add_parser("bench", help="Time the counting routes")

    count_parser.set_defaults(func=cmd_count)
    leq_parser.set_defaults(func=cmd_count_leq)
    build_parser.set_defaults(func=cmd_build_table)
    query_parser.set_defaults(func=cmd_query)
    verify_parser.set_defaults(func=cmd_verify)
    bench_parser.set_defaults(func=cmd_bench)

    # Generic options
    all_parsers = count_parser, leq_parser, build_parser, query_parser, verify_parser, bench_parser
    for cmd_parser in all_parsers:
        cmd_parser.add_argument("-c", "--config", action="append", default=[], help="Read settings from this TOML file")
        cmd_parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug output on stderr")

    for cmd_parser in count_parser, leq_parser, build_parser, verify_parser, bench_parser:
        required = cmd_parser is not count_parser
        cmd_parser.add_argument("-a", "--coeffs", type=coefficient_list, required=required,
                                help="Comma-separated positive coefficients, e.g. 3,5,7")
        cmd_parser.add_argument("--modulus", type=positive, help="Common multiple of the coefficients to use")

    for cmd_parser in count_parser, leq_parser, verify_parser, bench_parser:
        cmd_parser.add_argument("--budget", type=positive, help="Largest number of direct-formula terms")

    for cmd_parser in count_parser, leq_parser:
        cmd_parser.add_argument("-b", type=natural, required=True, help="Right-hand side")
        cmd_parser.add_argument("-j", "--workers", type=positive, help="Processes for the direct formula")
        cmd_parser.add_argument("--no-prune", dest="prune", action="store_false",
                                help="Evaluate every direct-formula term")

    for cmd_parser in build_parser, verify_parser, bench_parser:
        cmd_parser.add_argument("--table-cap", type=positive, help="Largest modulus accepted for a table")

    for cmd_parser in verify_parser, bench_parser:
        cmd_parser.add_argument("--oracle-cap", type=positive, help="Largest b for the DP oracle")

    # command specific options
    count_parser.add_argument("-t", "--table", help="Answer from this residue table")
    build_parser.add_argument("-o", "--output", required=True, help="Table file to write")
    query_parser.add_argument("-t", "--table", required=True, help="Residue table file")
    query_parser.add_argument("-b", type=natural, required=True, help="Right-hand side")
    verify_parser.add_argument("--b-max", type=natural, required=True, help="Check every b from 0 to this value")
    bench_parser.add_argument("-b", type=natural_list, required=True, help="Comma-separated right-hand sides")
    bench_parser.add_argument("-o", "--output", help="Write the timing table here instead of stdout")
    bench_parser.add_argument("--format", choices=("csv", "yaml"), default="csv", help="Timing table format")
    return parser


def natural(text) -> int:
    """ Parse a non-negative decimal integer of any size.

    """
    text = text.strip()
    if not _DECIMAL.match(text):
        raise ArgumentTypeError(f"not a non-negative decimal integer: {text!r}")
    try:
        return int(text)
    except ValueError as err:
        raise ArgumentTypeError(str(err)) from err


def positive(text) -> int:
    value = natural(text)
    if value < 1:
        raise ArgumentTypeError(f"must be positive: {text!r}")
    return value


def natural_list(text) -> list[int]:
    return [natural(item) for item in text.split(",")]


def coefficient_list(text) -> list[int]:
    return [positive(item) for item in text.split(",")]


def _configure(args):
    config.clear()
    if args.config:
        config.load(args.config, params=os.environ)
    level = "DEBUG" if args.verbose else config.get("core", {}).get("logging", defaults.LOG_LEVEL)
    logger.start(level)
    logger.debug(f"running {args.func.__name__}")


def die(msg, status, details=None):
    """ Report a failure on stderr and return the exit status.

    """
    print("ERROR: " + msg, file=sys.stderr)
    if details:
        print(details, file=sys.stderr)
    return status


def warn(msg, details=None):
    print("WARNING: " + msg, file=sys.stderr)
    if details:
        print(details, file=sys.stderr)


def note(msg):
    print(msg)


def cmd_count(args):
    try:
        count = api.count(args.coeffs, args.b, table=args.table, modulus=args.modulus,
                          budget=args.budget, workers=args.workers, prune=args.prune)
    except ResourceError as err:
        warn("direct formula refused; not falling back to another route", details=str(err))
        return EXIT_RESOURCE
    note(str(count))
    return EXIT_OK


def cmd_count_leq(args):
    count = api.count_leq(args.coeffs, args.b, modulus=args.modulus, budget=args.budget,
                          workers=args.workers, prune=args.prune)
    note(str(count))
    return EXIT_OK


def cmd_build_table(args):
    summary = api.build_table(args.coeffs, args.output, modulus=args.modulus, cap=args.table_cap)
    for key, value in summary.items():
        note(f"{key}: {value}")
    return EXIT_OK


def cmd_query(args):
    note(str(api.query(args.table, args.b)))
    return EXIT_OK


def cmd_verify(args):
    report = api.verify(args.coeffs, args.b_max, modulus=args.modulus, budget=args.budget,
                        oracle_cap=args.oracle_cap, table_cap=args.table_cap)
    note(str(report))
    for route, checks in sorted(report.routes.items()):
        print(f"{route}: {checks}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_DIVERGENCE


def cmd_bench(args):
    rows = api.bench(args.coeffs, args.b, modulus=args.modulus, budget=args.budget,
                     oracle_cap=args.oracle_cap, table_cap=args.table_cap)
    if args.output:
        logger.info(f"Writing timings to '{args.output}'")
        with open(args.output, "wt", newline="") as stream:
            api.bench_write(rows, stream, args.format)
    else:
        api.bench_write(rows, sys.stdout, args.format)
    return EXIT_OK


if __name__ == "__main__":
    try:
        status = main()
    except Exception as err:
        # Error handler of last resort.
        logger.error(repr(err))
        logger.critical("shutting down due to fatal error")
        raise  # print stack trace
    else:
        raise SystemExit(status)

# vim: sw=4 et

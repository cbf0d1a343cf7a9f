""" Application commands common to all interfaces.

"""
from .bench import main as bench, write as bench_write
from .count import count, count_leq
from .table import build as build_table, query
from .verify import main as verify


__all__ = "bench", "bench_write", "count", "count_leq", "build_table", "query", "verify"

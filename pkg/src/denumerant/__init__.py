""" Exact counting of non-negative solutions of linear Diophantine equations
and inequalities.

"""
from .__version__ import __version__
from .cli import main

"""
Limits that keep every counting route bounded.

The direct formula, the residue table and the DP oracle each grow with a
different quantity (the term count, the modulus and b respectively). These
defaults are used whenever neither the configuration file nor the command line
supplies a value.
"""


TERM_BUDGET: int = 10**8
TABLE_CAP: int = 10**7
ORACLE_CAP: int = 10**6
WORKERS: int = 1

TABLE_FORMAT_VERSION: str = "1"
LOG_LEVEL: str = "WARNING"

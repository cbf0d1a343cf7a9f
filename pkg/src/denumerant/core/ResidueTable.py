""" Bounded profile and residue table.

The bounded profile P'(c) counts the tuples with sum(a_j t_j) = c inside the
index box 0 <= t_j <= d_j - 1. Reading it at c = r, r + M, ..., r + (n-1)M
gives the row l_1..l_n for residue r, and then

    P(b) = sum_i l_i * C(b' + 2 - i, n - 1),  b' = b // M, r = b % M

so a count costs n coefficient evaluations for any b.

Row storage is 0-based: rows[r][i - 1] holds l_i.

"""
import re
from os import PathLike

import yaml
from pydantic import BaseModel, StrictInt, ValidationError, conint, root_validator

from .. import defaults
from .arith import c_poly
from .config import limit
from .direct import check_rhs
from .EquationSpec import EquationSpec, nonnegative_threshold, term_count
from .errors import InvalidInputError, InvariantError, ResourceError
from .errors import TableFormatError, TableValidationError
from .logger import logger


__all__ = (
    "BoundedProfile",
    "ResidueTable",
    "bounded_profile",
    "build_table",
    "query_table",
    "save_table",
    "load_table",
)


class BoundedProfile:
    """ The map c -> P'(c), zero outside [0, nM - sum(a)].

    """
    def __init__(self, spec: EquationSpec, counts):
        self.spec = spec
        self.counts = counts

    @property
    def support_bound(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, c: int) -> int:
        if 0 <= c < len(self.counts):
            return self.counts[c]
        return 0

    def __len__(self):
        return len(self.counts)

    def items(self):
        return enumerate(self.counts)

    def total(self) -> int:
        return sum(self.counts)

    def support_size(self) -> int:
        """ Number of values c with P'(c) > 0.

        """
        return sum(1 for count in self.counts if count)

    def __eq__(self, other):
        if not isinstance(other, BoundedProfile):
            return NotImplemented
        return (self.spec, self.counts) == (other.spec, other.counts)

    def __repr__(self):
        return f"BoundedProfile({self.spec}, bound={self.support_bound})"


class ResidueTable(BaseModel, frozen=True, extra="forbid"):
    """ Per-residue rows l_1..l_n for the fast count formula.

    """
    coefficients: tuple[StrictInt, ...]
    modulus: conint(strict=True, ge=1)
    rows: tuple[tuple[StrictInt, ...], ...]

    @root_validator(skip_on_failure=True)
    def _check_invariants(cls, values):
        coefficients = values["coefficients"]
        modulus = values["modulus"]
        rows = values["rows"]
        if not coefficients:
            raise ValueError("coefficient list is empty")
        for i, a in enumerate(coefficients, 1):
            if a < 1:
                raise ValueError(f"coefficient a{i}={a} is not positive")
            if modulus % a:
                raise ValueError(f"modulus {modulus} is not a multiple of coefficient a{i}={a}")
        if len(rows) != modulus:
            raise ValueError(f"modulus {modulus} requires {modulus} rows, found {len(rows)}")
        n = len(coefficients)
        total = 0
        for r, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {r} has {len(row)} entries, expected {n}")
            for i, entry in enumerate(row):
                if entry < 0:
                    raise ValueError(f"row {r} entry {i} is negative: {entry}")
                total += entry
        expected = 1
        for a in coefficients:
            expected *= modulus // a
        if total != expected:
            raise ValueError(f"table entries sum to {total}, expected the term count {expected}")
        return values

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @property
    def spec(self) -> EquationSpec:
        return EquationSpec(coefficients=self.coefficients, modulus=self.modulus)

    def row(self, r: int) -> tuple[int, ...]:
        return self.rows[r % self.modulus]

    def total(self) -> int:
        return sum(sum(row) for row in self.rows)

    def support_size(self) -> int:
        return sum(1 for row in self.rows for entry in row if entry)


def bounded_profile(spec: EquationSpec, cap=None) -> BoundedProfile:
    """ Count box-constrained tuples for every c.

    One capped-coin pass per unknown: with at most d_j - 1 copies of a_j,
    new[c] = new[c - a_j] + old[c] - old[c - d_j a_j].

    :param spec: the equation
    :param cap: largest accepted modulus (configured table_cap by default)
    """
    cap = limit("table_cap", cap)
    if spec.modulus > cap:
        raise ResourceError(
            f"modulus {spec.modulus} of {spec} exceeds the table cap of {cap}; "
            "use the direct formula or the oracle instead"
        )
    bound = nonnegative_threshold(spec)
    size = bound + 1
    counts = [0] * size
    counts[0] = 1
    reach = 0
    for a, d in zip(spec.coefficients, spec.radices):
        window = a * d
        reach += a * (d - 1)
        new = [0] * size
        for c in range(reach + 1):
            value = counts[c]
            if c >= a:
                value += new[c - a]
            if c >= window:
                value -= counts[c - window]
            new[c] = value
        counts = new
    profile = BoundedProfile(spec, counts)
    expected = term_count(spec)
    if profile.total() != expected or counts[bound] < 1:
        raise InvariantError(f"bounded profile of {spec} sums to {profile.total()}, expected {expected}")
    logger.debug(f"bounded profile of {spec}: {size} cells, {profile.support_size()} non-zero")
    return profile


def build_table(spec: EquationSpec, cap=None) -> ResidueTable:
    """ Read the residue rows off the bounded profile.

    """
    profile = bounded_profile(spec, cap)
    modulus = spec.modulus
    rows = tuple(
        tuple(profile[r + i * modulus] for i in range(spec.n))
        for r in range(modulus)
    )
    return ResidueTable(coefficients=spec.coefficients, modulus=modulus, rows=rows)


def query_table(table: ResidueTable, b: int) -> int:
    """ Number of non-negative solutions of sum(a_i x_i) = b from the table.

    """
    if not isinstance(table, ResidueTable):
        raise InvalidInputError(f"not a residue table: {table!r}")
    check_rhs(b)
    quotient, r = divmod(b, table.modulus)
    order = table.n - 1
    count = 0
    for i, entry in enumerate(table.row(r)):
        if entry:
            count += entry * c_poly(quotient + 1 - i, order)
    return count


def _document(table):
    return {
        "format_version": defaults.TABLE_FORMAT_VERSION,
        "coefficients": [str(a) for a in table.coefficients],
        "modulus": str(table.modulus),
        "rows": [[str(entry) for entry in row] for row in table.rows],
    }


def save_table(table: ResidueTable, destination):
    """ Write a table as a YAML document of decimal strings.

    :param table: table to save
    :param destination: file path or writable text stream
    """
    if isinstance(destination, (str, PathLike)):
        logger.info(f"Writing residue table to '{destination}'")
        with open(destination, "wt", encoding="utf-8") as stream:
            return save_table(table, stream)
    yaml.safe_dump(_document(table), destination, sort_keys=False, default_flow_style=None)
    return


_INTEGER = re.compile(r"^[+-]?[0-9]+$")
_FIELDS = "format_version", "coefficients", "modulus", "rows"


def _line(node):
    return node.start_mark.line + 1


def _scalar(node, field):
    if not isinstance(node, yaml.ScalarNode):
        raise TableFormatError("expected a scalar", _line(node), field)
    return node.value


def _integer(node, field):
    text = _scalar(node, field)
    if not _INTEGER.match(text):
        raise TableFormatError(f"not a decimal integer: {text!r}", _line(node), field)
    return int(text)


def _sequence(node, field):
    if not isinstance(node, yaml.SequenceNode):
        raise TableFormatError("expected a list", _line(node), field)
    return node.value


def load_table(source) -> ResidueTable:
    """ Read and validate a table written by save_table.

    :param source: file path or readable text stream
    """
    if isinstance(source, (str, PathLike)):
        logger.info(f"Reading residue table from '{source}'")
        with open(source, "rt", encoding="utf-8") as stream:
            return load_table(stream)
    try:
        root = yaml.compose(source, Loader=yaml.SafeLoader)
    except yaml.YAMLError as err:
        mark = getattr(err, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        raise TableFormatError(f"malformed table document: {getattr(err, 'problem', err)}", line) from err
    except UnicodeDecodeError as err:
        raise TableFormatError(f"table document is not UTF-8 text: {err.reason} at byte {err.start}") from err
    if not isinstance(root, yaml.MappingNode):
        raise TableFormatError("table document must be a mapping", _line(root) if root else None)
    fields = {}
    for key, value in root.value:
        name = _scalar(key, "<key>")
        if name not in _FIELDS:
            raise TableFormatError(f"unknown field {name!r}", _line(key), name)
        fields[name] = value
    for name in _FIELDS:
        if name not in fields:
            raise TableFormatError(f"missing field {name!r}", _line(root))
    version = _scalar(fields["format_version"], "format_version")
    if version != defaults.TABLE_FORMAT_VERSION:
        raise TableFormatError(f"unsupported format version {version!r}", _line(fields["format_version"]), "format_version")
    coefficients = tuple(
        _integer(node, f"coefficients[{i}]")
        for i, node in enumerate(_sequence(fields["coefficients"], "coefficients"))
    )
    modulus = _integer(fields["modulus"], "modulus")
    rows = tuple(
        tuple(
            _integer(cell, f"rows[{r}][{i}]")
            for i, cell in enumerate(_sequence(node, f"rows[{r}]"))
        )
        for r, node in enumerate(_sequence(fields["rows"], "rows"))
    )
    try:
        table = ResidueTable(coefficients=coefficients, modulus=modulus, rows=rows)
    except ValidationError as err:
        messages = "; ".join(e["msg"] for e in err.errors())
        raise TableValidationError(f"invalid residue table: {messages}") from err
    logger.debug(f"loaded table for {table.spec}")
    return table

# vim: sw=4 et

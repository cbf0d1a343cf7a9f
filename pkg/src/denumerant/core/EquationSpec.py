""" Validated problem instance a1*x1 + ... + an*xn = b.

"""
import math

from pydantic import BaseModel, StrictInt, ValidationError, conint, root_validator

from .arith import gcd_lcm_all
from .errors import InvalidInputError


__all__ = "EquationSpec", "make_spec", "term_count", "nonnegative_threshold"


class EquationSpec(BaseModel, frozen=True, extra="forbid"):
    """ Coefficient vector with a common multiple M of all coefficients.

    The radices d_i = M / a_i are the index ranges of the direct formula.
    """
    coefficients: tuple[StrictInt, ...]
    modulus: conint(strict=True, ge=1)

    @root_validator(skip_on_failure=True)
    def _check_divisibility(cls, values):
        if not values["coefficients"]:
            raise ValueError("coefficient list is empty")
        modulus = values["modulus"]
        for i, a in enumerate(values["coefficients"], 1):
            if a < 1:
                raise ValueError(f"coefficient a{i}={a} is not positive")
            if modulus % a:
                raise ValueError(f"modulus {modulus} is not a multiple of coefficient a{i}={a}")
        return values

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @property
    def radices(self) -> tuple[int, ...]:
        return tuple(self.modulus // a for a in self.coefficients)

    def with_slack(self) -> "EquationSpec":
        """ The spec of the equation x_{n+1} + sum(a_i x_i) = b.

        The slack coefficient 1 divides any modulus, so M is kept and the
        appended radix is M.
        """
        return EquationSpec(coefficients=self.coefficients + (1,), modulus=self.modulus)

    def __str__(self):
        terms = " + ".join(f"{a}*x{i}" for i, a in enumerate(self.coefficients, 1))
        return f"{terms} (M={self.modulus})"


def make_spec(coefficients, modulus_override=None) -> EquationSpec:
    """ Build a validated spec.

    :param coefficients: non-empty sequence of positive integers
    :param modulus_override: any common multiple of the coefficients; the
        least common multiple is used when omitted
    """
    coefficients = tuple(coefficients)
    _, lcm = gcd_lcm_all(coefficients)
    modulus = lcm if modulus_override is None else modulus_override
    try:
        return EquationSpec(coefficients=coefficients, modulus=modulus)
    except ValidationError as err:
        messages = "; ".join(e["msg"] for e in err.errors())
        raise InvalidInputError(messages) from err


def term_count(spec: EquationSpec) -> int:
    """ Number of summands of the direct formula, the product of the radices.

    It does not depend on the right-hand side.
    """
    return math.prod(spec.radices)


def nonnegative_threshold(spec: EquationSpec) -> int:
    """ nM - sum(a_i), the largest value of sum(a_i t_i) over the index box.

    For b at or above it every summand has f >= 0, and the bounded profile
    vanishes beyond it.
    """
    return spec.n * spec.modulus - sum(spec.coefficients)

# vim: sw=4 et

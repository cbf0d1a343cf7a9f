""" Odometer over the index box 0 <= t_i <= d_i - 1 of the direct formula.

Digit t1 varies fastest. The cursor also tracks its linear index
sum(t_i * stride_i), with stride_i the product of the radices below i, so a
range of linear indices can be handed to each worker.

"""
import math

from .EquationSpec import EquationSpec
from .errors import CursorExhaustedError, InvalidInputError


__all__ = "MixedRadixCursor", "advance"


class MixedRadixCursor:
    """ Mutable enumeration state owned by a single caller.

    ``running_sum`` is kept equal to sum(a_i * t_i) incrementally.
    """
    __slots__ = "digits", "radices", "weights", "strides", "running_sum", "index", "stop", "exhausted"

    def __init__(self, spec: EquationSpec, start=0, stop=None):
        """ Position the cursor at a linear index.

        :param spec: equation whose radices and coefficients drive the cursor
        :param start: first linear index to visit
        :param stop: exclusive end index (the term count by default)
        """
        self.radices = spec.radices
        self.weights = spec.coefficients
        self.strides = tuple(math.prod(self.radices[:i]) for i in range(len(self.radices)))
        total = self.strides[-1] * self.radices[-1]
        if stop is None:
            stop = total
        if not 0 <= start <= stop <= total:
            raise InvalidInputError(f"cursor range [{start}, {stop}) is outside [0, {total}]")
        self.stop = stop
        self._seek(start)

    @classmethod
    def from_digits(cls, spec: EquationSpec, digits, stop=None):
        """ Start at an explicit digit tuple (t1, ..., tn).

        """
        radices = spec.radices
        if len(digits) != len(radices):
            raise InvalidInputError(f"expected {len(radices)} digits, got {len(digits)}")
        index = 0
        stride = 1
        for i, (t, d) in enumerate(zip(digits, radices), 1):
            if not 0 <= t < d:
                raise InvalidInputError(f"digit t{i}={t} outside [0, {d - 1}]")
            index += t * stride
            stride *= d
        return cls(spec, start=index, stop=stop)

    def _seek(self, index):
        self.index = index
        self.exhausted = index >= self.stop
        digits = []
        for d in self.radices:
            index, t = divmod(index, d)
            digits.append(t)
        if self.exhausted:
            # Park the digits at zero once the range is done.
            digits = [0] * len(self.radices)
        self.digits = digits
        self.running_sum = sum(a * t for a, t in zip(self.weights, digits))

    def _carry_from(self, pos):
        """ Zero digits below pos and increment digit pos with carry.

        """
        digits = self.digits
        radices = self.radices
        weights = self.weights
        for i in range(pos):
            self.running_sum -= weights[i] * digits[i]
            digits[i] = 0
        while pos < len(digits):
            if digits[pos] + 1 < radices[pos]:
                digits[pos] += 1
                self.running_sum += weights[pos]
                return
            self.running_sum -= weights[pos] * digits[pos]
            digits[pos] = 0
            pos += 1

    def advance(self):
        """ Move to the next tuple, or to the exhausted state after the last.

        """
        if self.exhausted:
            raise CursorExhaustedError("cannot advance an exhausted cursor")
        self.index += 1
        if self.index >= self.stop:
            self._finish()
        else:
            self._carry_from(0)
        return self

    def skip_subtree(self, pos):
        """ Skip every remaining tuple that shares digits pos..n with the
        current one.

        :param pos: 0-based digit position
        """
        if self.exhausted:
            raise CursorExhaustedError("cannot advance an exhausted cursor")
        stride = self.strides[pos]
        self.index = (self.index // stride + 1) * stride
        if self.index >= self.stop:
            self._finish()
        else:
            self._carry_from(pos)
        return self

    def _finish(self):
        self.exhausted = True
        self.digits = [0] * len(self.radices)
        self.running_sum = 0

    def __iter__(self):
        while not self.exhausted:
            yield tuple(self.digits)
            self.advance()

    def __repr__(self):
        state = "exhausted" if self.exhausted else tuple(self.digits)
        return f"MixedRadixCursor({state}, radices={self.radices})"


def advance(cursor: MixedRadixCursor) -> MixedRadixCursor:
    """ Advance a cursor in place and return it.

    """
    return cursor.advance()

# vim: sw=4 et

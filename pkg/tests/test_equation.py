""" Test suite for the EquationSpec and MixedRadixCursor modules.

"""
import math

import pytest
from hypothesis import given

from denumerant.core.EquationSpec import EquationSpec, make_spec, nonnegative_threshold, term_count
from denumerant.core.errors import CursorExhaustedError, InvalidInputError
from denumerant.core.MixedRadixCursor import MixedRadixCursor, advance

from _instances import small_coefficient_lists


class MakeSpecTest:
    """ Test suite for make_spec().

    """
    @pytest.mark.parametrize("coefficients, override, modulus, radices", [
        ([2, 3], None, 6, (3, 2)),
        ([1, 1, 2], None, 2, (2, 2, 1)),
        ([2, 3], 12, 12, (6, 4)),
        ([7], None, 7, (1,)),
    ])
    def test_examples(self, coefficients, override, modulus, radices):
        spec = make_spec(coefficients, override)
        assert spec.modulus == modulus
        assert spec.radices == radices
        assert spec.n == len(coefficients)
        assert all(a * d == modulus for a, d in zip(spec.coefficients, spec.radices))

    def test_bad_override(self):
        with pytest.raises(InvalidInputError, match="a1=2"):
            make_spec([2, 3], 9)

    @pytest.mark.parametrize("coefficients", ([], [0], [3, -2]))
    def test_bad_coefficients(self, coefficients):
        with pytest.raises(InvalidInputError):
            make_spec(coefficients)

    @pytest.mark.parametrize("override", (0, -6))
    def test_bad_modulus(self, override):
        with pytest.raises(InvalidInputError):
            make_spec([2, 3], override)

    @pytest.mark.parametrize("factor", (1, 2, 3))
    def test_scaled_override(self, factor):
        base = make_spec([4, 6, 9])
        spec = make_spec([4, 6, 9], factor * base.modulus)
        assert spec.radices == tuple(factor * d for d in base.radices)

    def test_immutable(self):
        spec = make_spec([2, 3])
        with pytest.raises(TypeError):
            spec.modulus = 12
        assert hash(spec) == hash(make_spec([2, 3]))

    def test_direct_construction(self):
        with pytest.raises(ValueError):
            EquationSpec(coefficients=(2, 3), modulus=9)

    def test_slack(self):
        spec = make_spec([2, 3]).with_slack()
        assert spec.coefficients == (2, 3, 1)
        assert spec.radices == (3, 2, 6)


class TermCountTest:
    """ Test suite for term_count() and nonnegative_threshold().

    """
    @pytest.mark.parametrize("coefficients, expected", [
        ([2, 3], 6),
        ([1, 1, 2], 4),
        ([7], 1),
    ])
    def test_examples(self, coefficients, expected):
        assert term_count(make_spec(coefficients)) == expected

    def test_threshold(self):
        assert nonnegative_threshold(make_spec([2, 3])) == 7
        assert nonnegative_threshold(make_spec([1, 1, 2])) == 2


class MixedRadixCursorTest:
    """ Test suite for the MixedRadixCursor class.

    """
    def test_carry(self):
        cursor = MixedRadixCursor.from_digits(make_spec([1, 1, 2]), (1, 0, 0))
        assert advance(cursor).digits == [0, 1, 0]
        assert cursor.running_sum == 1

    def test_final_tuple(self):
        cursor = MixedRadixCursor.from_digits(make_spec([1, 1, 2]), (1, 1, 0))
        advance(cursor)
        assert cursor.exhausted
        with pytest.raises(CursorExhaustedError):
            advance(cursor)

    def test_fastest_digit(self):
        spec = make_spec([2, 3])
        cursor = MixedRadixCursor(spec)
        assert cursor.digits == [0, 0]
        assert advance(cursor).digits == [1, 0]

    def test_bad_start(self):
        spec = make_spec([2, 3])
        with pytest.raises(InvalidInputError):
            MixedRadixCursor.from_digits(spec, (3, 0))
        with pytest.raises(InvalidInputError):
            MixedRadixCursor(spec, start=7)

    @given(small_coefficient_lists)
    def test_enumeration(self, coefficients):
        spec = make_spec(coefficients)
        cursor = MixedRadixCursor(spec)
        seen = set()
        for digits in cursor:
            assert all(0 <= t < d for t, d in zip(digits, spec.radices))
            assert cursor.running_sum == sum(a * t for a, t in zip(spec.coefficients, digits))
            seen.add(digits)
        assert len(seen) == term_count(spec)

    @given(small_coefficient_lists)
    def test_ranges(self, coefficients):
        spec = make_spec(coefficients)
        total = term_count(spec)
        whole = list(MixedRadixCursor(spec))
        for parts in (2, 4, 8):
            bounds = [total * i // parts for i in range(parts + 1)]
            pieces = []
            for start, stop in zip(bounds, bounds[1:]):
                pieces.extend(MixedRadixCursor(spec, start, stop))
            assert pieces == whole

    def test_skip_subtree(self):
        spec = make_spec([2, 3, 5])
        cursor = MixedRadixCursor.from_digits(spec, (4, 1, 2))
        cursor.skip_subtree(1)
        assert cursor.digits == [0, 2, 2]
        assert cursor.running_sum == 3 * 2 + 5 * 2
        assert cursor.index == math.prod(spec.radices[:1]) * 2 + math.prod(spec.radices[:2]) * 2


# Make the module executable.

if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__]))

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from packmul.exactdec import (
    ExactDecimal,
    as_decimal_matrix,
    integerize,
    max_scale,
    multiply_decimal,
    multiply_decimal_unscaled,
    parse_decimal,
)
from packmul.matrix import DenseMatrix, DimensionError
from packmul.packing import POW2_RADIX
from packmul.signed import multiply_int

RADICES = [10, POW2_RADIX]


def strs(m):
    return [[str(x) for x in r] for r in m.to_rows()]


def fraction_product(A, B):
    A = [[x.to_fraction() for x in r] for r in as_decimal_matrix(A).to_rows()]
    B = [[x.to_fraction() for x in r] for r in as_decimal_matrix(B).to_rows()]
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in zip(*B)] for row in A]


def random_decimals(rng, rows, cols):
    return DenseMatrix(rows, cols, tuple(
        ExactDecimal.from_scaled(rng.randint(-10**6, 10**6), rng.randint(0, 6)) for _ in range(rows * cols)
    ))


class TestParse:
    @pytest.mark.parametrize("text,expected", [
        ("0.25", (1, 25, 2)),
        ("-3.10", (-1, 31, 1)),
        ("18", (1, 18, 0)),
        ("+0.000", (0, 0, 0)),
        ("-0", (0, 0, 0)),
        ("007.50", (1, 75, 1)),
    ])
    def test_examples(self, text, expected):
        d = parse_decimal(text)
        assert (d.sign, d.unscaled, d.scale) == expected

    @pytest.mark.parametrize("bad", ["", ".5", "5.", "1e3", "--1", "0x10", "1.2.3", "nan"])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_decimal(bad)

    @given(st.integers(-10**30, 10**30), st.integers(0, 20))
    def test_string_round_trip(self, value, scale):
        d = ExactDecimal.from_scaled(value, scale)
        assert parse_decimal(str(d)) == d
        assert d.to_fraction() == Fraction(value, 10**scale)

    def test_rejects_noncanonical(self):
        for args in [(1, 10, 1), (0, 0, 2), (1, 0, 0), (2, 1, 0), (-1, -1, 0)]:
            with pytest.raises(ValueError):
                ExactDecimal(*args)

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            ExactDecimal.coerce(0.1)


class TestArithmetic:
    @given(st.integers(-10**9, 10**9), st.integers(0, 8), st.integers(-10**9, 10**9), st.integers(0, 8))
    def test_ops_match_fractions(self, a, ra, b, rb):
        x, y = ExactDecimal.from_scaled(a, ra), ExactDecimal.from_scaled(b, rb)
        fx, fy = x.to_fraction(), y.to_fraction()
        assert (x + y).to_fraction() == fx + fy
        assert (x - y).to_fraction() == fx - fy
        assert (x * y).to_fraction() == fx * fy
        assert (-x).to_fraction() == -fx
        assert (3 - x).to_fraction() == 3 - fx

    def test_scaled_to_refuses_rounding(self):
        with pytest.raises(ValueError):
            parse_decimal("0.25").scaled_to(1)
        assert parse_decimal("-0.25").scaled_to(4) == -2500


class TestScale:
    def test_max_scale(self):
        assert max_scale([["0.5", "1.25"], ["2", "0.1"]]) == 2
        assert max_scale([[1, 2], [3, 4]]) == 0

    def test_integerize(self):
        assert integerize([["0.5", "-1.25"]], 2).to_rows() == [[50, -125]]


class TestMultiply:
    @pytest.mark.parametrize("radix", RADICES)
    @pytest.mark.parametrize("kernel", ["limb", "native"])
    def test_example(self, radix, kernel):
        got = multiply_decimal([["0.5", "1.25"], ["2", "0.1"]], [["1.5", "0"], ["0.25", "4"]], radix, kernel)
        assert strs(got) == [["1.0625", "5"], ["3.025", "0.4"]]

    def test_integer_inputs(self):
        A, B = [[1, -2], [3, 4]], [[5, 6], [-7, 8]]
        got, scale = multiply_decimal_unscaled(A, B)
        assert scale == 0
        assert got == multiply_int(A, B)

    def test_times_zero(self):
        got = multiply_decimal([["0.5", "1.25"]], [["0.000"], ["0"]])
        assert got[0, 0] == ExactDecimal(0, 0, 0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            multiply_decimal([["1.5", "2"]], [["1.5", "2"]])

    def test_scale_law(self):
        rng = random.Random(1)
        for _ in range(50):
            A, B = random_decimals(rng, 3, 4), random_decimals(rng, 4, 2)
            ints, scale = multiply_decimal_unscaled(A, B)
            assert scale == max_scale(A) + max_scale(B)
            want = fraction_product(A, B)
            assert [[Fraction(v, 10**scale) for v in r] for r in ints.to_rows()] == want

    @pytest.mark.parametrize("radix", RADICES)
    def test_exact_against_fractions(self, radix):
        rng = random.Random(radix)
        for _ in range(100):
            r, n, c = rng.randint(1, 10), rng.randint(1, 10), rng.randint(1, 10)
            A, B = random_decimals(rng, r, n), random_decimals(rng, n, c)
            got = multiply_decimal(A, B, radix, "native")
            assert [[x.to_fraction() for x in row] for row in got.to_rows()] == fraction_product(A, B)

    def test_scaling_homomorphism(self):
        rng = random.Random(2)
        for _ in range(50):
            A, B = random_decimals(rng, 3, 3), random_decimals(rng, 3, 3)
            r1, r2 = rng.randint(0, 5), rng.randint(0, 5)
            scaled = multiply_decimal(A.map(lambda x: x * 10**r1), B.map(lambda x: x * 10**r2))
            base = multiply_decimal(A, B)
            assert scaled == base.map(lambda x: x * 10 ** (r1 + r2))

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from packmul.complexmul import ComplexMatrix, multiply_complex
from packmul.exactdec import ExactDecimal
from packmul.matrix import DenseMatrix, DimensionError
from packmul.packing import POW2_RADIX, multiply_nonneg
from packmul.reference import schoolbook_multiply
from packmul.signed import multiply_int, multiply_int_parts, split_signs

RADICES = [10, POW2_RADIX]


def M(rows):
    return DenseMatrix.from_rows(rows)


def random_signed(rng, rows, cols, bound):
    return DenseMatrix(rows, cols, tuple(rng.randint(-bound, bound) for _ in range(rows * cols)))


@st.composite
def signed_matrices(draw, max_side=6):
    rows = draw(st.integers(1, max_side))
    cols = draw(st.integers(1, max_side))
    data = draw(st.lists(st.integers(-10**6, 10**6), min_size=rows * cols, max_size=rows * cols))
    return DenseMatrix(rows, cols, tuple(data))


class TestSplit:
    def test_displayed_decomposition(self):
        pos, neg = split_signs([[3, -2, 1], [-8, 6, 5], [18, -14, -9]])
        assert pos.to_rows() == [[3, 0, 1], [0, 6, 5], [18, 0, 0]]
        assert neg.to_rows() == [[0, 2, 0], [8, 0, 0], [0, 14, 9]]

    def test_all_nonnegative(self):
        A = M([[1, 0], [2, 3]])
        assert split_signs(A) == (A, DenseMatrix.zeros(2, 2))

    def test_all_negative(self):
        A = M([[-1, -5], [-2, -3]])
        assert split_signs(A) == (DenseMatrix.zeros(2, 2), -A)

    @given(signed_matrices())
    def test_reconstruction(self, A):
        pos, neg = split_signs(A)
        assert pos - neg == A
        assert all(x >= 0 for x in pos.data + neg.data)
        # at most one side is nonzero in each cell
        assert all(p == 0 or q == 0 for p, q in zip(pos.data, neg.data))


class TestMultiplyInt:
    @pytest.mark.parametrize("radix", RADICES)
    @pytest.mark.parametrize("kernel", ["limb", "native"])
    def test_two_by_two(self, radix, kernel):
        got = multiply_int([[1, -2], [-3, 4]], [[5, 6], [7, 8]], radix, kernel)
        assert got.to_rows() == [[-9, -10], [13, 14]]

    def test_times_zero(self):
        A = M([[1, -2, 3], [-4, 5, -6]])
        assert multiply_int(A, DenseMatrix.zeros(3, 2)) == DenseMatrix.zeros(2, 2)

    def test_nonnegative_matches_core(self):
        A, B = M([[1, 2, 3], [4, 5, 6]]), M([[7, 8], [9, 10], [11, 12]])
        assert multiply_int(A, B) == multiply_nonneg(A, B)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            multiply_int([[1, 2]], [[1, 2]])

    @pytest.mark.parametrize("radix", RADICES)
    def test_random_against_schoolbook(self, radix):
        rng = random.Random(radix)
        for _ in range(200):
            r, n, c = rng.randint(1, 32), rng.randint(1, 32), rng.randint(1, 32)
            A, B = random_signed(rng, r, n, 10**6), random_signed(rng, n, c, 10**6)
            assert multiply_int(A, B, radix, "native") == schoolbook_multiply(A, B)

    def test_limb_kernel_random(self):
        rng = random.Random(5)
        for i in range(10):
            n = rng.randint(1, 12)
            A, B = random_signed(rng, n, n, 10**6), random_signed(rng, n, n, 10**6)
            assert multiply_int(A, B, RADICES[i % 2], "limb") == schoolbook_multiply(A, B)

    @settings(max_examples=40, deadline=None)
    @given(signed_matrices(), st.data())
    def test_four_partial_products(self, A, data):
        cols = data.draw(st.integers(1, 6))
        vals = data.draw(st.lists(st.integers(-10**6, 10**6), min_size=A.cols * cols, max_size=A.cols * cols))
        B = DenseMatrix(A.cols, cols, tuple(vals))
        c1, c2, c3, c4 = multiply_int_parts(A, B, 10, "native")
        for part in (c1, c2, c3, c4):
            assert all(x >= 0 for x in part.data)
        assert c1 - c2 - c3 + c4 == schoolbook_multiply(A, B)


def D(s):
    return ExactDecimal.coerce(s)


def complex_oracle(A, B):
    """Schoolbook product over Python's exact Fractions, as (re, im) pairs."""
    out = []
    for i in range(A.rows):
        row = []
        for j in range(B.cols):
            re = im = Fraction(0)
            for k in range(A.cols):
                ar, ai = (x.to_fraction() for x in A[i, k])
                br, bi = (x.to_fraction() for x in B[k, j])
                re += ar * br - ai * bi
                im += ar * bi + ai * br
            row.append((re, im))
        out.append(row)
    return out


def random_complex(rng, rows, cols):
    def rnd():
        return ExactDecimal.from_scaled(rng.randint(-10**5, 10**5), rng.randint(0, 4))

    return ComplexMatrix(
        DenseMatrix(rows, cols, tuple(rnd() for _ in range(rows * cols))),
        DenseMatrix(rows, cols, tuple(rnd() for _ in range(rows * cols))),
    )


class TestComplex:
    @pytest.mark.parametrize("radix", RADICES)
    def test_one_by_one(self, radix):
        A = ComplexMatrix.from_parts([[1]], [[2]])
        B = ComplexMatrix.from_parts([[3]], [[-1]])
        assert multiply_complex(A, B, radix)[0, 0] == (D(5), D(5))

    def test_real_inputs(self):
        A = ComplexMatrix.real([["1.5", "-2"], ["0", "3"]])
        B = ComplexMatrix.real([["2", "0.25"], ["1", "-1"]])
        got = multiply_complex(A, B)
        assert all(x == D(0) for x in got.im.data)
        assert [[str(x) for x in r] for r in got.re.to_rows()] == [["1", "2.375"], ["3", "-3"]]

    def test_times_i_identity(self):
        A = ComplexMatrix.from_parts([["1.5", "-2"], ["7", "0"]], [["3", "0.25"], ["-1", "4"]])
        iI = ComplexMatrix.from_parts(DenseMatrix.zeros(2, 2), DenseMatrix.identity(2))
        got = multiply_complex(A, iI)
        assert got.re == -A.im
        assert got.im == A.re

    def test_dimension_mismatch(self):
        A = ComplexMatrix.real([[1, 2]])
        with pytest.raises(DimensionError):
            multiply_complex(A, A)
        with pytest.raises(DimensionError):
            ComplexMatrix.from_parts([[1, 2]], [[1]])

    @pytest.mark.parametrize("radix", RADICES)
    def test_random_against_fraction_oracle(self, radix):
        rng = random.Random(radix + 2)
        for _ in range(30):
            r, n, c = rng.randint(1, 8), rng.randint(1, 8), rng.randint(1, 8)
            A, B = random_complex(rng, r, n), random_complex(rng, n, c)
            got = multiply_complex(A, B, radix, "native")
            want = complex_oracle(A, B)
            for i in range(r):
                for j in range(c):
                    re, im = got[i, j]
                    assert (re.to_fraction(), im.to_fraction()) == want[i][j]

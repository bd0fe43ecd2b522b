"""Signed integer matrices as differences of non-negative ones."""
from __future__ import annotations

from typing import NamedTuple

from .matrix import DenseMatrix, as_matrix, check_inner
from .packing import multiply_nonneg

__all__ = ["SignSplit", "multiply_int", "multiply_int_parts", "split_signs"]


class SignSplit(NamedTuple):
    positive: DenseMatrix
    negative: DenseMatrix


def split_signs(A) -> SignSplit:
    """Split ``A`` into non-negative ``positive`` and ``negative`` with ``A = positive - negative``."""
    A = as_matrix(A)
    return SignSplit(A.map(lambda x: x if x >= 0 else 0), A.map(lambda x: -x if x < 0 else 0))


def multiply_int_parts(A, B, radix=10, kernel: str = "limb") -> tuple[DenseMatrix, ...]:
    """The four non-negative products ``A1B1, A1B2, A2B1, A2B2`` of the sign splits."""
    A, B = as_matrix(A), as_matrix(B)
    check_inner(A, B)
    a1, a2 = split_signs(A)
    b1, b2 = split_signs(B)
    return (
        multiply_nonneg(a1, b1, radix, kernel),
        multiply_nonneg(a1, b2, radix, kernel),
        multiply_nonneg(a2, b1, radix, kernel),
        multiply_nonneg(a2, b2, radix, kernel),
    )


def multiply_int(A, B, radix=10, kernel: str = "limb") -> DenseMatrix:
    """Exact product of signed integer matrices from four non-negative packed products."""
    c1, c2, c3, c4 = multiply_int_parts(A, B, radix, kernel)
    return DenseMatrix(
        c1.rows, c1.cols, tuple(w - x - y + z for w, x, y, z in zip(c1.data, c2.data, c3.data, c4.data))
    )

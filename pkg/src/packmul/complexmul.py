"""Complex decimal matrices as real/imaginary pairs."""
from __future__ import annotations

from dataclasses import dataclass

from .exactdec import ExactDecimal, as_decimal_matrix, multiply_decimal
from .matrix import DenseMatrix, DimensionError, check_inner

__all__ = ["ComplexMatrix", "multiply_complex"]


@dataclass(frozen=True)
class ComplexMatrix:
    re: DenseMatrix
    im: DenseMatrix

    def __post_init__(self):
        if self.re.shape != self.im.shape:
            raise DimensionError(f"real part {self.re.shape} and imaginary part {self.im.shape} differ")

    @classmethod
    def from_parts(cls, re, im) -> ComplexMatrix:
        return cls(as_decimal_matrix(re), as_decimal_matrix(im))

    @classmethod
    def real(cls, re) -> ComplexMatrix:
        re = as_decimal_matrix(re)
        return cls(re, DenseMatrix.zeros(re.rows, re.cols, ExactDecimal(0, 0, 0)))

    @property
    def rows(self) -> int:
        return self.re.rows

    @property
    def cols(self) -> int:
        return self.re.cols

    @property
    def shape(self) -> tuple[int, int]:
        return self.re.shape

    def __getitem__(self, idx) -> tuple[ExactDecimal, ExactDecimal]:
        return self.re[idx], self.im[idx]


def multiply_complex(A: ComplexMatrix, B: ComplexMatrix, radix=10, kernel: str = "limb") -> ComplexMatrix:
    """``(Ar Br - Ai Bi) + i (Ar Bi + Ai Br)`` with each real product on the decimal path."""
    check_inner(A.re, B.re)
    rr = multiply_decimal(A.re, B.re, radix, kernel)
    ri = multiply_decimal(A.re, B.im, radix, kernel)
    ir = multiply_decimal(A.im, B.re, radix, kernel)
    ii = multiply_decimal(A.im, B.im, radix, kernel)
    return ComplexMatrix(rr - ii, ri + ir)

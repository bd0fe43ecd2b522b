"""Schoolbook and Strassen matrix multiplication over any exact ring.

Both work on ints, :class:`~packmul.exactdec.ExactDecimal`, ``Fraction`` or
anything else with ``+``, ``-`` and ``*``.  They serve as correctness oracles
and as the comparison baselines in the benchmark harness.
"""
from __future__ import annotations

from operator import add, mul, sub
from typing import Callable

from .matrix import DenseMatrix, as_matrix, check_inner

__all__ = ["DEFAULT_CUTOFF", "schoolbook_multiply", "strassen_footprint_digits", "strassen_multiply"]

DEFAULT_CUTOFF = 64


def _schoolbook_rows(a: list[list], b: list[list]) -> list[list]:
    cols = list(zip(*b))
    return [[sum(map(mul, row, col)) for col in cols] for row in a]


def schoolbook_multiply(A, B) -> DenseMatrix:
    """``C[i][j] = sum_k A[i][k] * B[k][j]``."""
    A, B = as_matrix(A), as_matrix(B)
    check_inner(A, B)
    return DenseMatrix.from_rows(_schoolbook_rows(A.to_rows(), B.to_rows()))


# -- Strassen ---------------------------------------------------------------------

def _add(x, y):
    return [list(map(add, rx, ry)) for rx, ry in zip(x, y)]


def _sub(x, y):
    return [list(map(sub, rx, ry)) for rx, ry in zip(x, y)]


def _quadrants(m, h):
    return (
        [r[:h] for r in m[:h]],
        [r[h:] for r in m[:h]],
        [r[:h] for r in m[h:]],
        [r[h:] for r in m[h:]],
    )


def _strassen(a, b, cutoff, zero, meter):
    """Product of square blocks ``a`` and ``b``; returns ``(block, peak_digits)``."""
    m = len(a)
    if m <= cutoff:
        return _schoolbook_rows(a, b), 0
    if m % 2:
        a = [r + [zero] for r in a] + [[zero] * (m + 1)]
        b = [r + [zero] for r in b] + [[zero] * (m + 1)]
    h = (m + 1) // 2
    a11, a12, a21, a22 = _quadrants(a, h)
    b11, b12, b21, b22 = _quadrants(b, h)

    sums = [
        _add(a11, a22), _add(b11, b22),
        _add(a21, a22), _sub(b12, b22),
        _sub(b21, b11), _add(a11, a12),
        _sub(a21, a11), _add(b11, b12),
        _sub(a12, a22), _add(b21, b22),
    ]
    s1, s2, s3, s4, s5, s6, s7, s8, s9, s10 = sums
    pairs = [(s1, s2), (s3, b11), (a11, s4), (a22, s5), (s6, b22), (s7, s8), (s9, s10)]
    products = []
    child_peak = 0
    for x, y in pairs:
        p, peak = _strassen(x, y, cutoff, zero, meter)
        products.append(p)
        child_peak = max(child_peak, peak)
    m1, m2, m3, m4, m5, m6, m7 = products

    c11 = _add(_sub(_add(m1, m4), m5), m7)
    c12 = _add(m3, m5)
    c21 = _add(m2, m4)
    c22 = _add(_add(_sub(m1, m2), m3), m6)
    top = [r1 + r2 for r1, r2 in zip(c11, c12)]
    bottom = [r1 + r2 for r1, r2 in zip(c21, c22)]
    c = (top + bottom)[:m]
    c = [r[:m] for r in c]

    peak = 0
    if meter is not None:
        blocks = [a, b, a11, a12, a21, a22, b11, b12, b21, b22, *sums, *products, c11, c12, c21, c22]
        peak = sum(meter(x) for blk in blocks for r in blk for x in r) + child_peak
    return c, peak


def _square_operands(A: DenseMatrix, B: DenseMatrix, zero):
    size = max(A.rows, A.cols, B.cols)
    a = [list(A.row(i)) + [zero] * (size - A.cols) for i in range(A.rows)]
    a += [[zero] * size for _ in range(size - A.rows)]
    b = [list(B.row(i)) + [zero] * (size - B.cols) for i in range(B.rows)]
    b += [[zero] * size for _ in range(size - B.rows)]
    return a, b


def _zero_like(A: DenseMatrix):
    return A.data[0] * 0


def strassen_multiply(A, B, cutoff: int = DEFAULT_CUTOFF) -> DenseMatrix:
    """Strassen's seven-product recursion, padding odd blocks with a zero row and column.

    Rectangular operands are zero-padded to the enclosing square.  Blocks of
    size ``<= cutoff`` are multiplied by the schoolbook method.
    """
    A, B = as_matrix(A), as_matrix(B)
    check_inner(A, B)
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    zero = _zero_like(A)
    a, b = _square_operands(A, B, zero)
    c, _ = _strassen(a, b, cutoff, zero, None)
    return DenseMatrix.from_rows(r[:B.cols] for r in c[:A.rows])


def strassen_footprint_digits(A, B, cutoff: int, digits: Callable[[object], int]) -> int:
    """Peak digit count of Strassen's intermediate blocks.

    Each recursion level is charged for its padded operands, quadrant copies,
    ten sums, seven products and four result quadrants, all live at once, plus
    the largest peak among its seven recursive calls.  Leaf schoolbook calls
    are charged nothing beyond their result.
    """
    A, B = as_matrix(A), as_matrix(B)
    check_inner(A, B)
    zero = _zero_like(A)
    a, b = _square_operands(A, B, zero)
    c, peak = _strassen(a, b, cutoff, zero, digits)
    return peak + sum(digits(x) for r in c for x in r)

"""Row-major dense matrices over exact scalars (ints, decimals, complex pairs)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence


class DimensionError(ValueError):
    """Operand shapes are incompatible for the requested product."""


@dataclass(frozen=True)
class DenseMatrix:
    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.data) != self.rows * self.cols:
            raise ValueError(f"data length {len(self.data)} does not match {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Any]]) -> DenseMatrix:
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int, zero: Any = 0) -> DenseMatrix:
        return cls(rows, cols, (zero,) * (rows * cols))

    @classmethod
    def identity(cls, n: int, one: Any = 1, zero: Any = 0) -> DenseMatrix:
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: tuple[int, int]) -> Any:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.data[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.data[j::self.cols]

    def to_rows(self) -> list[list[Any]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> DenseMatrix:
        return DenseMatrix(self.cols, self.rows, tuple(x for j in range(self.cols) for x in self.col(j)))

    def map(self, fn: Callable[[Any], Any]) -> DenseMatrix:
        return DenseMatrix(self.rows, self.cols, tuple(map(fn, self.data)))

    def zip_with(self, other: DenseMatrix, fn: Callable[[Any, Any], Any]) -> DenseMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")
        return DenseMatrix(self.rows, self.cols, tuple(map(fn, self.data, other.data)))

    def __add__(self, other: DenseMatrix) -> DenseMatrix:
        return self.zip_with(other, lambda a, b: a + b)

    def __sub__(self, other: DenseMatrix) -> DenseMatrix:
        return self.zip_with(other, lambda a, b: a - b)

    def __neg__(self) -> DenseMatrix:
        return self.map(lambda a: -a)


def as_matrix(m) -> DenseMatrix:
    """Accept a DenseMatrix or a nested row sequence."""
    if isinstance(m, DenseMatrix):
        return m
    return DenseMatrix.from_rows(m)


def check_inner(a: DenseMatrix, b: DenseMatrix) -> int:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return a.cols

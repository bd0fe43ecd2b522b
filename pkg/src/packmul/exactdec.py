"""Exact base-10 decimals and packed multiplication of decimal matrices.

A decimal matrix is multiplied by scaling each operand by a power of ten so
that every element becomes an integer, multiplying the integer matrices, and
reading the result back with the combined fraction-digit count.  Nothing is
rounded at any point.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .matrix import DenseMatrix, as_matrix, check_inner
from .signed import multiply_int

__all__ = [
    "ExactDecimal",
    "as_decimal_matrix",
    "integerize",
    "max_scale",
    "multiply_decimal",
    "multiply_decimal_unscaled",
    "parse_decimal",
]

_DECIMAL_RE = re.compile(r"([+-]?)([0-9]+)(?:\.([0-9]+))?\Z")


@dataclass(frozen=True)
class ExactDecimal:
    """``sign * unscaled * 10**-scale``, kept in canonical form.

    Canonical means ``sign == 0`` exactly for zero (with scale 0) and no
    trailing zero in ``unscaled`` while ``scale > 0``, so equal values are
    equal structurally.
    """

    sign: int
    unscaled: int
    scale: int

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.unscaled < 0 or self.scale < 0:
            raise ValueError("unscaled value and scale must be non-negative")
        if (self.sign == 0) != (self.unscaled == 0):
            raise ValueError("sign is 0 exactly when the value is zero")
        if self.unscaled == 0 and self.scale:
            raise ValueError("zero must have scale 0")
        if self.scale and self.unscaled % 10 == 0:
            raise ValueError("non-canonical decimal: trailing zero in fraction")

    @classmethod
    def from_scaled(cls, value: int, scale: int) -> ExactDecimal:
        """The decimal ``value * 10**-scale``, canonicalised."""
        if scale < 0:
            value, scale = value * 10 ** -scale, 0
        if value == 0:
            return cls(0, 0, 0)
        sign = 1 if value > 0 else -1
        value = abs(value)
        while scale and value % 10 == 0:
            value //= 10
            scale -= 1
        return cls(sign, value, scale)

    @classmethod
    def coerce(cls, x) -> ExactDecimal:
        if isinstance(x, ExactDecimal):
            return x
        if isinstance(x, int):
            return cls.from_scaled(x, 0)
        if isinstance(x, str):
            return parse_decimal(x)
        raise TypeError(f"cannot convert {type(x).__name__} to ExactDecimal exactly")

    def scaled_to(self, scale: int) -> int:
        """Signed integer ``value * 10**scale``; ``scale`` must not drop digits."""
        if scale < self.scale:
            raise ValueError(f"rescaling {self} to {scale} fraction digits would round")
        return self.sign * self.unscaled * 10 ** (scale - self.scale)

    def to_fraction(self) -> Fraction:
        return Fraction(self.sign * self.unscaled, 10 ** self.scale)

    def __str__(self) -> str:
        digits = str(self.unscaled)
        if self.scale:
            digits = digits.rjust(self.scale + 1, "0")
            digits = f"{digits[:-self.scale]}.{digits[-self.scale:]}"
        return f"-{digits}" if self.sign < 0 else digits

    def __neg__(self) -> ExactDecimal:
        return ExactDecimal(-self.sign, self.unscaled, self.scale)

    def __add__(self, other) -> ExactDecimal:
        if not isinstance(other, (ExactDecimal, int)):
            return NotImplemented
        other = ExactDecimal.coerce(other)
        scale = max(self.scale, other.scale)
        return ExactDecimal.from_scaled(self.scaled_to(scale) + other.scaled_to(scale), scale)

    __radd__ = __add__

    def __sub__(self, other) -> ExactDecimal:
        if not isinstance(other, (ExactDecimal, int)):
            return NotImplemented
        return self + -ExactDecimal.coerce(other)

    def __rsub__(self, other) -> ExactDecimal:
        return -self + other

    def __mul__(self, other) -> ExactDecimal:
        if not isinstance(other, (ExactDecimal, int)):
            return NotImplemented
        other = ExactDecimal.coerce(other)
        return ExactDecimal.from_scaled(
            self.sign * self.unscaled * other.sign * other.unscaled, self.scale + other.scale
        )

    __rmul__ = __mul__


def parse_decimal(s: str) -> ExactDecimal:
    m = _DECIMAL_RE.match(s.strip()) if isinstance(s, str) else None
    if m is None:
        raise ValueError(f"malformed decimal: {s!r}")
    sign, whole, frac = m.groups()
    frac = frac or ""
    value = int(whole + frac)
    return ExactDecimal.from_scaled(-value if sign == "-" else value, len(frac))


def as_decimal_matrix(A) -> DenseMatrix:
    return as_matrix(A).map(ExactDecimal.coerce)


def max_scale(A) -> int:
    """Largest fraction-digit count among the elements; 0 for integer matrices."""
    return max(e.scale for e in as_decimal_matrix(A).data)


def integerize(A, scale: int) -> DenseMatrix:
    """Signed integer matrix ``A * 10**scale``."""
    return as_decimal_matrix(A).map(lambda e: e.scaled_to(scale))


def multiply_decimal_unscaled(A, B, radix=10, kernel: str = "limb") -> tuple[DenseMatrix, int]:
    """Integer product of the scaled operands and its common fraction-digit count.

    Every cell of the returned integer matrix is to be read at ``scale``
    fraction digits, i.e. the product is ``result * 10**-scale``.
    """
    A, B = as_decimal_matrix(A), as_decimal_matrix(B)
    check_inner(A, B)
    scale_a, scale_b = max_scale(A), max_scale(B)
    product = multiply_int(integerize(A, scale_a), integerize(B, scale_b), radix, kernel)
    return product, scale_a + scale_b


def multiply_decimal(A, B, radix=10, kernel: str = "limb") -> DenseMatrix:
    """Exact product of two decimal matrices (elements as ExactDecimal, int or str)."""
    product, scale = multiply_decimal_unscaled(A, B, radix, kernel)
    return product.map(lambda v: ExactDecimal.from_scaled(v, scale))

"""Packed non-negative integer matrix multiplication.

Row ``i`` of ``A`` becomes one integer with ``A[i][k]`` in the digit field at
offset ``(n-1-k)*P``; column ``j`` of ``B`` becomes one integer with ``B[k][j]``
at offset ``k*P``.  Their product is the correlation of the two sequences,
one coefficient per ``P``-digit field, and the middle field (index ``n-1``) is
the dot product::

    >>> A = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    >>> B = [[9, 8, 7], [6, 5, 4], [3, 2, 1]]
    >>> multiply_nonneg(A, B).to_rows()
    [[30, 24, 18], [84, 69, 54], [138, 114, 90]]

``P`` is chosen large enough that no correlation coefficient overflows its
field, so fields never interact through carries.

Two big-integer backends are available through the ``kernel`` argument:
``"limb"`` uses :class:`~packmul.bigdigit.PackedInt` (digit slicing is a
tuple slice), ``"native"`` uses Python ints (slicing is shift/mask for
power-of-two radices, ``//`` and ``%`` otherwise).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Union

from .bigdigit import PackedInt, big_mul, big_slice, int_digit_count
from .matrix import DenseMatrix, as_matrix, check_inner

__all__ = [
    "KERNELS",
    "POW2_RADIX",
    "Footprint",
    "PackingParams",
    "compute_params",
    "correlation_slice",
    "footprint_digits",
    "multiply_nonneg",
    "pack_cols",
    "pack_rows",
    "packed_dot",
    "packed_product",
    "resolve_radix",
]

KERNELS = ("limb", "native")
POW2_RADIX = 1 << 32

Packed = Union[PackedInt, int]


def resolve_radix(radix) -> int:
    """Map ``"pow2"`` to the power-of-two radix; accept ints and numeric strings."""
    if radix == "pow2":
        return POW2_RADIX
    radix = int(radix)
    if radix < 2:
        raise ValueError(f"radix must be >= 2, got {radix}")
    return radix


def _check_kernel(kernel: str) -> None:
    if kernel not in KERNELS:
        raise ValueError(f"unknown kernel {kernel!r}; expected one of {KERNELS}")


def _pow2_bits(radix: int) -> int | None:
    if radix & (radix - 1) == 0:
        return radix.bit_length() - 1
    return None


@dataclass(frozen=True)
class PackingParams:
    """Field layout for one packed product.

    ``element_width`` digits hold any operand element, ``field_width`` digits
    hold any correlation coefficient, ``inner`` is the shared dimension.
    """

    radix: int
    element_width: int
    field_width: int
    inner: int

    def __post_init__(self):
        if self.radix < 2 or self.element_width < 1 or self.inner < 1:
            raise ValueError(f"invalid packing parameters {self}")
        limit = self.inner * (self.radix ** self.element_width - 1) ** 2
        if self.radix ** self.field_width <= limit:
            raise ValueError(
                f"field width {self.field_width} cannot hold {self.inner} products "
                f"of {self.element_width}-digit elements"
            )


def compute_params(A, B, radix=10) -> PackingParams:
    A, B = as_matrix(A), as_matrix(B)
    radix = resolve_radix(radix)
    inner = check_inner(A, B)
    largest = 0
    for x in A.data + B.data:
        if x < 0:
            raise ValueError(f"negative element {x} in non-negative product")
        if x > largest:
            largest = x
    element_width = int_digit_count(max(1, largest), radix)
    field_width = int_digit_count(inner * (radix ** (2 * element_width) - 1), radix)
    return PackingParams(radix, element_width, field_width, inner)


def _element_digits(x: int, params: PackingParams) -> list[int]:
    if x < 0 or x >= params.radix ** params.element_width:
        raise ValueError(f"element {x} does not fit {params.element_width} radix-{params.radix} digits")
    digits = list(PackedInt.from_int(x, params.radix).limbs)
    return digits + [0] * (params.field_width - len(digits))


def _pack(seq, params: PackingParams, kernel: str) -> Packed:
    """Pack ``seq`` with ``seq[-1]`` in the lowest field."""
    if kernel == "limb":
        digits: list[int] = []
        for x in reversed(seq):
            digits.extend(_element_digits(x, params))
        while digits and digits[-1] == 0:
            digits.pop()
        return PackedInt(params.radix, tuple(digits))
    cap = params.radix ** params.element_width
    bits = _pow2_bits(params.radix)
    value = 0
    if bits is not None:
        shift = bits * params.field_width
        for x in seq:
            if not 0 <= x < cap:
                raise ValueError(f"element {x} does not fit packing parameters")
            value = (value << shift) | x
    else:
        base = params.radix ** params.field_width
        for x in seq:
            if not 0 <= x < cap:
                raise ValueError(f"element {x} does not fit packing parameters")
            value = value * base + x
    return value


def pack_rows(A, params: PackingParams, kernel: str = "limb") -> list[Packed]:
    """``C[i] = sum_k A[i][k] * radix**((n-1-k)*P)`` for every row."""
    A = as_matrix(A)
    _check_kernel(kernel)
    if A.cols != params.inner:
        raise ValueError(f"row length {A.cols} does not match packing inner dimension {params.inner}")
    return [_pack(A.row(i), params, kernel) for i in range(A.rows)]


def pack_cols(B, params: PackingParams, kernel: str = "limb") -> list[Packed]:
    """``D[j] = sum_k B[k][j] * radix**(k*P)`` for every column."""
    B = as_matrix(B)
    _check_kernel(kernel)
    if B.rows != params.inner:
        raise ValueError(f"column length {B.rows} does not match packing inner dimension {params.inner}")
    return [_pack(B.col(j)[::-1], params, kernel) for j in range(B.cols)]


def packed_product(c: Packed, d: Packed) -> Packed:
    if isinstance(c, PackedInt):
        return big_mul(c, d)
    return c * d


def _field(x: Packed, offset: int, width: int, radix: int) -> int:
    if isinstance(x, PackedInt):
        if x.radix != radix:
            raise ValueError(f"radix mismatch: {x.radix} vs {radix}")
        return int(big_slice(x, offset, width))
    bits = _pow2_bits(radix)
    if bits is not None:
        return (x >> (bits * offset)) & ((1 << (bits * width)) - 1)
    return (x // radix ** offset) % radix ** width


def packed_dot(c: Packed, d: Packed, params: PackingParams) -> int:
    """Dot product of the row packed in ``c`` with the column packed in ``d``."""
    p = params.field_width
    return _field(packed_product(c, d), (params.inner - 1) * p, p, params.radix)


def correlation_slice(prod: Packed, s: int, params: PackingParams) -> int:
    """Field ``s`` of a packed product: ``sum A[i][k1]*B[k2][j]`` over ``k1 - k2 = n-1-s``."""
    if not 0 <= s <= 2 * params.inner - 2:
        raise ValueError(f"slice index {s} outside 0..{2 * params.inner - 2}")
    p = params.field_width
    return _field(prod, s * p, p, params.radix)


def multiply_nonneg(A, B, radix=10, kernel: str = "limb") -> DenseMatrix:
    """Exact product of two non-negative integer matrices via packed dot products."""
    A, B = as_matrix(A), as_matrix(B)
    params = compute_params(A, B, radix)
    rows = pack_rows(A, params, kernel)
    cols = pack_cols(B, params, kernel)
    radix = params.radix
    p = params.field_width
    low = (params.inner - 1) * p
    if kernel == "limb":
        out = [int(big_slice(big_mul(c, d), low, p)) for c in rows for d in cols]
    elif (bits := _pow2_bits(radix)) is not None:
        shift, mask = bits * low, (1 << (bits * p)) - 1
        out = [((c * d) >> shift) & mask for c in rows for d in cols]
    else:
        div, mod = radix ** low, radix ** p
        out = [(c * d // div) % mod for c in rows for d in cols]
    return DenseMatrix(A.rows, B.cols, tuple(out))


class Footprint(NamedTuple):
    paper_model: int
    impl_model: int


def _ndigits(x: Packed, radix: int) -> int:
    if isinstance(x, PackedInt):
        return x.ndigits
    return int_digit_count(x, radix)


def footprint_digits(A, B, params: PackingParams, kernel: str = "native") -> Footprint:
    """Digit counts of the packed rows, packed columns and result cells.

    ``paper_model`` charges every packed row/column at ``n*P`` digits and every
    result cell at the ``2*n*P`` digits of its full product.  ``impl_model``
    counts the digits actually held: packed rows and columns plus the
    extracted ``P``-digit results, the full products being transient.
    """
    A, B = as_matrix(A), as_matrix(B)
    n, p = params.inner, params.field_width
    modelled = (A.rows + B.cols) * n * p + A.rows * B.cols * 2 * n * p
    rows = pack_rows(A, params, kernel)
    cols = pack_cols(B, params, kernel)
    impl = sum(_ndigits(c, params.radix) for c in rows) + sum(_ndigits(d, params.radix) for d in cols)
    for c in rows:
        for d in cols:
            impl += int_digit_count(packed_dot(c, d, params), params.radix)
    return Footprint(modelled, impl)

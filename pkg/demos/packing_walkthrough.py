"""
Matrix products from single big-integer multiplications
=======================================================

Each row of A and each column of B is squeezed into one large integer, with
every element in its own fixed-width field of digits.  Multiplying a packed
row by a packed column then lays out every partial sum side by side, and the
dot product can be read straight out of the middle field.
"""

from packmul import (
    DenseMatrix, compute_params, correlation_slice, multiply_nonneg,
    pack_cols, pack_rows, packed_dot, packed_product,
)

A = DenseMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
B = DenseMatrix.from_rows([[9, 8, 7], [6, 5, 4], [3, 2, 1]])

###############################################################################
# Field widths
# ------------
# M is the digit count of the largest element.  P must hold the largest
# possible partial sum, n * (10**(2M) - 1), so neighbouring fields never carry
# into each other.

p = compute_params(A, B, radix=10)
print("M =", p.element_width, " P =", p.field_width)

###############################################################################
# Packing
# -------
# Rows are packed most-significant first, columns least-significant first.
# The reversal is what lines up A[i][k] with B[k][j] in the product.

C = pack_rows(A, p, kernel="native")
D = pack_cols(B, p, kernel="native")
print("packed rows   ", C)
print("packed columns", D)

###############################################################################
# One multiplication, five fields
# -------------------------------
# The product of C[0] and D[0], cut into 3-digit fields, holds the full
# correlation of row 0 with column 0.  The middle field is the dot product.

prod = packed_product(C[0], D[0])
print(prod)
print([correlation_slice(prod, s, p) for s in range(2 * p.inner - 1)])
print("dot product:", packed_dot(C[0], D[0], p), "=", 1 * 9 + 2 * 6 + 3 * 3)

###############################################################################
# The whole product
# -----------------
# The digit-array kernel and Python's own integers give the same matrix, in
# decimal or in 2**32 radix.

for kernel in ("limb", "native"):
    for radix in (10, "pow2"):
        print(kernel, radix, multiply_nonneg(A, B, radix, kernel).to_rows())

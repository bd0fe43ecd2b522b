"""
Beyond non-negative integers
============================

The packed method only handles non-negative entries.  Signed, decimal and
complex matrices are reduced to it: signs by splitting into positive and
negative parts, decimals by scaling to integers, complex numbers by handling
real and imaginary parts separately.
"""

from fractions import Fraction

from packmul import (
    ComplexMatrix, multiply_complex, multiply_decimal, multiply_decimal_unscaled,
    multiply_int, split_signs,
)

###############################################################################
# Signs
# -----
# A = A1 - A2 with both parts non-negative.  Four packed products are combined
# as A1B1 - A1B2 - A2B1 + A2B2.

A = [[3, -2, 1], [-8, 6, 5], [18, -14, -9]]
pos, neg = split_signs(A)
print(pos.to_rows())
print(neg.to_rows())
print(multiply_int([[1, -2], [-3, 4]], [[5, 6], [7, 8]]).to_rows())

###############################################################################
# Decimals
# --------
# Every entry is an exact decimal, never a binary float.  Each operand is
# scaled by 10**R where R is its largest fraction-digit count, and the integer
# product is read back with R1 + R2 fraction digits.

X = [["0.5", "1.25"], ["2", "0.1"]]
Y = [["1.5", "0"], ["0.25", "4"]]
ints, scale = multiply_decimal_unscaled(X, Y)
print(ints.to_rows(), "at", scale, "fraction digits")
Z = multiply_decimal(X, Y)
print([[str(v) for v in row] for row in Z.to_rows()])

# same thing with fractions, for comparison
fx = [[Fraction(v) for v in row] for row in X]
fy = [[Fraction(v) for v in row] for row in Y]
print([[str(sum(a * b for a, b in zip(r, c))) for c in zip(*fy)] for r in fx])

###############################################################################
# Complex
# -------
# (Ar + i Ai)(Br + i Bi) needs four real products.

P = ComplexMatrix.from_parts([["1", "0.5"]], [["2", "-1"]])
Q = ComplexMatrix.from_parts([["3"], ["2"]], [["-1"], ["0.25"]])
R = multiply_complex(P, Q)
re, im = R[0, 0]
print(f"{re} + {im}i")

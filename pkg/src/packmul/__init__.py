"""Matrix multiplication by digit packing.

Rows and columns are packed into single big integers; one big-integer
product per output cell carries the whole dot product in a fixed digit
field.  Front-ends handle signed integers, exact decimals and complex
decimals; schoolbook and Strassen implementations serve as oracles and
benchmark baselines.
"""
from .bigdigit import (
    PackedInt,
    big_add,
    big_compare,
    big_from_decimal_string,
    big_mul,
    big_shift,
    big_slice,
    big_to_decimal_string,
    int_digit_count,
)
from .bench import emit_csv, emit_plot, fit_exponent, generate_matrix, run_benchmark, summarize
from .complexmul import ComplexMatrix, multiply_complex
from .exactdec import ExactDecimal, max_scale, multiply_decimal, multiply_decimal_unscaled, parse_decimal
from .matrix import DenseMatrix, DimensionError
from .packing import (
    PackingParams,
    compute_params,
    correlation_slice,
    footprint_digits,
    multiply_nonneg,
    pack_cols,
    pack_rows,
    packed_dot,
    packed_product,
)
from .reference import schoolbook_multiply, strassen_multiply
from .signed import SignSplit, multiply_int, split_signs

__version__ = "0.1.0"

"""Plain-text matrix files.

Line 1 is ``<kind> <rows> <cols>`` with kind ``int``, ``decimal`` or
``complex``; the elements follow in row-major order separated by any
whitespace.  ``int`` elements match ``[+-]?[0-9]+``, ``decimal`` elements
``[+-]?[0-9]+(\\.[0-9]+)?`` and ``complex`` elements ``<decimal>(+|-)<digits>i``,
e.g. ``1.5-0.25i``.
"""
from __future__ import annotations

import re
from pathlib import Path

from .complexmul import ComplexMatrix
from .exactdec import ExactDecimal, parse_decimal
from .matrix import DenseMatrix

__all__ = ["KINDS", "MatrixFormatError", "format_matrix", "parse_matrix", "read_matrix", "write_matrix"]

KINDS = ("int", "decimal", "complex")

_INT_RE = re.compile(r"[+-]?[0-9]+\Z")
_COMPLEX_RE = re.compile(r"([+-]?[0-9]+(?:\.[0-9]+)?)([+-])([0-9]+(?:\.[0-9]+)?)i\Z")


class MatrixFormatError(ValueError):
    pass


def _parse_element(tok: str, kind: str):
    if kind == "int":
        if not _INT_RE.match(tok):
            raise MatrixFormatError(f"bad int element {tok!r}")
        return int(tok)
    if kind == "decimal":
        try:
            return parse_decimal(tok)
        except ValueError as exc:
            raise MatrixFormatError(str(exc)) from None
    m = _COMPLEX_RE.match(tok)
    if m is None:
        raise MatrixFormatError(f"bad complex element {tok!r}")
    re_part, sign, im_part = m.groups()
    im = parse_decimal(im_part)
    return parse_decimal(re_part), -im if sign == "-" else im


def parse_matrix(text: str, kind: str | None = None):
    """Parse file contents; ``kind``, when given, must match the header."""
    tokens = text.split()
    if len(tokens) < 3:
        raise MatrixFormatError("missing header '<kind> <rows> <cols>'")
    file_kind, rows, cols = tokens[:3]
    if file_kind not in KINDS:
        raise MatrixFormatError(f"unknown kind {file_kind!r}")
    if kind is not None and kind != file_kind:
        raise MatrixFormatError(f"expected kind {kind!r}, file declares {file_kind!r}")
    if not (rows.isdigit() and cols.isdigit()) or int(rows) < 1 or int(cols) < 1:
        raise MatrixFormatError(f"bad dimensions {rows!r} x {cols!r}")
    rows, cols = int(rows), int(cols)
    elements = tokens[3:]
    if len(elements) != rows * cols:
        raise MatrixFormatError(f"header declares {rows * cols} elements, found {len(elements)}")
    values = [_parse_element(tok, file_kind) for tok in elements]
    if file_kind == "complex":
        return ComplexMatrix(
            DenseMatrix(rows, cols, tuple(v[0] for v in values)),
            DenseMatrix(rows, cols, tuple(v[1] for v in values)),
        )
    return DenseMatrix(rows, cols, tuple(values))


def _format_complex(re_part: ExactDecimal, im_part: ExactDecimal) -> str:
    if im_part.sign < 0:
        return f"{re_part}-{-im_part}i"
    return f"{re_part}+{im_part}i"


def format_matrix(m, kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "complex":
        cells = [_format_complex(r, i) for r, i in zip(m.re.data, m.im.data)]
    elif kind == "decimal":
        cells = [str(ExactDecimal.coerce(x)) for x in m.data]
    else:
        cells = [str(int(x)) for x in m.data]
    lines = [f"{kind} {m.rows} {m.cols}"]
    lines += [" ".join(cells[i * m.cols:(i + 1) * m.cols]) for i in range(m.rows)]
    return "\n".join(lines) + "\n"


def read_matrix(path, kind: str | None = None):
    return parse_matrix(Path(path).read_text(), kind)


def write_matrix(path, m, kind: str) -> None:
    Path(path).write_text(format_matrix(m, kind))

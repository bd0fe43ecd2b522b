"""Radix-generic arbitrary-precision non-negative integers.

A :class:`PackedInt` is a little-endian tuple of digits in an arbitrary radix
``>= 2``.  Floor-division and remainder by a power of the radix are digit
slices (:func:`big_slice`), which is what makes extracting packed fields
cheap.

Multiplication is schoolbook convolution over the digit vector, vectorised
with numpy, switching to Karatsuba above ``KARATSUBA_THRESHOLD`` digits.
Carries are resolved once, after the full convolution.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

__all__ = [
    "KARATSUBA_THRESHOLD",
    "PackedInt",
    "big_add",
    "big_compare",
    "big_from_decimal_string",
    "big_mul",
    "big_shift",
    "big_slice",
    "big_to_decimal_string",
    "int_digit_count",
]

KARATSUBA_THRESHOLD = 32

_INT64_HEADROOM = 1 << 62
_FLOAT64_EXACT = 1 << 53
_DECIMAL_RE = re.compile(r"0|[1-9][0-9]*")


@dataclass(frozen=True)
class PackedInt:
    """Non-negative integer stored as radix-``radix`` digits, least significant first.

    Zero is the empty digit tuple; there is never a most-significant zero digit.
    """

    radix: int
    limbs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.radix < 2:
            raise ValueError(f"radix must be >= 2, got {self.radix}")
        if self.limbs and self.limbs[-1] == 0:
            raise ValueError("non-canonical PackedInt: most-significant limb is zero")
        for d in self.limbs:
            if not 0 <= d < self.radix:
                raise ValueError(f"limb {d} out of range for radix {self.radix}")

    @classmethod
    def from_int(cls, value: int, radix: int) -> PackedInt:
        if value < 0:
            raise ValueError("PackedInt holds non-negative values only")
        if radix < 2:
            raise ValueError(f"radix must be >= 2, got {radix}")
        digits = []
        while value:
            value, d = divmod(value, radix)
            digits.append(d)
        return cls(radix, tuple(digits))

    @property
    def ndigits(self) -> int:
        return len(self.limbs)

    def __int__(self) -> int:
        value = 0
        for d in reversed(self.limbs):
            value = value * self.radix + d
        return value

    def __bool__(self) -> bool:
        return bool(self.limbs)

    def __repr__(self) -> str:
        return f"PackedInt(radix={self.radix}, value={big_to_decimal_string(self)})"


def _trusted(radix: int, digits: list[int]) -> PackedInt:
    """Build from digits already known to lie in ``[0, radix)``, skipping validation."""
    while digits and digits[-1] == 0:
        digits.pop()
    x = object.__new__(PackedInt)
    object.__setattr__(x, "radix", radix)
    object.__setattr__(x, "limbs", tuple(digits))
    return x


def _canonical(radix: int, digits) -> PackedInt:
    digits = list(digits)
    while digits and digits[-1] == 0:
        digits.pop()
    return PackedInt(radix, tuple(digits))


def _check_same_radix(a: PackedInt, b: PackedInt) -> int:
    if a.radix != b.radix:
        raise ValueError(f"radix mismatch: {a.radix} vs {b.radix}")
    return a.radix


def int_digit_count(value: int, radix: int) -> int:
    """Number of radix-``radix`` digits of a host integer; 0 has zero digits."""
    if value < 0:
        raise ValueError("digit count of a negative value")
    if value == 0:
        return 0
    if radix & (radix - 1) == 0:
        bits = radix.bit_length() - 1
        return -(-value.bit_length() // bits)
    # bit-length estimate, then correct by at most a step or two
    est = max(1, int((value.bit_length() - 1) * 0.6931471805599453 / np.log(radix)))
    lo = radix ** (est - 1)
    while lo > value:
        est -= 1
        lo //= radix
    while lo * radix <= value:
        est += 1
        lo *= radix
    return est


# -- conversion ---------------------------------------------------------------

def _mul_small_add(digits: list[int], factor: int, addend: int, radix: int) -> None:
    carry = addend
    for i, d in enumerate(digits):
        carry, digits[i] = divmod(d * factor + carry, radix)
    while carry:
        carry, d = divmod(carry, radix)
        digits.append(d)


def _divmod_small(digits: list[int], divisor: int, radix: int) -> int:
    rem = 0
    for i in range(len(digits) - 1, -1, -1):
        digits[i], rem = divmod(rem * radix + digits[i], divisor)
    while digits and digits[-1] == 0:
        digits.pop()
    return rem


def big_from_decimal_string(s: str, radix: int) -> PackedInt:
    if radix < 2:
        raise ValueError(f"radix must be >= 2, got {radix}")
    if not isinstance(s, str) or not _DECIMAL_RE.fullmatch(s):
        raise ValueError(f"malformed decimal string: {s!r}")
    if radix == 10:
        return _canonical(10, (int(c) for c in reversed(s)))
    digits: list[int] = []
    for c in s:
        _mul_small_add(digits, 10, int(c), radix)
    return _canonical(radix, digits)


def big_to_decimal_string(x: PackedInt) -> str:
    if not x.limbs:
        return "0"
    if x.radix == 10:
        return "".join(str(d) for d in reversed(x.limbs))
    digits = list(x.limbs)
    out = []
    while digits:
        out.append(str(_divmod_small(digits, 10, x.radix)))
    return "".join(reversed(out))


# -- comparison, addition, shifting, slicing -------------------------------------

def big_compare(a: PackedInt, b: PackedInt) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    _check_same_radix(a, b)
    if len(a.limbs) != len(b.limbs):
        return -1 if len(a.limbs) < len(b.limbs) else 1
    for da, db in zip(reversed(a.limbs), reversed(b.limbs)):
        if da != db:
            return -1 if da < db else 1
    return 0


def big_add(a: PackedInt, b: PackedInt) -> PackedInt:
    radix = _check_same_radix(a, b)
    if len(a.limbs) < len(b.limbs):
        a, b = b, a
    out = []
    carry = 0
    lb = len(b.limbs)
    for i, d in enumerate(a.limbs):
        s = d + (b.limbs[i] if i < lb else 0) + carry
        if s >= radix:
            out.append(s - radix)
            carry = 1
        else:
            out.append(s)
            carry = 0
    if carry:
        out.append(1)
    return _trusted(radix, out)


def big_shift(x: PackedInt, k: int) -> PackedInt:
    """Multiply by ``radix**k``."""
    if k < 0:
        raise ValueError("shift count must be non-negative")
    if not x.limbs:
        return x
    return _trusted(x.radix, [0] * k + list(x.limbs))


def big_slice(x: PackedInt, offset: int, width: int) -> PackedInt:
    """``floor(x / radix**offset) mod radix**width``; empty ranges give zero."""
    if offset < 0 or width < 0:
        raise ValueError("offset and width must be non-negative")
    return _trusted(x.radix, list(x.limbs[offset:offset + width]))


# -- multiplication --------------------------------------------------------------

def _vec_add(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if len(x) < len(y):
        x, y = y, x
    out = x.copy()
    out[:len(y)] += y
    return out


def _karatsuba(a: np.ndarray, b: np.ndarray, threshold: int) -> np.ndarray:
    """Raw (uncarried) coefficient product of two digit vectors."""
    if len(a) < len(b):
        a, b = b, a
    la, lb = len(a), len(b)
    if threshold is None or lb <= threshold:
        return np.convolve(a, b)
    h = la // 2
    out = np.zeros(la + lb - 1, dtype=a.dtype)
    if lb <= h:
        # unbalanced: split only the longer operand
        out[:h + lb - 1] += _karatsuba(a[:h], b, threshold)
        out[h:] += _karatsuba(a[h:], b, threshold)
        return out
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _karatsuba(a0, b0, threshold)
    z2 = _karatsuba(a1, b1, threshold)
    z1 = _karatsuba(_vec_add(a0, a1), _vec_add(b0, b1), threshold)
    z1[:len(z0)] -= z0
    z1[:len(z2)] -= z2
    out[:len(z0)] += z0
    out[2 * h:2 * h + len(z2)] += z2
    out[h:h + len(z1)] += z1
    return out


def _carry(coeffs: np.ndarray, radix: int) -> np.ndarray:
    """Normalise non-negative coefficients to digits in ``[0, radix)``."""
    x = np.concatenate([coeffs, np.zeros(1, dtype=coeffs.dtype)])
    # bring every position to at most radix (digit plus a unit carry)
    while x.max() > radix:
        c = x // radix
        x -= c * radix
        x[1:] += c[:-1]
    gen = x == radix
    if gen.any():
        # carry-lookahead for ripple chains through radix-1 digits
        idx = np.arange(len(x))
        kill = ~gen & (x != radix - 1)
        last_gen = np.maximum.accumulate(np.where(gen, idx, -1))
        last_kill = np.maximum.accumulate(np.where(kill, idx, -1))
        cin = np.zeros(len(x), dtype=x.dtype)
        cin[1:] = last_gen[:-1] > last_kill[:-1]
        x = (x + cin) % radix
    return x


def _sub_limb_bits(radix: int) -> int:
    """Bits per internal sub-digit for power-of-two radices too wide for int64."""
    bits = radix.bit_length() - 1
    for s in range(min(bits, 16), 0, -1):
        if bits % s == 0:
            return s
    return 1


def _split_pow2(limbs, bits: int, sub: int) -> np.ndarray:
    parts = bits // sub
    arr = np.array(limbs, dtype=object)
    mask = (1 << sub) - 1
    cols = [(arr >> (sub * t)) & mask for t in range(parts)]
    return np.stack(cols, axis=1).reshape(-1).astype(np.int64)


def _join_pow2(digits: np.ndarray, bits: int, sub: int) -> list[int]:
    parts = bits // sub
    pad = (-len(digits)) % parts
    d = np.concatenate([digits, np.zeros(pad, dtype=digits.dtype)]).reshape(-1, parts)
    out = [0] * len(d)
    for t in range(parts - 1, -1, -1):
        col = d[:, t].tolist()
        out = [(o << sub) | c for o, c in zip(out, col)]
    return out


def _coeff_dtype(radix: int, la: int, lb: int, threshold):
    """Narrowest numpy dtype that holds every intermediate coefficient exactly."""
    depth = 0
    if threshold is not None:
        n = max(la, lb)
        while n > threshold:
            n = (n + 1) // 2
            depth += 1
    # Karatsuba operand sums double the digit bound per level
    bound = min(la, lb) * (radix - 1) ** 2 * 4 ** depth
    if bound < _FLOAT64_EXACT:
        return np.float64
    if bound < _INT64_HEADROOM:
        return np.int64
    return None


def _product_digits(av: np.ndarray, bv: np.ndarray, radix: int, threshold, dtype) -> np.ndarray:
    raw = _karatsuba(av.astype(dtype), bv.astype(dtype), threshold)
    if dtype is np.float64:
        raw = raw.astype(np.int64)
    return _carry(raw, radix)


def big_mul(a: PackedInt, b: PackedInt, karatsuba_threshold: int | None = KARATSUBA_THRESHOLD) -> PackedInt:
    """Product of two packed integers.

    ``karatsuba_threshold`` is the operand length (in digits) at or below which
    plain schoolbook convolution is used; ``None`` disables Karatsuba.
    """
    radix = _check_same_radix(a, b)
    if not a.limbs or not b.limbs:
        return PackedInt(radix)
    la, lb = len(a.limbs), len(b.limbs)
    dtype = _coeff_dtype(radix, la, lb, karatsuba_threshold)
    if dtype is not None:
        digits = _product_digits(np.array(a.limbs), np.array(b.limbs), radix, karatsuba_threshold, dtype)
        return _trusted(radix, digits.tolist())
    if radix & (radix - 1) == 0:
        bits = radix.bit_length() - 1
        sub = _sub_limb_bits(radix)
        av = _split_pow2(a.limbs, bits, sub)
        bv = _split_pow2(b.limbs, bits, sub)
        dtype = _coeff_dtype(1 << sub, len(av), len(bv), karatsuba_threshold)
        if dtype is not None:
            digits = _product_digits(av, bv, 1 << sub, karatsuba_threshold, dtype)
            return _trusted(radix, _join_pow2(digits, bits, sub))
    av = np.array(a.limbs, dtype=object)
    bv = np.array(b.limbs, dtype=object)
    digits = _carry(_karatsuba(av, bv, karatsuba_threshold), radix)
    return _trusted(radix, digits.tolist())

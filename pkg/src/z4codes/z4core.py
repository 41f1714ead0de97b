"""Arithmetic over Z4 and Z2, Lee/Hamming metrics and the Gray map.

Words are small numpy integer arrays (``uint8``) for the public API.  For
bulk enumeration a Z4 word of length n is packed into two bitplanes held in
one integer ``lo | hi << n`` where ``c = lo + 2*hi`` coordinatewise, and a
binary word of length N is an integer whose bit j is coordinate j.  The
packed helpers work on Python ints, ``uint64`` arrays and object arrays of
Python ints alike.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

LEE = np.array([0, 1, 2, 1], dtype=np.int64)
BETA = np.array([0, 0, 1, 1], dtype=np.uint8)
GAMMA = np.array([0, 1, 1, 0], dtype=np.uint8)


def as_z4(w: Sequence[int]) -> np.ndarray:
    arr = np.asarray(w, dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("a Z4 word is a non-empty 1-d sequence")
    if arr.min() < 0 or arr.max() > 3:
        raise ValueError("Z4 coordinates must lie in 0..3")
    return arr.astype(np.uint8)


def as_bits(x: Sequence[int]) -> np.ndarray:
    arr = np.asarray(x, dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("a binary word is a non-empty 1-d sequence")
    if arr.min() < 0 or arr.max() > 1:
        raise ValueError("binary coordinates must lie in 0..1")
    return arr.astype(np.uint8)


def _same_length(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")


def add(a, b) -> np.ndarray:
    a, b = as_z4(a), as_z4(b)
    _same_length(a, b)
    return (a + b) % 4


def sub(a, b) -> np.ndarray:
    a, b = as_z4(a), as_z4(b)
    _same_length(a, b)
    return (a + 4 - b) % 4


def scale(c: int, w) -> np.ndarray:
    return (int(c) % 4 * as_z4(w).astype(np.int64) % 4).astype(np.uint8)


def negate(w) -> np.ndarray:
    """Coordinatewise sign change ``c -> -c mod 4``."""
    return (4 - as_z4(w)) % 4


def odd_part(w) -> np.ndarray:
    """Coordinatewise parity ``c mod 2`` as a binary word."""
    return as_z4(w) & 1


def lee_weight(w) -> int:
    return int(LEE[as_z4(w)].sum())


def lee_distance(a, b) -> int:
    return lee_weight(sub(b, a))


def hamming_weight(x) -> int:
    return int(as_bits(x).sum())


def hamming_distance(x, y) -> int:
    x, y = as_bits(x), as_bits(y)
    _same_length(x, y)
    return int((x ^ y).sum())


def gray_map(w) -> np.ndarray:
    """Gray image ``(beta(w), gamma(w))`` of length 2n; coordinate i of w
    goes to binary coordinates i and i + n."""
    w = as_z4(w)
    return np.concatenate([BETA[w], GAMMA[w]])


def gray_inverse(x) -> np.ndarray:
    x = as_bits(x)
    if x.size % 2:
        raise ValueError("Gray preimage needs an even-length binary word")
    n = x.size // 2
    beta, gamma = x[:n], x[n:]
    # beta is the high bit; gamma = lo ^ hi
    return (2 * beta + (beta ^ gamma)).astype(np.uint8)


# -- packed representation ---------------------------------------------------


def pack_z4(w) -> int:
    w = as_z4(w)
    n = w.size
    lo = pack_bits(w & 1)
    hi = pack_bits(w >> 1)
    return lo | (hi << n)


def unpack_z4(p: int, n: int) -> np.ndarray:
    p = int(p)
    lo = unpack_bits(p & ((1 << n) - 1), n)
    hi = unpack_bits(p >> n, n)
    return (lo + 2 * hi).astype(np.uint8)


def pack_bits(x) -> int:
    v = 0
    for j, bit in enumerate(np.asarray(x).tolist()):
        if bit:
            v |= 1 << j
    return v


def unpack_bits(v: int, N: int) -> np.ndarray:
    v = int(v)
    return np.array([(v >> j) & 1 for j in range(N)], dtype=np.uint8)


def word_dtype(bits: int):
    """Storage dtype for packed words of the given bit width."""
    return np.uint64 if bits <= 64 else object


def _const(value: int, like):
    if isinstance(like, np.ndarray) and like.dtype == np.uint64:
        return np.uint64(value)
    return value


def planes(p, n: int):
    """Split packed Z4 words into their (lo, hi) bitplanes."""
    mask = _const((1 << n) - 1, p)
    return p & mask, (p >> _const(n, p)) & mask


def join(lo, hi, n: int):
    return lo | (hi << _const(n, hi))


def packed_add(p, q, n: int):
    """Coordinatewise addition mod 4 of packed words (ripple carry per coordinate)."""
    a_lo, a_hi = planes(p, n)
    b_lo, b_hi = planes(q, n)
    carry = a_lo & b_lo
    return join(a_lo ^ b_lo, a_hi ^ b_hi ^ carry, n)


def packed_scale(c: int, p, n: int):
    c %= 4
    lo, hi = planes(p, n)
    if c == 0:
        return p ^ p
    if c == 1:
        return p
    if c == 2:
        return join(lo ^ lo, lo, n)
    return join(lo, hi ^ lo, n)


def packed_negate(p, n: int):
    return packed_scale(3, p, n)


def packed_odd(p, n: int):
    return planes(p, n)[0]


def packed_gray(p, n: int):
    """Gray image of packed Z4 words as packed binary words of length 2n."""
    lo, hi = planes(p, n)
    return hi | ((lo ^ hi) << _const(n, lo))


def packed_gray_inverse(x, n: int):
    beta, gamma = planes(x, n)
    return join(beta ^ gamma, beta, n)


def popcount(x):
    """Bit count of a Python int or elementwise over an integer array."""
    if isinstance(x, np.ndarray):
        if x.dtype == object:
            return np.fromiter((int(v).bit_count() for v in x), dtype=np.int64, count=x.size)
        return np.bitwise_count(x).astype(np.int64)
    return int(x).bit_count()


def packed_lee_weight(p, n: int):
    """Lee weight from bitplanes: each odd coordinate counts 1, each 2 counts 2."""
    lo, hi = planes(p, n)
    return popcount(lo) + 2 * popcount(hi & ~lo)


def gray_addition_defect(a, b) -> np.ndarray:
    """Return ``phi(a+b) ^ phi(a) ^ phi(b) ^ phi(2*(odd(a) & odd(b)))``.

    The identity ``phi(a+b) = phi(a) ^ phi(b) ^ phi(2*(odd(a) & odd(b)))``
    holds iff this is the zero word.
    """
    a, b = as_z4(a), as_z4(b)
    _same_length(a, b)
    corr = scale(2, odd_part(a) & odd_part(b))
    return gray_map(add(a, b)) ^ gray_map(a) ^ gray_map(b) ^ gray_map(corr)


def check_gray_addition_identity() -> bool:
    """Exhaustive check of the Gray addition identity over all Z4 scalar pairs."""
    # the 16 pairs laid out as two length-16 words; coordinates are independent
    a = np.repeat(np.arange(4), 4)
    b = np.tile(np.arange(4), 4)
    return not gray_addition_defect(a, b).any()

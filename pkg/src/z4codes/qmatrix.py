"""Two-block quaternary matrices ``[G1; 2*G2]`` and linear algebra over Z4."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import z4core

MAX_K = 7  # default cap on 2*r1 + r2 + 1


class CodeType(NamedTuple):
    k1: int
    k2: int

    @property
    def log2_size(self) -> int:
        return 2 * self.k1 + self.k2

    def __str__(self) -> str:
        return f"4^{self.k1} 2^{self.k2}"


class DependentRowsError(ValueError):
    pass


def _as_block(rows, n: int | None, modulus: int) -> np.ndarray:
    arr = np.asarray(rows, dtype=np.int64)
    if arr.size == 0:
        arr = arr.reshape(0, n or 0)
    if arr.ndim != 2:
        raise ValueError("matrix blocks must be 2-d")
    if arr.size and (arr.min() < 0 or arr.max() >= modulus):
        raise ValueError(f"block entries must lie in 0..{modulus - 1}")
    return arr.astype(np.uint8)


@dataclass(frozen=True, eq=False)
class QuaternaryMatrix:
    """Generator or check matrix ``[block1; 2*block2]``.

    ``block1`` holds Z4 rows, ``block2`` holds binary rows standing for the
    doubled rows with entries in {0, 2}.
    """

    block1: np.ndarray
    block2: np.ndarray

    def __init__(self, block1=(), block2=(), n: int | None = None):
        b1 = np.asarray(block1)
        b2 = np.asarray(block2)
        if n is None:
            n = b1.shape[1] if b1.ndim == 2 and b1.size else b2.shape[1] if b2.ndim == 2 and b2.size else None
        if n is None:
            raise ValueError("column count cannot be inferred from empty blocks")
        b1 = _as_block(block1, n, 4)
        b2 = _as_block(block2, n, 2)
        if b1.shape[1] != n or b2.shape[1] != n:
            raise ValueError("blocks must have the same column count")
        b1.setflags(write=False)
        b2.setflags(write=False)
        object.__setattr__(self, "block1", b1)
        object.__setattr__(self, "block2", b2)

    @property
    def n(self) -> int:
        return self.block1.shape[1]

    @property
    def k1(self) -> int:
        return self.block1.shape[0]

    @property
    def k2(self) -> int:
        return self.block2.shape[0]

    def rows(self) -> np.ndarray:
        """All rows as Z4 values, block2 doubled."""
        return np.vstack([self.block1, 2 * self.block2]).astype(np.uint8)

    def orders(self) -> list[int]:
        return [4] * self.k1 + [2] * self.k2

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuaternaryMatrix):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.block1, other.block1)
            and np.array_equal(self.block2, other.block2)
        )

    def __repr__(self) -> str:
        return f"QuaternaryMatrix(n={self.n}, k1={self.k1}, k2={self.k2})"

    def to_text(self) -> str:
        lines = [f"# z4matrix n={self.n} k1={self.k1} k2={self.k2}"]
        lines += ["".join(map(str, row)) for row in self.rows().tolist()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "QuaternaryMatrix":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        header = None
        body = []
        for ln in lines:
            if ln.startswith("# z4matrix"):
                header = dict(kv.split("=", 1) for kv in ln.split()[2:])
            elif ln.startswith("#"):
                continue
            else:
                body.append([int(ch) for ch in ln])
        if header is None:
            raise ValueError("missing '# z4matrix' header")
        n, k1, k2 = int(header["n"]), int(header["k1"]), int(header["k2"])
        if len(body) != k1 + k2 or any(len(r) != n for r in body):
            raise ValueError("matrix body does not match its header")
        b1 = np.array(body[:k1], dtype=np.int64).reshape(k1, n)
        b2 = np.array(body[k1:], dtype=np.int64).reshape(k2, n)
        if b2.size and np.any(b2 % 2):
            raise ValueError("block2 rows must be written in doubled form (digits 0/2)")
        return cls(b1, b2 // 2, n=n)


def build_A(r1: int, r2: int, max_k: int = MAX_K) -> QuaternaryMatrix:
    """Matrix whose columns are the words ``(1, v, u)``, ``v`` in Z4^r1 and
    ``u`` in {0,2}^r2, in lexicographic order (row 1 most significant)."""
    if r1 < 0 or r2 < 0:
        raise ValueError("r1 and r2 must be non-negative")
    if 2 * r1 + r2 + 1 > max_k:
        raise ValueError(f"2*r1 + r2 + 1 = {2 * r1 + r2 + 1} exceeds the cap {max_k}")
    digits = [range(4)] * r1 + [(0, 1)] * r2
    n = 4**r1 * 2**r2
    cols = np.array(list(itertools.product(*digits)), dtype=np.uint8).reshape(n, r1 + r2)
    block1 = np.vstack([np.ones((1, n), dtype=np.uint8), cols[:, :r1].T])
    return QuaternaryMatrix(block1, cols[:, r1:].T, n=n)


# -- row reduction ----------------------------------------------------------


class Reduction(NamedTuple):
    """Standard form ``[[I, X, Y], [0, 2I, 2W]]`` up to column order.

    ``unit_rows`` have a 1 in ``unit_pivots``, ``two_rows`` (Z4 values in
    {0,2}) have a 2 in ``two_pivots``; every pivot column is zero in all
    other reduced rows of the even block and in the even rows.
    """

    unit_rows: np.ndarray
    unit_pivots: list[int]
    two_rows: np.ndarray
    two_pivots: list[int]
    dropped: int


def reduce_rows(rows: np.ndarray) -> Reduction:
    M = (np.asarray(rows, dtype=np.int64) % 4).copy()
    if M.ndim != 2:
        raise ValueError("expected a 2-d array")
    m, n = M.shape
    # phase 1: pivots on unit entries; repeat scans since eliminations can
    # create units in columns already passed over
    unit_rows, unit_pivots = [], []
    active = list(range(m))
    while True:
        found = None
        for j in range(n):
            if j in unit_pivots:
                continue
            for i in active:
                if M[i, j] % 2:
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            break
        i, j = found
        if M[i, j] == 3:
            M[i] = (3 * M[i]) % 4
        for t in range(m):
            if t != i and M[t, j]:
                M[t] = (M[t] - M[t, j] * M[i]) % 4
        active.remove(i)
        unit_rows.append(i)
        unit_pivots.append(j)
    # phase 2: remaining rows are all even; GF(2) elimination on their halves
    two_rows, two_pivots = [], []
    even = list(active)
    for j in range(n):
        pivot = next((i for i in active if M[i, j] == 2), None)
        if pivot is None:
            continue
        for t in even:
            if t != pivot and M[t, j] == 2:
                M[t] = (M[t] - M[pivot]) % 4
        for t in unit_rows:
            # normalise unit rows to {0,1} in this column
            if M[t, j] >= 2:
                M[t] = (M[t] - M[pivot]) % 4
        active.remove(pivot)
        two_rows.append(pivot)
        two_pivots.append(j)
    return Reduction(
        M[unit_rows].astype(np.uint8).reshape(len(unit_rows), n),
        unit_pivots,
        M[two_rows].astype(np.uint8).reshape(len(two_rows), n),
        two_pivots,
        len(active),
    )


def code_type(G: QuaternaryMatrix) -> CodeType:
    red = reduce_rows(G.rows())
    return CodeType(len(red.unit_pivots), len(red.two_pivots))


def reduced_generator(G: QuaternaryMatrix) -> QuaternaryMatrix:
    """Independent generators of the same code."""
    red = reduce_rows(G.rows())
    return QuaternaryMatrix(red.unit_rows, red.two_rows // 2, n=G.n)


def null_space(A: QuaternaryMatrix, strict: bool = True) -> QuaternaryMatrix:
    """Generator matrix of ``{c : A c^T = 0 mod 4}``.

    With ``strict`` a dependent row in ``A`` raises ``DependentRowsError``.
    """
    n = A.n
    red = reduce_rows(A.rows())
    if strict and red.dropped:
        raise DependentRowsError(f"{red.dropped} dependent row(s) in check matrix")
    P1, P2 = red.unit_pivots, red.two_pivots
    free = [j for j in range(n) if j not in P1 and j not in P2]
    U = red.unit_rows.astype(np.int64)
    T = (red.two_rows // 2).astype(np.int64)

    def solve_pivots(x: np.ndarray) -> np.ndarray:
        # even rows: 2*(x[p2] + sum W x_free) = 0  ->  x[p2] = -(W x_free) mod 2 lift
        for r, p in enumerate(P2):
            s = int(T[r] @ x) - int(T[r, p] * x[p])
            x[p] = (-s) % 2
        # unit rows: x[p1] = -(rest of row . x) mod 4
        for r, p in enumerate(P1):
            s = int(U[r] @ x) - int(U[r, p] * x[p])
            x[p] = (-s) % 4
        return x

    gen4 = []
    for j in free:
        x = np.zeros(n, dtype=np.int64)
        x[j] = 1
        gen4.append(solve_pivots(x))
    gen2 = []
    for p in P2:
        x = np.zeros(n, dtype=np.int64)
        x[p] = 2
        for r, q in enumerate(P1):
            s = int(U[r] @ x) - int(U[r, q] * x[q])
            x[q] = (-s) % 4
        gen2.append(x // 2)
    return QuaternaryMatrix(
        np.array(gen4, dtype=np.int64).reshape(len(gen4), n),
        np.array(gen2, dtype=np.int64).reshape(len(gen2), n) % 2,
        n=n,
    )


def is_orthogonal(G: QuaternaryMatrix, A: QuaternaryMatrix) -> bool:
    if G.n != A.n:
        raise ValueError(f"length mismatch: {G.n} vs {A.n}")
    prod = A.rows().astype(np.int64) @ G.rows().astype(np.int64).T
    return not np.any(prod % 4)


def syndrome(A: QuaternaryMatrix, w) -> np.ndarray:
    w = z4core.as_z4(w)
    if w.size != A.n:
        raise ValueError(f"length mismatch: {w.size} vs {A.n}")
    return (A.rows().astype(np.int64) @ w.astype(np.int64)) % 4


# -- span enumeration -------------------------------------------------------


def span_enumerate(G: QuaternaryMatrix) -> Iterator[np.ndarray]:
    """Yield ``v1*G1 + 2*v2*G2`` for all (v1, v2) in lexicographic order."""
    rows = G.rows().astype(np.int64)
    ranges = [range(o) if o == 4 else range(2) for o in G.orders()]
    for coeffs in itertools.product(*ranges):
        v = np.zeros(G.n, dtype=np.int64)
        for c, row in zip(coeffs, rows):
            v += c * row
        yield (v % 4).astype(np.uint8)


def _packed_rows(G: QuaternaryMatrix) -> list[int]:
    return [z4core.pack_z4(r) for r in G.rows()]


def _multiples_table(gens: list[int], orders: list[int], n: int, dtype) -> np.ndarray:
    """All combinations of the packed generators, first generator most significant."""
    table = np.zeros(1, dtype=dtype)
    for g, order in zip(gens, orders):
        # an order-2 row is stored doubled, so its multiples are 0 and itself
        mult = np.array([z4core.packed_scale(c, g, n) for c in range(order)], dtype=dtype)
        table = z4core.packed_add(table[:, None], mult[None, :], n).ravel()
    return table


def span_packed_chunks(G: QuaternaryMatrix, chunk_log2: int = 20) -> Iterator[np.ndarray]:
    """Stream the span as packed Z4 words in the same order as ``span_enumerate``.

    Each chunk combines one coefficient choice for the leading generators
    with a precomputed table over the trailing ones.
    """
    n = G.n
    dtype = z4core.word_dtype(2 * n)
    gens = _packed_rows(G)
    orders = G.orders()
    # split so the trailing table has at most 2**chunk_log2 entries
    bits = 0
    split = len(gens)
    while split > 0:
        b = 2 if orders[split - 1] == 4 else 1
        if bits + b > chunk_log2:
            break
        bits += b
        split -= 1
    tail = _multiples_table(gens[split:], orders[split:], n, dtype)
    head = _multiples_table(gens[:split], orders[:split], n, dtype)
    for offset in head:
        if dtype is object:
            yield np.array([z4core.packed_add(int(offset), int(t), n) for t in tail], dtype=object)
        else:
            yield z4core.packed_add(tail, offset, n)

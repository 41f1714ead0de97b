"""The Hadamard family H^{r1,r2} and extended perfect family C^{r1,r2}.

Minimum distances throughout use the minimum nonzero weight.  This is exact
for additive codes: ``d_L(a, b) = wt_L(b - a)`` and ``b - a`` is again a
codeword, so the pairwise distances are precisely the nonzero weights.  The
Gray image inherits this through the isometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

import numpy as np

from . import z4core
from .qmatrix import (
    MAX_K,
    CodeType,
    QuaternaryMatrix,
    build_A,
    code_type,
    null_space,
    reduced_generator,
    span_packed_chunks,
    syndrome,
)

MATERIALIZE_LOG2 = 26


class SizeCapError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    r1: int
    r2: int

    def __post_init__(self):
        if self.r1 < 0 or self.r2 < 0:
            raise ValueError("r1 and r2 must be non-negative")

    @property
    def k(self) -> int:
        return 2 * self.r1 + self.r2 + 1

    @property
    def n(self) -> int:
        return 2 ** (2 * self.r1 + self.r2)

    @property
    def N(self) -> int:
        return 2 * self.n

    @property
    def r0(self) -> int:
        return self.r1 + 1

    def __iter__(self):
        return iter((self.r1, self.r2))


def family_params_table(k: int) -> list[FamilyParams]:
    """All (r1, r2) with 2*r1 + r2 + 1 = k, by increasing r1."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return [FamilyParams(r1, k - 1 - 2 * r1) for r1 in range((k - 1) // 2 + 1)]


@dataclass(eq=False)
class QuaternaryCode:
    """Additive subgroup of Z4^n given by a generator and/or a check matrix."""

    length: int
    generator_matrix: QuaternaryMatrix | None = None
    check: QuaternaryMatrix | None = None
    label: str = ""
    family: str | None = None
    params: FamilyParams | None = None
    _generator: QuaternaryMatrix | None = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if self.generator_matrix is None and self.check is None:
            raise ValueError("a code needs a generator or a check matrix")
        for M in (self.generator_matrix, self.check):
            if M is not None and M.n != self.length:
                raise ValueError("matrix column count differs from the code length")

    @property
    def generator(self) -> QuaternaryMatrix:
        if self.generator_matrix is not None:
            return self.generator_matrix
        if self._generator is None:
            self._generator = null_space(self.check)
        return self._generator

    @cached_property
    def declared_type(self) -> CodeType:
        return code_type(self.generator)

    @property
    def log2_cardinality(self) -> int:
        return self.declared_type.log2_size

    @property
    def cardinality(self) -> int:
        return 2**self.log2_cardinality

    def packed_chunks(self, chunk_log2: int = 20) -> Iterator[np.ndarray]:
        """Stream codewords as packed Z4 words (see ``z4core``).

        The generator is reduced first so no codeword repeats.
        """
        return span_packed_chunks(reduced_generator(self.generator), chunk_log2)

    def codewords(self) -> np.ndarray:
        """All codewords as an ``(|C|, n)`` uint8 array."""
        self._require_materializable(16)
        packed = np.concatenate(list(self.packed_chunks()))
        return np.array([z4core.unpack_z4(int(p), self.length) for p in packed], dtype=np.uint8).reshape(
            len(packed), self.length
        )

    def packed_set(self) -> frozenset[int]:
        self._require_materializable(20)
        return frozenset(int(p) for chunk in self.packed_chunks() for p in chunk)

    def _require_materializable(self, log2_cap: int) -> None:
        if self.log2_cardinality > log2_cap:
            raise SizeCapError(f"{self.label or 'code'} has 2^{self.log2_cardinality} words (cap 2^{log2_cap})")

    def __contains__(self, w) -> bool:
        return contains(self, w)

    def __repr__(self) -> str:
        return f"QuaternaryCode({self.label or 'n=%d' % self.length}, type {self.declared_type})"


def _check_cap(p: FamilyParams, max_k: int) -> None:
    if p.k > max_k:
        raise SizeCapError(f"k = {p.k} exceeds the cap {max_k}")


def hadamard_code(p: FamilyParams | tuple, max_k: int = MAX_K) -> QuaternaryCode:
    p = FamilyParams(*p)
    _check_cap(p, max_k)
    A = build_A(p.r1, p.r2, max_k)
    return QuaternaryCode(p.n, generator_matrix=A, label=f"H^{p.r1},{p.r2}", family="H", params=p)


def perfect_code(p: FamilyParams | tuple, max_k: int = MAX_K) -> QuaternaryCode:
    p = FamilyParams(*p)
    _check_cap(p, max_k)
    A = build_A(p.r1, p.r2, max_k)
    return QuaternaryCode(p.n, check=A, label=f"C^{p.r1},{p.r2}", family="C", params=p)


def family_code(family: str, p: FamilyParams | tuple, max_k: int = MAX_K) -> QuaternaryCode:
    if family == "H":
        return hadamard_code(p, max_k)
    if family == "C":
        return perfect_code(p, max_k)
    raise ValueError(f"unknown family {family!r} (expected 'H' or 'C')")


def contains(C: QuaternaryCode, w) -> bool:
    w = z4core.as_z4(w)
    if w.size != C.length:
        raise ValueError(f"length mismatch: {w.size} vs {C.length}")
    if C.check is not None:
        return not syndrome(C.check, w).any()
    G = C.generator
    # w is in span(G) iff adding it leaves the type unchanged
    extended = QuaternaryMatrix(np.vstack([G.block1, w[None, :]]), G.block2, n=C.length)
    return code_type(extended).log2_size == C.log2_cardinality


class BinaryCode:
    """Binary code of length N, held either as explicit packed words or as
    the Gray image of a quaternary code streamed on demand."""

    def __init__(self, length: int, words=None, source: QuaternaryCode | None = None, label: str = ""):
        if (words is None) == (source is None):
            raise ValueError("give exactly one of words or source")
        self.length = length
        self.source = source
        self.label = label or (f"phi({source.label})" if source is not None else "")
        self._words = None
        if words is not None:
            self._words = self._normalize(words)

    def _normalize(self, words) -> np.ndarray:
        dtype = z4core.word_dtype(self.length)
        vals = sorted({int(w) for w in words})
        if vals and (vals[0] < 0 or vals[-1] >> self.length):
            raise ValueError(f"word does not fit length {self.length}")
        return np.array(vals, dtype=dtype)

    @classmethod
    def from_bits(cls, rows, label: str = "") -> "BinaryCode":
        rows = [z4core.as_bits(r) for r in rows]
        if not rows:
            raise ValueError("cannot infer the length of an empty code")
        N = rows[0].size
        if any(r.size != N for r in rows):
            raise ValueError("all words must have the same length")
        return cls(N, words=[z4core.pack_bits(r) for r in rows], label=label)

    @property
    def log2_cardinality(self) -> float:
        if self.source is not None:
            return self.source.log2_cardinality
        return float(np.log2(len(self._words))) if len(self._words) else float("-inf")

    @property
    def cardinality(self) -> int:
        if self.source is not None:
            return self.source.cardinality
        return len(self._words)

    @property
    def explicit(self) -> bool:
        return self._words is not None

    def chunks(self, chunk_log2: int = 20) -> Iterator[np.ndarray]:
        if self._words is not None:
            step = 1 << chunk_log2
            for i in range(0, len(self._words), step):
                yield self._words[i : i + step]
            return
        n = self.source.length
        for chunk in self.source.packed_chunks(chunk_log2):
            yield z4core.packed_gray(chunk, n)

    def materialize(self, log2_cap: int = MATERIALIZE_LOG2) -> "BinaryCode":
        if self._words is None:
            if self.source.log2_cardinality > log2_cap:
                raise SizeCapError(f"{self.label} has 2^{self.source.log2_cardinality} words (cap 2^{log2_cap})")
            self._words = np.sort(np.concatenate(list(self.chunks())))
        return self

    @property
    def words(self) -> np.ndarray:
        """Sorted packed words (bit j is coordinate j)."""
        return self.materialize()._words

    def word_set(self) -> frozenset[int]:
        return frozenset(int(w) for w in self.words)

    def bits(self) -> np.ndarray:
        return np.array([z4core.unpack_bits(int(w), self.length) for w in self.words], dtype=np.uint8).reshape(
            len(self.words), self.length
        )

    def contains_packed(self, x) -> np.ndarray | bool:
        words = self.words
        x_arr = np.asarray(x, dtype=words.dtype)
        if words.dtype == object:
            s = self.word_set()
            res = np.array([int(v) in s for v in x_arr.ravel()], dtype=bool).reshape(x_arr.shape)
        else:
            idx = np.searchsorted(words, x_arr)
            idx = np.minimum(idx, len(words) - 1)
            res = words[idx] == x_arr
        return bool(res) if np.ndim(x) == 0 else res

    def __contains__(self, x) -> bool:
        if not isinstance(x, (int, np.integer)):
            x = z4core.pack_bits(z4core.as_bits(x))
        return bool(self.contains_packed(int(x)))

    def __len__(self) -> int:
        return self.cardinality

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return (
            self.length == other.length
            and self.cardinality == other.cardinality
            and np.array_equal(self.words.astype(object), other.words.astype(object))
        )

    def __repr__(self) -> str:
        return f"BinaryCode({self.label or 'N=%d' % self.length}, {self.cardinality} words)"


def binary_image(C: QuaternaryCode) -> BinaryCode:
    """Gray image of a quaternary code, streamed from its generators."""
    return BinaryCode(2 * C.length, source=C)


# -- codeword files -------------------------------------------------------------

TEXT_LOG2_CAP = 20


def code_header(family: str, r1: int, r2: int, n: int, alphabet: str, **extra) -> str:
    fields = [f"family={family}", f"r1={r1}", f"r2={r2}", f"n={n}", f"alphabet={alphabet}"]
    fields += [f"{k}={v}" for k, v in extra.items()]
    return "# z4code " + " ".join(fields)


def code_lines(C: QuaternaryCode | BinaryCode, alphabet: str) -> Iterator[str]:
    """Codewords as digit strings; quaternary codes in enumeration order,
    binary codes sorted by their packed value."""
    if alphabet not in ("quaternary", "binary"):
        raise ValueError(f"unknown alphabet {alphabet!r}")
    if C.log2_cardinality > TEXT_LOG2_CAP:
        raise SizeCapError(f"refusing to write 2^{C.log2_cardinality} codewords (cap 2^{TEXT_LOG2_CAP})")
    if isinstance(C, BinaryCode):
        if alphabet != "binary":
            raise ValueError("a binary code can only be written with alphabet=binary")
        for w in C.words:
            yield "".join(map(str, z4core.unpack_bits(int(w), C.length)))
        return
    n = C.length
    for chunk in C.packed_chunks():
        for p in chunk:
            if alphabet == "quaternary":
                yield "".join(map(str, z4core.unpack_z4(int(p), n)))
            else:
                yield "".join(map(str, z4core.unpack_bits(int(z4core.packed_gray(int(p), n)), 2 * n)))


def parse_code_text(text: str) -> tuple[dict[str, str], list[np.ndarray]]:
    """Read a codeword file back into its header fields and digit rows."""
    header = None
    rows = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        if ln.startswith("# z4code"):
            header = dict(kv.split("=", 1) for kv in ln.split()[2:])
        elif not ln.startswith("#"):
            rows.append(np.array([int(ch) for ch in ln], dtype=np.uint8))
    if header is None:
        raise ValueError("missing '# z4code' header")
    width = int(header["n"]) * (2 if header["alphabet"] == "binary" else 1)
    limit = 1 if header["alphabet"] == "binary" else 3
    for r in rows:
        if r.size != width or (r.size and r.max() > limit):
            raise ValueError("codeword does not match the header")
    return header, rows

"""Equivalence invariants: kernel, rank, minimum distance, linearity,
weight distribution, and the even/odd coordinate projections."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import numpy as np

from . import z4core
from .codefam import BinaryCode, QuaternaryCode, SizeCapError

KERNEL_LOG2_CAP = 16
PAIRWISE_LOG2_CAP = 12


class IdentityGateError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def identity_gate() -> bool:
    """The generator-span rank relies on the Gray addition identity; refuse
    to run it unless the identity holds on every pair of Z4 scalars."""
    if not z4core.check_gray_addition_identity():
        raise IdentityGateError("Gray addition identity failed; generator_span rank is unusable")
    return True


# -- GF(2) elimination on packed words ---------------------------------------


def _bit(p: int, like):
    return np.uint64(p) if isinstance(like, np.ndarray) and like.dtype == np.uint64 else p


class GF2Basis:
    """Echelon basis of packed binary vectors, pivot = highest set bit."""

    def __init__(self):
        self.vectors: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.vectors)

    def reduce(self, v: int) -> int:
        for p in sorted(self.vectors, reverse=True):
            if (v >> p) & 1:
                v ^= self.vectors[p]
        return v

    def add(self, v: int) -> bool:
        v = self.reduce(int(v))
        if not v:
            return False
        self.vectors[v.bit_length() - 1] = v
        return True

    def reduce_array(self, arr: np.ndarray) -> np.ndarray:
        arr = arr.copy()
        for p in sorted(self.vectors, reverse=True):
            self._apply(arr, p, self.vectors[p])
        return arr

    @staticmethod
    def _apply(arr: np.ndarray, p: int, v: int) -> None:
        if arr.dtype == object:
            for i, w in enumerate(arr):
                if (w >> p) & 1:
                    arr[i] = w ^ v
        else:
            arr ^= ((arr >> np.uint64(p)) & np.uint64(1)) * np.uint64(v)

    def absorb(self, arr: np.ndarray) -> None:
        """Add every vector of ``arr`` to the span."""
        work = self.reduce_array(arr)
        while True:
            nz = np.flatnonzero(work != 0)
            if nz.size == 0:
                return
            v = int(work[nz[0]])
            p = v.bit_length() - 1
            self.vectors[p] = v
            work = work[nz]
            self._apply(work, p, v)


def gf2_rank(vectors: Iterable[int]) -> int:
    basis = GF2Basis()
    for v in vectors:
        basis.add(v)
    return len(basis)


# -- rank -------------------------------------------------------------------


def rank(C: BinaryCode, strategy: str = "enumeration") -> int:
    """Dimension of the Z2-span of the code.

    ``enumeration`` eliminates over every codeword; ``generator_span``
    works from the generators of the underlying quaternary code, using
    ``phi(a+b) = phi(a) ^ phi(b) ^ phi(2*(odd(a) & odd(b)))``: the span is
    generated by ``phi(g)``, ``phi(2*odd(g))`` and ``phi(2*(odd(g) & odd(h)))``
    over generators g, h.
    """
    if strategy == "enumeration":
        if C.log2_cardinality > 26:
            raise SizeCapError(f"{C.label}: 2^{C.log2_cardinality} words exceed the enumeration cap")
        basis = GF2Basis()
        for chunk in C.chunks():
            basis.absorb(chunk)
            if len(basis) == C.length:
                break
        return len(basis)
    if strategy == "generator_span":
        if C.source is None:
            raise ValueError("generator_span needs a code given as a Gray image")
        identity_gate()
        return gf2_rank(gray_span_generators(C.source))
    raise ValueError(f"unknown rank strategy {strategy!r}")


def gray_span_generators(Q: QuaternaryCode) -> list[int]:
    n = Q.length
    gens = [z4core.pack_z4(r) for r in Q.generator.rows()]
    odds = [z4core.packed_odd(g, n) for g in gens]

    def double(z: int) -> int:
        # phi(2z) = (z, z)
        return z | (z << n)

    out = [z4core.packed_gray(g, n) for g in gens]
    for i, a in enumerate(odds):
        for b in odds[i:]:
            if a & b:
                out.append(double(a & b))
    return out


# -- distances and weights ----------------------------------------------------


def _weights(code) -> Iterable[np.ndarray]:
    if isinstance(code, QuaternaryCode):
        for chunk in code.packed_chunks():
            yield z4core.packed_lee_weight(chunk, code.length)
    elif isinstance(code, BinaryCode):
        for chunk in code.chunks():
            yield z4core.popcount(chunk)
    else:
        raise TypeError(f"expected a QuaternaryCode or BinaryCode, got {type(code).__name__}")


def min_distance(code) -> int:
    """Lee distance for quaternary codes, Hamming for binary codes; computed
    as the minimum nonzero weight (the codes here are additive / Gray images
    of additive codes).  Returns 0 for a one-word code."""
    best = None
    for w in _weights(code):
        w = w[w > 0]
        if w.size:
            m = int(w.min())
            best = m if best is None else min(best, m)
    return 0 if best is None else best


def min_distance_pairwise(code) -> int:
    """Brute-force minimum over all pairs of distinct codewords."""
    if code.cardinality > 2**PAIRWISE_LOG2_CAP:
        raise SizeCapError("pairwise scan limited to 2^12 words")
    if code.cardinality < 2:
        return 0
    if isinstance(code, QuaternaryCode):
        words = code.codewords().astype(np.int64)
        diff = (words[:, None, :] - words[None, :, :]) % 4
        d = z4core.LEE[diff].sum(axis=2)
    else:
        words = code.bits()
        d = (words[:, None, :] ^ words[None, :, :]).sum(axis=2)
    np.fill_diagonal(d, np.iinfo(d.dtype).max)
    return int(d.min())


def weight_distribution(code) -> dict[int, int]:
    hist: Counter = Counter()
    for w in _weights(code):
        vals, counts = np.unique(w, return_counts=True)
        hist.update(dict(zip(vals.tolist(), counts.tolist())))
    return dict(sorted(hist.items()))


# -- kernel and linearity ---------------------------------------------------


def kernel(H: BinaryCode) -> BinaryCode:
    """``{x : x ^ H = H}``; requires the zero word in H, so the kernel lies
    inside H and is a linear subcode."""
    if H.log2_cardinality > KERNEL_LOG2_CAP:
        raise SizeCapError(f"kernel limited to 2^{KERNEL_LOG2_CAP} words")
    words = H.words
    if not H.contains_packed(0):
        raise ValueError("kernel computation requires the zero word in the code")
    found = GF2Basis()
    bad_cosets: set[int] = set()
    sample = words[: min(len(words), 64)]
    members = []
    for x in words:
        x = int(x)
        r = found.reduce(x)
        if r == 0:
            members.append(x)
            continue
        if r in bad_cosets:
            continue
        xv = _bit(x, words)
        if H.contains_packed(sample ^ xv).all() and H.contains_packed(words ^ xv).all():
            found.add(x)
            members.append(x)
            # representatives of bad cosets change with the basis
            bad_cosets = {found.reduce(b) for b in bad_cosets}
        else:
            bad_cosets.add(r)
    return BinaryCode(H.length, words=members, label=f"kernel({H.label})")


def is_linear(C: BinaryCode) -> bool:
    """Closed under XOR; tested as ``|C| = 2^rank(C)``, which forces C to be
    its own span."""
    size = C.cardinality
    if size & (size - 1):
        return False
    return rank(C) == size.bit_length() - 1


# -- projections ---------------------------------------------------------------


def _project(C: BinaryCode, offset: int) -> BinaryCode:
    N = C.length
    if N % 2:
        raise ValueError("projection needs an even length")
    half = N // 2
    other = sum(1 << j for j in range(1 - offset, N, 2))
    out = []
    for chunk in C.chunks():
        keep = chunk[(chunk & _bit(other, chunk)) == 0]
        if keep.size == 0:
            continue
        if keep.dtype == object:
            proj = [sum(((int(w) >> (2 * i + offset)) & 1) << i for i in range(half)) for w in keep]
        else:
            proj = np.zeros_like(keep)
            for i in range(half):
                proj |= ((keep >> np.uint64(2 * i + offset)) & np.uint64(1)) << np.uint64(i)
        out.extend(int(v) for v in proj)
    side = "even" if offset == 0 else "odd"
    return BinaryCode(half, words=out, label=f"{side}({C.label})")


def even_projection(C: BinaryCode) -> BinaryCode:
    """Words ``(c0, c2, ...)`` such that ``(c0, 0, c2, 0, ...)`` lies in C."""
    return _project(C, 0)


def odd_projection(C: BinaryCode) -> BinaryCode:
    """Words ``(c1, c3, ...)`` such that ``(0, c1, 0, c3, ...)`` lies in C."""
    return _project(C, 1)


# -- reports -------------------------------------------------------------------


@dataclass
class InvariantReport:
    cardinality: int
    min_distance: int
    linear: bool
    kernel_size: int | None = None
    rank: int | None = None
    weight_distribution: dict[int, int] | None = field(default=None)

    def to_lines(self) -> list[str]:
        lines = [f"cardinality={self.cardinality}", f"min_distance={self.min_distance}"]
        if self.kernel_size is not None:
            lines.append(f"kernel_size={self.kernel_size}")
        if self.rank is not None:
            lines.append(f"rank={self.rank}")
        lines.append(f"linear={str(self.linear).lower()}")
        if self.weight_distribution is not None:
            wd = ",".join(f"{w}:{c}" for w, c in self.weight_distribution.items())
            lines.append(f"weight_distribution={wd}")
        return lines

    def to_line(self) -> str:
        return " ".join(self.to_lines())

    @classmethod
    def from_line(cls, line: str) -> "InvariantReport":
        kv = dict(item.split("=", 1) for item in line.split())
        wd = None
        if "weight_distribution" in kv:
            wd = {int(a): int(b) for a, b in (p.split(":") for p in kv["weight_distribution"].split(",") if p)}
        return cls(
            cardinality=int(kv["cardinality"]),
            min_distance=int(kv["min_distance"]),
            linear=kv["linear"] == "true",
            kernel_size=int(kv["kernel_size"]) if "kernel_size" in kv else None,
            rank=int(kv["rank"]) if "rank" in kv else None,
            weight_distribution=wd,
        )


def invariant_report(
    C: BinaryCode,
    with_kernel: bool = True,
    with_rank: bool = True,
    with_weights: bool = True,
    rank_strategy: str = "enumeration",
) -> InvariantReport:
    r = rank(C, rank_strategy) if with_rank else None
    size = C.cardinality
    if r is not None:
        linear = not (size & (size - 1)) and r == size.bit_length() - 1
    else:
        linear = is_linear(C)
    return InvariantReport(
        cardinality=size,
        min_distance=min_distance(C),
        linear=linear,
        kernel_size=kernel(C).cardinality if with_kernel else None,
        rank=r,
        weight_distribution=weight_distribution(C) if with_weights else None,
    )

"""Recurrent doubling / quadrupling of quaternary codes and invariant
comparison of codes that should be equivalent."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codefam import FamilyParams, QuaternaryCode, binary_image, hadamard_code
from .invariants import kernel, min_distance, rank, weight_distribution
from .qmatrix import MAX_K, QuaternaryMatrix


@dataclass(frozen=True)
class RepetitionCode:
    length: int
    order: int

    def __post_init__(self):
        if self.order not in (2, 4):
            raise ValueError("repetition order must be 2 or 4")

    def code(self) -> QuaternaryCode:
        ones = np.ones((1, self.length), dtype=np.uint8)
        if self.order == 4:
            G = QuaternaryMatrix(ones, n=self.length)
        else:
            G = QuaternaryMatrix(block2=ones, n=self.length)
        return QuaternaryCode(self.length, generator_matrix=G, label=f"R{self.order}({self.length})")


def _tile(block: np.ndarray, times: int) -> np.ndarray:
    return np.tile(block, (1, times))


def plotkin_double(H: QuaternaryCode) -> QuaternaryCode:
    """``{(a, a + b) : a in H, b in {0...0, 2...2}}``."""
    G, n = H.generator, H.length
    extra = np.concatenate([np.zeros(n, dtype=np.uint8), np.ones(n, dtype=np.uint8)])[None, :]
    M = QuaternaryMatrix(_tile(G.block1, 2), np.vstack([_tile(G.block2, 2), extra]), n=2 * n)
    return QuaternaryCode(2 * n, generator_matrix=M, label=f"D({H.label})")


def quadruple(H: QuaternaryCode) -> QuaternaryCode:
    """``{(a, a+b, a+2b, a+3b) : a in H, b in {0...0, 1...1, 2...2, 3...3}}``."""
    G, n = H.generator, H.length
    extra = np.repeat(np.arange(4, dtype=np.uint8), n)[None, :]
    M = QuaternaryMatrix(np.vstack([_tile(G.block1, 4), extra]), _tile(G.block2, 4), n=4 * n)
    return QuaternaryCode(4 * n, generator_matrix=M, label=f"Q({H.label})")


def recurrent_build(p: FamilyParams | tuple, max_k: int = MAX_K, doubling_first: bool = False) -> QuaternaryCode:
    """Start from H^{0,0} = {0,1,2,3}; quadruple r1 times, then double r2 times.

    With ``doubling_first`` the two stages swap; that order reproduces the
    lexicographic column order of A^{r1,r2} exactly.
    """
    p = FamilyParams(*p)
    if p.k > max_k:
        raise ValueError(f"k = {p.k} exceeds the cap {max_k}")
    code = hadamard_code((0, 0))
    steps = [quadruple] * p.r1 + [plotkin_double] * p.r2
    if doubling_first:
        steps.reverse()
    for step in steps:
        code = step(code)
    code.label = f"R^{p.r1},{p.r2}"
    return code


def same_codewords(c1: QuaternaryCode, c2: QuaternaryCode) -> bool:
    return c1.length == c2.length and c1.packed_set() == c2.packed_set()


@dataclass
class CodeProfile:
    length: int
    cardinality: int
    min_lee_distance: int
    kernel_size: int | None
    rank: int
    lee_weights: dict[int, int]


@dataclass
class MatchReport:
    first: CodeProfile
    second: CodeProfile
    mismatches: list[str]

    @property
    def all_match(self) -> bool:
        return not self.mismatches


def profile(C: QuaternaryCode, with_kernel: bool = True) -> CodeProfile:
    B = binary_image(C)
    return CodeProfile(
        length=C.length,
        cardinality=C.cardinality,
        min_lee_distance=min_distance(C),
        kernel_size=kernel(B).cardinality if with_kernel else None,
        rank=rank(B),
        lee_weights=weight_distribution(C),
    )


def equivalence_invariant_match(c1: QuaternaryCode, c2: QuaternaryCode, with_kernel: bool = True) -> MatchReport:
    """Compare invariants preserved by monomial equivalence.  A mismatch
    proves the codes inequivalent; agreement is only evidence."""
    a, b = profile(c1, with_kernel), profile(c2, with_kernel)
    names = ["length", "cardinality", "min_lee_distance", "kernel_size", "rank", "lee_weights"]
    return MatchReport(a, b, [f for f in names if getattr(a, f) != getattr(b, f)])

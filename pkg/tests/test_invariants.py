import itertools

import numpy as np
import pytest

from z4codes import z4core
from z4codes.codefam import BinaryCode, SizeCapError, binary_image, family_params_table, hadamard_code, perfect_code
from z4codes.invariants import (
    GF2Basis,
    InvariantReport,
    even_projection,
    gray_span_generators,
    invariant_report,
    is_linear,
    kernel,
    min_distance,
    min_distance_pairwise,
    odd_projection,
    rank,
    weight_distribution,
)


def bit_rows(B: BinaryCode) -> np.ndarray:
    return B.bits()


def oracle_rank(rows: np.ndarray) -> int:
    """Row reduction of a 0/1 matrix over GF(2)."""
    M = (np.array(rows, dtype=np.uint8) % 2).copy()
    r = 0
    for j in range(M.shape[1]):
        piv = next((i for i in range(r, M.shape[0]) if M[i, j]), None)
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        below = M[:, j].astype(bool)
        below[r] = False
        M[below] ^= M[r]
        r += 1
    return r


def oracle_kernel(rows: np.ndarray) -> set[tuple]:
    """All x in E^N with x + C = C, by exhaustive search over E^N."""
    N = rows.shape[1]
    code = {tuple(r) for r in rows.tolist()}
    out = set()
    for x in itertools.product((0, 1), repeat=N):
        xa = np.array(x, dtype=np.uint8)
        if all(tuple((xa ^ r).tolist()) in code for r in rows):
            out.add(x)
    return out


def oracle_projection(rows: np.ndarray, offset: int) -> set[tuple]:
    out = set()
    for r in rows.tolist():
        if all(v == 0 for v in r[1 - offset :: 2]):
            out.add(tuple(r[offset::2]))
    return out


SMALL = [(0, 1), (0, 2), (1, 0), (0, 3), (1, 1)]


@pytest.mark.parametrize("family", [hadamard_code, perfect_code])
@pytest.mark.parametrize("p", SMALL)
def test_rank_matches_oracle(family, p):
    B = binary_image(family(p))
    expected = oracle_rank(bit_rows(B))
    assert rank(B) == expected
    assert rank(B, "generator_span") == expected


def test_rank_named_values_small():
    assert rank(binary_image(perfect_code((1, 1)))) == 13
    assert rank(binary_image(perfect_code((0, 3)))) == 11
    assert rank(BinaryCode(8, words=[0])) == 0


def test_rank_bad_strategy():
    with pytest.raises(ValueError):
        rank(binary_image(perfect_code((0, 1))), "magic")
    with pytest.raises(ValueError):
        rank(BinaryCode(4, words=[0, 3]), "generator_span")


@pytest.mark.parametrize("k", range(1, 8))
def test_rank_strategies_agree_on_hadamard(k):
    for p in family_params_table(k):
        B = binary_image(hadamard_code(p))
        assert rank(B) == rank(B, "generator_span")


def test_gray_span_generators_lie_in_span():
    C = perfect_code((1, 0))
    B = binary_image(C)
    base = rank(B)
    basis = GF2Basis()
    for w in B.words:
        basis.add(int(w))
    for g in gray_span_generators(C):
        assert basis.reduce(g) == 0
    assert len(basis) == base


@pytest.mark.parametrize("p", [(0, 1), (0, 2), (1, 0), (0, 3)])
def test_kernel_matches_exhaustive_oracle(p):
    B = binary_image(hadamard_code(p))
    expected = oracle_kernel(bit_rows(B))
    assert {tuple(r) for r in kernel(B).bits().tolist()} == expected


def test_kernel_of_nonlinear_code_oracle():
    # H^{2,0} at N = 32 is too long for an E^N sweep; check x + H = H directly
    B = binary_image(hadamard_code((2, 0)))
    words = {int(w) for w in B.words}
    expected = {x for x in words if all((x ^ h) in words for h in words)}
    K = kernel(B)
    assert {int(w) for w in K.words} == expected
    assert K.cardinality == 16


def test_kernel_small_cases():
    assert kernel(BinaryCode(4, words=[0])).words.tolist() == [0]
    B = binary_image(hadamard_code((1, 1)))
    assert kernel(B) == B.materialize()
    with pytest.raises(ValueError):
        kernel(BinaryCode(3, words=[1, 2]))


def test_kernel_of_nonadditive_code_with_zero():
    B = BinaryCode(3, words=[0b000, 0b011, 0b101, 0b110, 0b111])
    rows = B.bits()
    expected = oracle_kernel(rows)
    assert {tuple(r) for r in kernel(B).bits().tolist()} == expected


def test_min_distance_examples():
    assert min_distance(hadamard_code((1, 1))) == 8
    assert min_distance(perfect_code((1, 1))) == 4
    assert min_distance(binary_image(hadamard_code((1, 0)))) == 4


@pytest.mark.parametrize("p", SMALL)
def test_min_distance_matches_pairwise(p):
    for C in (hadamard_code(p), perfect_code(p)):
        assert min_distance(C) == min_distance_pairwise(C)
        B = binary_image(C)
        assert min_distance(B) == min_distance_pairwise(B) == min_distance(C)


def test_pairwise_cap():
    with pytest.raises(SizeCapError):
        min_distance_pairwise(binary_image(perfect_code((0, 4))))


@pytest.mark.parametrize("p", [(0, 1), (1, 0), (0, 2)])
def test_distance_multiset_is_scaled_weight_distribution(p):
    C = hadamard_code(p)
    words = C.codewords().astype(np.int64)
    diff = (words[:, None, :] - words[None, :, :]) % 4
    d = z4core.LEE[diff].sum(axis=2).ravel()
    vals, counts = np.unique(d, return_counts=True)
    wd = weight_distribution(C)
    assert dict(zip(vals.tolist(), counts.tolist())) == {w: c * C.cardinality for w, c in wd.items()}


def test_weight_distribution_examples():
    assert weight_distribution(hadamard_code((0, 0))) == {0: 1, 1: 2, 2: 1}
    assert weight_distribution(BinaryCode(5, words=[0])) == {0: 1}
    B = binary_image(hadamard_code((1, 0)))
    brute = {}
    for r in B.bits().tolist():
        brute[sum(r)] = brute.get(sum(r), 0) + 1
    assert weight_distribution(B) == brute == {0: 1, 4: 14, 8: 1}


def test_is_linear_examples():
    assert is_linear(binary_image(hadamard_code((0, 3))))
    assert not is_linear(binary_image(hadamard_code((2, 0))))
    assert is_linear(BinaryCode(4, words=[0]))
    assert not is_linear(BinaryCode(3, words=[0, 1, 2]))


@pytest.mark.parametrize("k", range(1, 8))
def test_linearity_split(k):
    for p in family_params_table(k):
        B = binary_image(hadamard_code(p))
        assert is_linear(B) == (p.r1 <= 1)
        # independent route: closure under XOR
        words = {int(w) for w in B.words}
        closed = all((a ^ b) in words for a in words for b in words)
        assert closed == (p.r1 <= 1)


@pytest.mark.parametrize("p", [(0, 1), (0, 2), (1, 0), (0, 3), (1, 1)])
def test_projections_match_definition(p):
    B = binary_image(perfect_code(p))
    rows = B.bits()
    assert {tuple(r) for r in even_projection(B).bits().tolist()} == oracle_projection(rows, 0)
    assert {tuple(r) for r in odd_projection(B).bits().tolist()} == oracle_projection(rows, 1)


def test_projection_examples():
    B = binary_image(perfect_code((1, 1)))
    assert even_projection(B) == binary_image(perfect_code((1, 0))).materialize()
    B = binary_image(perfect_code((1, 0)))
    assert even_projection(B) == binary_image(perfect_code((0, 1))).materialize()
    Z = BinaryCode(6, words=[0])
    assert even_projection(Z).length == 3 and even_projection(Z).words.tolist() == [0]
    with pytest.raises(ValueError):
        odd_projection(BinaryCode(3, words=[0]))


def test_projection_of_long_words():
    # N = 128 uses object arrays of Python ints
    B = binary_image(hadamard_code((3, 0)))
    P = even_projection(B)
    assert P.length == 64
    rows = B.bits()
    assert {tuple(r) for r in P.bits().tolist()} == oracle_projection(rows, 0)


def test_invariant_report_roundtrip():
    rep = invariant_report(binary_image(hadamard_code((2, 0))))
    assert (rep.cardinality, rep.min_distance, rep.kernel_size, rep.linear) == (64, 16, 16, False)
    assert InvariantReport.from_line(rep.to_line()) == rep
    assert "kernel_size=16" in rep.to_lines()

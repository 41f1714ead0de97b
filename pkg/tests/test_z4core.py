import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from z4codes import z4core
from z4codes.z4core import (
    gray_inverse,
    gray_map,
    hamming_distance,
    lee_distance,
    lee_weight,
    negate,
)

z4_words = st.integers(1, 64).flatmap(lambda n: st.lists(st.integers(0, 3), min_size=n, max_size=n))


def z4_pair():
    return st.integers(1, 64).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(0, 3), min_size=n, max_size=n),
            st.lists(st.integers(0, 3), min_size=n, max_size=n),
        )
    )


@pytest.mark.parametrize(
    "w, expected",
    [((1, 3), 2), ((0,), 0), ((0, 0, 0, 0), 0), ((2, 2, 1), 5)],
)
def test_lee_weight(w, expected):
    assert lee_weight(w) == expected


def test_lee_distance_examples():
    assert lee_distance((0, 0), (1, 3)) == 2
    assert lee_distance((1, 2, 3), (1, 2, 3)) == 0
    assert lee_distance((1,), (3,)) == 2


def test_lee_distance_length_mismatch():
    with pytest.raises(ValueError):
        lee_distance((0, 1), (1,))


def test_hamming_distance_examples():
    assert hamming_distance((0, 0, 1, 1), (0, 1, 1, 0)) == 2
    x = np.array([1, 0, 1, 1, 0])
    assert hamming_distance(x, x) == 0
    assert hamming_distance(x, 1 - x) == 5
    with pytest.raises(ValueError):
        hamming_distance((0, 1), (0, 1, 1))


def test_gray_map_table():
    assert gray_map((2,)).tolist() == [1, 1]
    assert gray_map((0, 0, 0)).tolist() == [0] * 6
    assert gray_map((0, 1, 2, 3)).tolist() == [0, 0, 1, 1, 0, 1, 1, 0]


def test_gray_inverse_examples():
    assert gray_inverse((1, 1)).tolist() == [2]
    assert gray_inverse((0, 0, 0, 0)).tolist() == [0, 0]
    assert gray_inverse((0, 0, 1, 1, 0, 1, 1, 0)).tolist() == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        gray_inverse((0, 1, 1))


def test_invalid_symbols_rejected():
    with pytest.raises(ValueError):
        lee_weight((4,))
    with pytest.raises(ValueError):
        gray_inverse((2, 0))


def test_negate_examples():
    assert negate((1,)).tolist() == [3]
    assert negate((0, 2)).tolist() == [0, 2]


def test_negation_swaps_gray_halves_per_scalar():
    for c in range(4):
        g = gray_map((c,))
        assert gray_map(negate((c,))).tolist() == [g[1], g[0]]
    w = (0, 1, 2, 3)
    g = gray_map(w)
    assert gray_map(negate(w)).tolist() == np.concatenate([g[4:], g[:4]]).tolist()


def test_addition_identity_exhaustive():
    for a, b in itertools.product(range(4), repeat=2):
        assert not z4core.gray_addition_defect([a], [b]).any(), (a, b)
    assert z4core.check_gray_addition_identity()


@given(z4_pair())
def test_gray_isometry(pair):
    a, b = pair
    assert lee_distance(a, b) == hamming_distance(gray_map(a), gray_map(b))


@given(z4_words)
def test_gray_roundtrip(w):
    assert gray_inverse(gray_map(w)).tolist() == list(w)


@given(st.integers(1, 32).flatmap(lambda n: st.lists(st.integers(0, 1), min_size=2 * n, max_size=2 * n)))
def test_gray_roundtrip_binary(x):
    assert gray_map(gray_inverse(x)).tolist() == list(x)


@given(z4_words)
def test_double_sum_is_zero_and_three_is_negation(w):
    ww = z4core.add(w, w)
    assert not z4core.add(ww, ww).any()
    assert z4core.scale(3, w).tolist() == negate(w).tolist()


@given(z4_pair())
def test_lee_distance_symmetric(pair):
    a, b = pair
    assert lee_distance(a, b) == lee_distance(b, a)
    assert 0 <= lee_weight(a) <= 2 * len(a)


@given(z4_pair(), st.data())
def test_lee_triangle(pair, data):
    a, b = pair
    c = data.draw(st.lists(st.integers(0, 3), min_size=len(a), max_size=len(a)))
    assert lee_distance(a, c) <= lee_distance(a, b) + lee_distance(b, c)


@given(z4_pair())
def test_packed_ops_agree_with_arrays(pair):
    a, b = pair
    n = len(a)
    pa, pb = z4core.pack_z4(a), z4core.pack_z4(b)
    assert z4core.unpack_z4(pa, n).tolist() == list(a)
    assert z4core.unpack_z4(z4core.packed_add(pa, pb, n), n).tolist() == z4core.add(a, b).tolist()
    assert z4core.unpack_z4(z4core.packed_negate(pa, n), n).tolist() == negate(a).tolist()
    assert z4core.packed_lee_weight(pa, n) == lee_weight(a)
    gray = z4core.packed_gray(pa, n)
    assert z4core.unpack_bits(gray, 2 * n).tolist() == gray_map(a).tolist()
    assert z4core.packed_gray_inverse(gray, n) == pa


def test_packed_ops_on_uint64_arrays():
    rng = np.random.default_rng(1)
    n = 16
    words = rng.integers(0, 4, size=(200, n))
    packed = np.array([z4core.pack_z4(w) for w in words], dtype=np.uint64)
    lee = z4core.packed_lee_weight(packed, n)
    assert lee.tolist() == [lee_weight(w) for w in words]
    gray = z4core.packed_gray(packed, n)
    assert z4core.popcount(gray).tolist() == lee.tolist()

"""Tests for the Lyndon (lexicographic) baseline used in comparisons."""

import pytest
from hypothesis import given

from galois_words import (
    EmptyInputError,
    LyndonFactorization,
    NotPrimitiveError,
    duval_factorize,
    galois_rotation,
    lyndon_rotation,
)
from galois_words.oracles import is_primitive

from helpers import small_words, words_upto


def is_lyndon(w: bytes) -> bool:
    return len(w) > 0 and all(w < w[i:] for i in range(1, len(w)))


def rotate(w: bytes, start: int) -> bytes:
    return w[start - 1 :] + w[: start - 1]


def test_duval_examples():
    assert duval_factorize(b"").spans == ()
    assert duval_factorize(b"aab").spans == ((1, 3),)  # aab is Lyndon as a whole
    assert duval_factorize(b"aba").spans == ((1, 2), (3, 1))
    assert duval_factorize(b"bba").spans == ((1, 1), (2, 1), (3, 1))
    assert duval_factorize(b"banana").words(b"banana") == [b"b", b"an", b"an", b"a"]


def test_duval_returns_lyndon_factorization_type():
    fz = duval_factorize(b"aba")
    assert isinstance(fz, LyndonFactorization)


def test_duval_well_formed_exhaustive():
    for w in words_upto(b"ab", 10):
        parts = duval_factorize(w).words(w)
        assert b"".join(parts) == w
        for part in parts:
            assert is_lyndon(part), (w, part)
        for a, b in zip(parts, parts[1:]):
            assert a >= b, w


@given(small_words(max_size=128, max_sigma=8))
def test_duval_well_formed_random(w):
    parts = duval_factorize(w).words(w)
    assert b"".join(parts) == w
    assert all(is_lyndon(p) for p in parts)
    assert all(a >= b for a, b in zip(parts, parts[1:]))


def test_lyndon_rotation_examples():
    assert lyndon_rotation(b"aab") == 1
    assert lyndon_rotation(b"aba") == 3  # least rotation is aab
    assert lyndon_rotation(b"ba") == 2
    assert lyndon_rotation(b"a") == 1


def test_lyndon_rotation_is_least_exhaustive():
    for w in words_upto(b"ab", 9, min_len=1):
        if not is_primitive(w):
            continue
        start = lyndon_rotation(w)
        best = min(rotate(w, r) for r in range(1, len(w) + 1))
        assert rotate(w, start) == best, w
        assert is_lyndon(rotate(w, start))


def test_lyndon_rotation_errors():
    with pytest.raises(EmptyInputError):
        lyndon_rotation(b"")
    with pytest.raises(NotPrimitiveError):
        lyndon_rotation(b"abab")


def test_orders_genuinely_differ():
    # One concrete witness that the two rotation notions disagree, which is
    # the whole point of keeping the baseline around.
    assert lyndon_rotation(b"aab") == 1
    assert galois_rotation(b"aab") == 2
    assert lyndon_rotation(b"aba") == 3
    assert galois_rotation(b"aba") == 1

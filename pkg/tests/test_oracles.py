"""Self-tests for the brute-force reference implementations.

The oracles are definitional and deliberately slow; everything else in the
suite is checked against them, so they get their own sanity layer built
only from hand-checkable cases and cross-oracle consistency.
"""

import pytest

from galois_words import (
    EmptyInputError,
    InputTooLongError,
    NotPrimitiveError,
    alt_compare,
    AltOrdering,
)
from galois_words.oracles import (
    is_primitive,
    oracle_factorize,
    oracle_is_galois,
    oracle_is_pre_galois,
    oracle_periods,
    oracle_rotation,
    oracle_spref,
)

from helpers import words_upto


def test_oracle_is_galois_basics():
    assert oracle_is_galois(b"a")
    assert oracle_is_galois(b"aba")
    assert oracle_is_galois(b"abba")
    assert oracle_is_galois(b"ab")
    assert not oracle_is_galois(b"aab")  # rotation aba is smaller
    assert not oracle_is_galois(b"ba")
    assert not oracle_is_galois(b"aa")  # not primitive
    assert not oracle_is_galois(b"abaaba")
    assert not oracle_is_galois(b"")


def test_oracle_is_pre_galois_basics():
    assert oracle_is_pre_galois(b"")
    assert oracle_is_pre_galois(b"a")
    assert oracle_is_pre_galois(b"aa")
    assert oracle_is_pre_galois(b"abaab")
    assert oracle_is_pre_galois(b"aba")
    assert not oracle_is_pre_galois(b"aab")  # suffix ab is smaller than aab
    assert not oracle_is_pre_galois(b"ba")


def test_galois_implies_pre_galois_and_primitive():
    for w in words_upto(b"ab", 10, min_len=1):
        if oracle_is_galois(w):
            assert oracle_is_pre_galois(w)
            assert is_primitive(w)


def test_oracle_periods_examples():
    assert oracle_periods(b"abaaba") == (3, 6)
    assert oracle_periods(b"aa") == (1, 2)
    assert oracle_periods(b"abaab") == (3, 6)  # even period absent: 6 == len + 1
    assert oracle_periods(b"a") == (1, 2)
    assert oracle_periods(b"ab") == (3, 2)
    with pytest.raises(EmptyInputError):
        oracle_periods(b"")


def test_oracle_periods_parity_invariants():
    for w in words_upto(b"ab", 10, min_len=1):
        n = len(w)
        per_o, per_e = oracle_periods(w)
        assert per_o % 2 == 1 or per_o == n + 1
        assert per_e % 2 == 0 or per_e == n + 1
        # A word always has the period n, so the slot of n's parity is real.
        if n % 2 == 1:
            assert per_o <= n
        else:
            assert per_e <= n
        if per_o == n:
            assert is_primitive(w)


def test_oracle_spref_examples():
    assert oracle_spref(b"bba") == 2
    assert oracle_spref(b"abaab") == 3
    assert oracle_spref(b"a") == 1
    assert oracle_spref(b"abaaba") == 3  # prefix aba equals the word in the order
    assert oracle_spref(b"ababab") == 2  # even-length prefix ab already tops the word
    with pytest.raises(EmptyInputError):
        oracle_spref(b"")


def test_oracle_factorize_examples():
    assert oracle_factorize(b"").spans == ()
    assert oracle_factorize(b"aba").spans == ((1, 3),)
    assert oracle_factorize(b"aab").spans == ((1, 1), (2, 2))
    assert oracle_factorize(b"bba").spans == ((1, 1), (2, 1), (3, 1))
    assert oracle_factorize(b"abaab").spans == ((1, 3), (4, 2))
    assert oracle_factorize(b"abaab").words(b"abaab") == [b"aba", b"ab"]


def test_oracle_factorize_structure():
    for w in words_upto(b"ab", 9):
        fz = oracle_factorize(w)
        assert fz.total == len(w)
        parts = fz.words(w)
        assert b"".join(parts) == w
        for part in parts:
            assert oracle_is_galois(part)
        for a, b in zip(parts, parts[1:]):
            assert alt_compare(a, b) is not AltOrdering.LESS


def test_oracle_factorize_guard():
    with pytest.raises(InputTooLongError):
        oracle_factorize(b"a" * 17)


def test_oracle_rotation_examples():
    assert oracle_rotation(b"aab") == 2
    assert oracle_rotation(b"aba") == 1
    assert oracle_rotation(b"bba") == 3
    assert oracle_rotation(b"ba") == 2
    with pytest.raises(NotPrimitiveError):
        oracle_rotation(b"aa")
    with pytest.raises(NotPrimitiveError):
        oracle_rotation(b"abab")
    with pytest.raises(EmptyInputError):
        oracle_rotation(b"")


def test_is_primitive_basics():
    assert is_primitive(b"a")
    assert is_primitive(b"aba")
    assert is_primitive(b"aab")
    assert not is_primitive(b"aa")
    assert not is_primitive(b"abaaba")
    assert not is_primitive(b"aaaa")
    with pytest.raises(EmptyInputError):
        is_primitive(b"")


def test_spref_matches_factorization_case_split():
    # spref is the first factor length, doubled exactly when that factor has
    # odd length and repeats an even number of times without covering the word.
    for w in words_upto(b"ab", 10, min_len=1):
        fz = oracle_factorize(w)
        parts = fz.words(w)
        first = parts[0]
        mult = 1
        for part in parts[1:]:
            if part == first:
                mult += 1
            else:
                break
        expected = len(first)
        if len(first) % 2 == 1 and mult % 2 == 0 and mult < len(parts):
            expected *= 2
        assert oracle_spref(w) == expected, w

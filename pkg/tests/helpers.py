"""Shared helpers for the test suite."""

import itertools

from hypothesis import strategies as st


def words_upto(alphabet: bytes, max_len: int, min_len: int = 0):
    """Yield every word over `alphabet` with min_len <= length <= max_len."""
    for length in range(min_len, max_len + 1):
        for tup in itertools.product(alphabet, repeat=length):
            yield bytes(tup)


@st.composite
def small_words(draw, min_size=0, max_size=64, max_sigma=8):
    """Random byte words over a random small alphabet {0..sigma-1}."""
    sigma = draw(st.integers(min_value=1, max_value=max_sigma))
    symbols = st.integers(min_value=0, max_value=sigma - 1)
    return bytes(draw(st.lists(symbols, min_size=min_size, max_size=max_size)))


def rotations(word: bytes):
    return [word[i:] + word[:i] for i in range(len(word))]

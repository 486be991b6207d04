"""The alternating order on words.

Words are finite sequences of byte symbols compared through their infinite
self-repetitions: write ``S^w`` for ``S`` repeated forever.  At the first
(1-based) position where ``S^w`` and ``T^w`` differ, an odd position orders
the words ascending by symbol value and an even position orders them
descending.  If the repetitions never differ, the words are equal in this
order; that happens exactly when both are powers of one common primitive
word.  The empty word is defined to be greater than every non-empty word.

Examples over the alphabet {a, b, c}::

    aba < aab      first difference at position 2: b > a, descending
    bba < b        repetitions bbabba... vs bbbbbb... differ at position 3
    aba == abaaba  both are powers of aba

Any byte value 0-255 is a legal symbol; comparisons are numeric, with no
locale or text encoding involved.
"""

from __future__ import annotations

import enum
from typing import Union

#: Anything accepted where a word is expected.  The canonical form is
#: ``bytes``; ``str`` input is encoded as UTF-8 for convenience.
Word = Union[bytes, bytearray, memoryview, str]


def as_word(value: Word) -> bytes:
    """Return ``value`` as ``bytes``, the canonical word representation."""
    if isinstance(value, bytes):
        return value
    if isinstance(value, (bytearray, memoryview)):
        return bytes(value)
    if isinstance(value, str):
        return value.encode("utf-8")
    raise TypeError(f"cannot interpret {type(value).__name__} as a word")


class AltOrdering(enum.Enum):
    """Outcome of comparing two words in the alternating order."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


class StrictAltOrdering(enum.Enum):
    """Alternating-order outcome refined with prefix information.

    STRICTLY_LESS means the left word orders below the right one *and*
    neither word is a prefix of the other; this is the relation preserved
    by appending a common suffix to both words.  LESS_BY_PREFIX covers the
    remaining "less" cases, where one word is a proper prefix of the other.
    """

    STRICTLY_LESS = "strictly-less"
    LESS_BY_PREFIX = "less-by-prefix"
    EQUAL = "equal"
    GREATER_BY_PREFIX = "greater-by-prefix"
    STRICTLY_GREATER = "strictly-greater"

    def collapse(self) -> AltOrdering:
        """Forget the prefix refinement, recovering the plain ordering."""
        if self is StrictAltOrdering.EQUAL:
            return AltOrdering.EQUAL
        if self in (StrictAltOrdering.STRICTLY_LESS, StrictAltOrdering.LESS_BY_PREFIX):
            return AltOrdering.LESS
        return AltOrdering.GREATER


def alt_compare(s: Word, t: Word) -> AltOrdering:
    """Compare two words in the alternating order.

    >>> alt_compare(b"aba", b"aab")
    <AltOrdering.LESS: -1>
    >>> alt_compare(b"aba", b"abaaba")
    <AltOrdering.EQUAL: 0>

    The scan is bounded by ``len(s) + len(t)`` positions: if the two
    repetitions agree that far, the periodicity lemma forces them to agree
    everywhere, so EQUAL is returned without further work.
    """
    a = as_word(s)
    b = as_word(t)
    if not a or not b:
        if not a and not b:
            return AltOrdering.EQUAL
        # The empty word is greater than any non-empty word.
        return AltOrdering.GREATER if not a else AltOrdering.LESS
    la = len(a)
    lb = len(b)
    ia = ib = 0
    for k in range(la + lb):
        x = a[ia]
        y = b[ib]
        if x != y:
            if k & 1 == 0:  # odd 1-based position: ascending
                return AltOrdering.LESS if x < y else AltOrdering.GREATER
            return AltOrdering.GREATER if x < y else AltOrdering.LESS
        ia += 1
        if ia == la:
            ia = 0
        ib += 1
        if ib == lb:
            ib = 0
    return AltOrdering.EQUAL


def alt_compare_strict(s: Word, t: Word) -> StrictAltOrdering:
    """Compare two words, also reporting whether one prefixes the other.

    >>> alt_compare_strict(b"ab", b"aba")
    <StrictAltOrdering.LESS_BY_PREFIX: 'less-by-prefix'>
    >>> alt_compare_strict(b"ac", b"abac")
    <StrictAltOrdering.STRICTLY_LESS: 'strictly-less'>
    """
    a = as_word(s)
    b = as_word(t)
    order = alt_compare(a, b)
    if order is AltOrdering.EQUAL:
        # Equal words are powers of a common primitive word, so the shorter
        # one is necessarily a prefix of the longer: no refinement needed.
        return StrictAltOrdering.EQUAL
    prefix = a.startswith(b) or b.startswith(a)
    if order is AltOrdering.LESS:
        return StrictAltOrdering.LESS_BY_PREFIX if prefix else StrictAltOrdering.STRICTLY_LESS
    return StrictAltOrdering.GREATER_BY_PREFIX if prefix else StrictAltOrdering.STRICTLY_GREATER

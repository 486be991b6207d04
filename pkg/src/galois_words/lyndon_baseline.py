"""Lyndon factorization and rotation, for comparison with the Galois code.

A Lyndon word is strictly smallest among its rotations under plain
lexicographic order; Duval's algorithm tiles any word into non-increasing
Lyndon factors in linear time and constant working space.  The Galois and
Lyndon notions genuinely differ: ``aab`` is Lyndon but not Galois, and its
Galois rotation ``aba`` is not Lyndon.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._accel import kernels
from .alt_order import Word, as_word
from .errors import EmptyInputError, NotPrimitiveError
from .galois_core import FAST_THRESHOLD, Factorization, _is_primitive


@dataclass(frozen=True)
class LyndonFactorization(Factorization):
    """Tiling into Lyndon factors, non-increasing lexicographically."""


def duval_factorize(t: Word) -> LyndonFactorization:
    """The unique factorization of ``t`` into non-increasing Lyndon factors.

    >>> duval_factorize(b"bba").words(b"bba")
    [b'b', b'b', b'a']
    """
    data = as_word(t)
    n = len(data)
    if n >= FAST_THRESHOLD:
        fast = kernels()
        if fast is not None:
            raw = fast.duval_spans(data)
            return LyndonFactorization(tuple((s + 1, ln) for s, ln in raw))
    spans = []
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n and data[k] <= data[j]:
            if data[k] < data[j]:
                k = i  # still extending one Lyndon factor
            else:
                k += 1  # periodic repeat of the factor found so far
            j += 1
        while i <= k:
            spans.append((i + 1, j - k))
            i += j - k
    return LyndonFactorization(tuple(spans))


def lyndon_rotation(t: Word) -> int:
    """1-based start of the lexicographically least rotation of ``t``.

    Requires a non-empty primitive word, for which that rotation is unique.
    Uses the classic two-candidate duel over the doubled word: linear time,
    constant additional space.
    """
    data = as_word(t)
    n = len(data)
    if n == 0:
        raise EmptyInputError("the empty word has no rotations")
    if not _is_primitive(data):
        raise NotPrimitiveError("input is a proper power of a shorter word")
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        x = data[(i + k) % n]
        y = data[(j + k) % n]
        if x == y:
            k += 1
            continue
        if x > y:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j) + 1

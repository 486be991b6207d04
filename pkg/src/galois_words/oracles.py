"""Brute-force reference implementations.

Everything here computes straight from the definitions, with no shortcuts
shared with the linear-time code paths, and serves as ground truth on small
inputs.  The factorization oracle is exponential and guarded by a hard size
limit; the others are quadratic or worse.  Do not use these on large data.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .alt_order import AltOrdering, Word, alt_compare, as_word
from .errors import (
    EmptyInputError,
    InputTooLongError,
    MultipleFactorizationsError,
    NoFactorizationError,
    NotPrimitiveError,
)
from .galois_core import Factorization

#: Hard limit for oracle_factorize; the search space doubles per symbol.
FACTORIZE_LIMIT = 16


class PeriodPair(NamedTuple):
    """Shortest odd and even period of a word.

    A value of ``len(word) + 1`` means no period of that parity exists.
    ``per_o`` is always odd or absent, ``per_e`` even or absent, and a word
    always has a period of its own length's parity (the length itself).
    """

    per_o: int
    per_e: int


@lru_cache(maxsize=None)
def _rotations(t: bytes) -> tuple[bytes, ...]:
    return tuple(t[r:] + t[:r] for r in range(len(t)))


@lru_cache(maxsize=None)
def _is_galois_cached(t: bytes) -> bool:
    if not t:
        return False
    for rot in _rotations(t)[1:]:
        if alt_compare(t, rot) is not AltOrdering.LESS:
            return False
    return True


def oracle_is_galois(t: Word) -> bool:
    """True iff ``t`` is strictly smallest among all its cyclic rotations.

    Comparing against every rotation, including rotations whose text equals
    ``t`` itself, makes the check reject non-primitive words for free.
    """
    return _is_galois_cached(as_word(t))


@lru_cache(maxsize=None)
def _is_pre_galois_cached(t: bytes) -> bool:
    for cut in range(1, len(t)):
        suffix = t[cut:]
        if t.startswith(suffix):
            continue
        if alt_compare(suffix, t) is not AltOrdering.GREATER:
            return False
    return True


def oracle_is_pre_galois(t: Word) -> bool:
    """True iff every proper suffix of ``t`` is a prefix of ``t`` or greater
    than ``t`` in the alternating order.  Vacuously true for the empty word.
    """
    return _is_pre_galois_cached(as_word(t))


@lru_cache(maxsize=None)
def _periods_cached(t: bytes) -> PeriodPair:
    n = len(t)
    per_o = per_e = n + 1
    for p in range(1, n + 1):
        if all(t[i] == t[i + p] for i in range(n - p)):
            if p & 1:
                if per_o > n:
                    per_o = p
            elif per_e > n:
                per_e = p
            if per_o <= n and per_e <= n:
                break
    return PeriodPair(per_o, per_e)


def oracle_periods(t: Word) -> PeriodPair:
    """Shortest odd and even periods of ``t``, tested by definition."""
    data = as_word(t)
    if not data:
        raise EmptyInputError("periods of the empty word are undefined")
    return _periods_cached(data)


@lru_cache(maxsize=None)
def _spref_cached(t: bytes) -> int:
    for length in range(1, len(t) + 1):
        order = alt_compare(t[:length], t)
        if length & 1:
            if order in (AltOrdering.LESS, AltOrdering.EQUAL):
                return length
        elif order in (AltOrdering.GREATER, AltOrdering.EQUAL):
            return length
    raise AssertionError("unreachable: the full word always qualifies")


def oracle_spref(t: Word) -> int:
    """Length of the shortest non-empty prefix ``P`` of ``t`` with
    ``P >= t`` when ``len(P)`` is even and ``P <= t`` when odd, in the
    alternating order.
    """
    data = as_word(t)
    if not data:
        raise EmptyInputError("spref of the empty word is undefined")
    return _spref_cached(data)


@lru_cache(maxsize=None)
def _cmp_cached(a: bytes, b: bytes) -> AltOrdering:
    return alt_compare(a, b)


def oracle_factorize(t: Word) -> Factorization:
    """The unique factorization of ``t`` into non-increasing Galois factors,
    found by exhaustive search over all compositions.

    Exactly one candidate must survive; zero or several indicate a bug in
    the oracle itself and raise.
    """
    data = as_word(t)
    n = len(data)
    if n > FACTORIZE_LIMIT:
        raise InputTooLongError(f"exhaustive factorization is limited to {FACTORIZE_LIMIT} symbols")
    if n == 0:
        return Factorization(())

    # Count every valid factorization of data[pos:] whose first factor may
    # not exceed prev in the alternating order, keeping one witness.
    memo: dict[tuple[int, bytes | None], tuple[int, tuple[int, ...] | None]] = {}

    def search(pos: int, prev: bytes | None) -> tuple[int, tuple[int, ...] | None]:
        if pos == n:
            return 1, ()
        key = (pos, prev)
        if key in memo:
            return memo[key]
        total = 0
        witness = None
        for end in range(pos + 1, n + 1):
            factor = data[pos:end]
            if not _is_galois_cached(factor):
                continue
            if prev is not None and _cmp_cached(prev, factor) is AltOrdering.LESS:
                continue
            count, rest = search(end, factor)
            if count:
                total += count
                if witness is None:
                    witness = (end - pos,) + rest
        memo[key] = (total, witness)
        return memo[key]

    total, lengths = search(0, None)
    if total == 0:
        raise NoFactorizationError(f"no Galois factorization found for {data!r}")
    if total > 1:
        raise MultipleFactorizationsError(f"{total} Galois factorizations found for {data!r}")
    spans = []
    start = 1
    for length in lengths:
        spans.append((start, length))
        start += length
    return Factorization(tuple(spans))


def oracle_rotation(t: Word) -> int:
    """1-based start of the unique rotation of ``t`` that is Galois.

    Primitive words have exactly one such rotation; non-primitive words have
    none and raise NotPrimitiveError.
    """
    data = as_word(t)
    if not data:
        raise EmptyInputError("rotation of the empty word is undefined")
    hits = [r for r, rot in enumerate(_rotations(data)) if _is_galois_cached(rot)]
    if not hits:
        raise NotPrimitiveError(f"{data!r} has no Galois rotation, so it is not primitive")
    assert len(hits) == 1, f"multiple Galois rotations of {data!r}: {hits}"
    return hits[0] + 1


def is_primitive(t: Word) -> bool:
    """True iff ``t`` is not a k-th power, k >= 2, of a shorter word."""
    data = as_word(t)
    n = len(data)
    if n == 0:
        raise EmptyInputError("primitivity of the empty word is undefined")
    for p in range(1, n + 1):
        if all(data[i] == data[i + p] for i in range(n - p)):
            return p == n or n % p != 0
    raise AssertionError("unreachable: the length itself is always a period")

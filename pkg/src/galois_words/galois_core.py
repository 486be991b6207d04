"""Galois word detection, factorization, and rotation.

A Galois word is a primitive word that is strictly smallest among all its
cyclic rotations in the alternating order; it is the alternating-order
analogue of a Lyndon word.  For example ``aba`` and ``abba`` are Galois,
while ``aab`` (its rotation ``aba`` is smaller) and ``abaaba`` (not
primitive) are not.

All three main operations run in linear time using one shared scanning
idea: read the word left to right and maintain the shortest odd period and
the shortest even period of the prefix read so far.  A word is *pre-Galois*
when every proper suffix is either a prefix of the word or greater than it
in the alternating order; Galois words are exactly the primitive pre-Galois
words, and the scan detects the first position (if any) where the
pre-Galois property breaks.  Besides the input and the produced spans, the
scanner state is a constant number of integers.

Mismatch branch directions follow from one parity argument used throughout
this module.  Extending a window ``W`` by symbol ``z`` and comparing ``z``
against the symbol one period ``p`` earlier probes the suffix starting at
position ``p + 1``: that suffix first differs from the word at relative
position ``len(W) + 1 - p``.  Whether the suffix (and hence a rotation)
drops below the whole word then depends only on the parity of that position
and the direction of the symbol mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from ._accel import kernels
from .alt_order import Word, as_word
from .errors import (
    EmptyInputError,
    NotPreGaloisError,
    NotPrimitiveError,
    UseAfterFinishError,
)

#: Inputs at least this long are routed to the compiled kernels when the
#: optional numba extra is installed.
FAST_THRESHOLD = 1 << 16

#: Optional callback receiving (window_start, window_length, per_odd,
#: per_even) after every accepted scanner step; used by property tests.
TraceFn = Callable[[int, int, int, int], None]


class PreGaloisState(NamedTuple):
    """Snapshot of the scanner state.

    ``base_offset`` counts symbols already factorized and dropped;
    ``frontier`` is the window-relative (1-based) position examined next;
    ``per_odd`` / ``per_even`` are the shortest odd / even periods of the
    current window, or its length + 1 when no period of that parity exists.
    """

    base_offset: int
    frontier: int
    per_odd: int
    per_even: int


class GaloisRoots(NamedTuple):
    """Lengths of the up-to-two Galois prefixes of a pre-Galois word whose
    lengths are periods of it.  At most one root of each parity exists, and
    at least one of the two is always present.
    """

    odd_root_len: Optional[int]
    even_root_len: Optional[int]


@dataclass(frozen=True)
class Factorization:
    """An ordered tiling of a word into factor spans.

    Spans are ``(start, length)`` with 1-based starts, in input order.
    """

    spans: tuple[tuple[int, int], ...]

    @property
    def total(self) -> int:
        return sum(length for _, length in self.spans)

    def __len__(self) -> int:
        return len(self.spans)

    def __iter__(self):
        return iter(self.spans)

    def words(self, t: Word) -> list[bytes]:
        """Materialize the factors of ``t`` described by this tiling."""
        data = as_word(t)
        return [data[start - 1 : start - 1 + length] for start, length in self.spans]


def _detect_scan(data: bytes, trace: TraceFn | None = None) -> tuple[bool, int, int]:
    """Scan ``data`` once, tracking its shortest odd and even periods.

    Returns ``(completed, per_odd, per_even)``.  ``completed`` is False as
    soon as some proper suffix orders strictly below the word, i.e. exactly
    when the word is not pre-Galois; the periods are then those of the
    longest pre-Galois prefix.
    """
    n = len(data)
    p_odd, p_even = 1, 2
    for j in range(2, n + 1):
        z = data[j - 1]
        if j & 1:
            if p_even < j:
                ref = data[j - p_even - 1]
                if z < ref:
                    return False, p_odd, p_even
                if z > ref:
                    p_even = j + 1
            if p_odd < j:
                ref = data[j - p_odd - 1]
                if z < ref:
                    p_odd = j
                elif z > ref:
                    return False, p_odd, p_even
        else:
            if p_even < j:
                ref = data[j - p_even - 1]
                if z < ref:
                    p_even = j
                elif z > ref:
                    return False, p_odd, p_even
            if p_odd < j:
                ref = data[j - p_odd - 1]
                if z < ref:
                    return False, p_odd, p_even
                if z > ref:
                    p_odd = j + 1
        if trace is not None:
            trace(0, j, p_odd, p_even)
    return True, p_odd, p_even


def is_galois(t: Word) -> bool:
    """True iff ``t`` is Galois.

    >>> is_galois(b"aba"), is_galois(b"aab"), is_galois(b"abba")
    (True, False, True)

    The empty word is not Galois; every single symbol is.
    """
    data = as_word(t)
    n = len(data)
    if n >= FAST_THRESHOLD:
        fast = kernels()
        if fast is not None:
            completed, p_odd, p_even = fast.detect_scan(data)
            return completed and (p_odd == n or (p_even == n and p_even != 2 * p_odd))
    completed, p_odd, p_even = _detect_scan(data)
    # per_odd == n: the word is primitive with no shorter odd period.
    # per_even == n: primitive unless it is the square of its odd root.
    return completed and (p_odd == n or (p_even == n and p_even != 2 * p_odd))


def is_pre_galois(t: Word) -> bool:
    """True iff every proper suffix of ``t`` is a prefix of ``t`` or orders
    above it.  Vacuously true for the empty word; implied by is_galois.
    """
    data = as_word(t)
    if len(data) >= FAST_THRESHOLD:
        fast = kernels()
        if fast is not None:
            return fast.detect_scan(data)[0]
    return _detect_scan(data)[0]


def galois_roots(t: Word) -> GaloisRoots:
    """The Galois root lengths of a pre-Galois word.

    The prefix whose length is the shortest odd period is always Galois;
    the prefix at the shortest even period is Galois unless it is exactly
    the square of the odd root (then it is not primitive).  Roots longer
    than the word itself are reported as absent.

    >>> galois_roots(b"aba")
    GaloisRoots(odd_root_len=3, even_root_len=2)
    """
    data = as_word(t)
    n = len(data)
    if n == 0:
        raise EmptyInputError("the empty word has no Galois roots")
    completed, p_odd, p_even = _detect_scan(data)
    if not completed:
        raise NotPreGaloisError(f"{data[:32]!r}... is not pre-Galois" if n > 32 else f"{data!r} is not pre-Galois")
    odd = p_odd if p_odd <= n else None
    even = p_even if p_even <= n and p_even != 2 * p_odd else None
    return GaloisRoots(odd, even)


def _factor_spans(data: bytes, trace: TraceFn | None = None) -> tuple[list[tuple[int, int]], int]:
    """Factor spans of ``data`` as 0-based ``(start, length)`` pairs, plus
    the number of symbol comparisons spent.

    Scans a window, cutting a factor as soon as a period mismatch proves
    that the window's prefix of length ``p`` tops every continuation.  A
    virtual terminator smaller than every byte (represented as -1) stands
    one past the end of the input; it always forces the final cut and would
    itself form a length-1 factor, which is dropped.
    """
    n = len(data)
    spans: list[tuple[int, int]] = []
    ncmp = 0
    i = 0  # symbols already factorized
    while i < n:
        p_odd, p_even = 1, 2
        j = 2  # window-relative position to examine; window starts at i
        while True:
            pos = i + j
            z = data[pos - 1] if pos <= n else -1
            fail_odd = fail_even = False
            new_odd, new_even = p_odd, p_even
            if j & 1:
                if p_even < j:
                    ncmp += 1
                    ref = data[pos - p_even - 1]
                    if z < ref:
                        fail_even = True
                    elif z > ref:
                        new_even = j + 1
                if p_odd < j:
                    ncmp += 1
                    ref = data[pos - p_odd - 1]
                    if z < ref:
                        new_odd = j
                    elif z > ref:
                        fail_odd = True
            else:
                if p_even < j:
                    ncmp += 1
                    ref = data[pos - p_even - 1]
                    if z < ref:
                        new_even = j
                    elif z > ref:
                        fail_even = True
                if p_odd < j:
                    ncmp += 1
                    ref = data[pos - p_odd - 1]
                    if z < ref:
                        fail_odd = True
                    elif z > ref:
                        new_odd = j + 1
            if not (fail_odd or fail_even):
                p_odd, p_even = new_odd, new_even
                if trace is not None:
                    trace(i, j, p_odd, p_even)
                j += 1
                continue
            # Cut: the factor length is the smallest period whose extension
            # failed.  Updates from this failing step are discarded.
            if fail_odd and fail_even:
                p = min(p_odd, p_even)
            elif fail_odd:
                p = p_odd
            else:
                p = p_even
            while j > p:
                if p == p_even and p_even == 2 * p_odd:
                    # The even factor is the square of the odd root: it
                    # splits into two equal odd Galois factors.
                    spans.append((i, p_odd))
                    spans.append((i + p_odd, p_odd))
                else:
                    spans.append((i, p))
                i += p
                j -= p
                p = p_even
            break  # rescan the rest of the window with fresh periods
    return spans, ncmp


def factorize(t: Word) -> Factorization:
    """The unique factorization of ``t`` into Galois factors that are
    non-increasing in the alternating order.

    >>> factorize(b"abaab").spans
    ((1, 3), (4, 2))
    >>> factorize(b"abaab").words(b"abaab")
    [b'aba', b'ab']

    The empty word yields an empty factorization.
    """
    data = as_word(t)
    if len(data) >= FAST_THRESHOLD:
        fast = kernels()
        if fast is not None:
            raw = fast.factor_spans(data)
            return Factorization(tuple((s + 1, ln) for s, ln in raw))
    raw, _ = _factor_spans(data)
    return Factorization(tuple((s + 1, ln) for s, ln in raw))


def spref(t: Word) -> int:
    """Length of the shortest non-empty prefix ``P`` of ``t`` that is >= t
    (alternating order) when ``len(P)`` is even, or <= t when odd.

    This equals the first Galois factor of ``t``, or its square when the
    first factor has odd length and repeats an even number of times without
    exhausting the word.

    >>> spref(b"abaab"), spref(b"bba"), spref(b"a")
    (3, 2, 1)
    """
    data = as_word(t)
    if not data:
        raise EmptyInputError("spref of the empty word is undefined")
    factored = factorize(data)
    start, first_len = factored.spans[0]
    first = data[:first_len]
    k = len(factored.spans)
    multiplicity = 1
    for s, length in factored.spans[1:]:
        if length == first_len and data[s - 1 : s - 1 + length] == first:
            multiplicity += 1
        else:
            break
    if first_len & 1 and multiplicity % 2 == 0 and multiplicity < k:
        return 2 * first_len
    return first_len


class GaloisFactorizer:
    """Online Galois factorization.

    Feed symbols left to right with :meth:`push` (or in bulk with
    :meth:`update`) and finally call :meth:`finish`; each call returns the
    factor spans (1-based ``(start, length)``) determined by it.  The spans
    returned across all calls concatenate to exactly
    ``factorize(whole_input).spans``.

    The factorizer retains only the unfactorized tail of the input plus a
    constant number of integers.  The tail is whatever the scan may still
    need to re-read; it can grow up to the full input when the input is a
    single factor.
    """

    __slots__ = ("_buf", "_win", "_consumed", "_total", "_j", "_p_odd", "_p_even", "_finished")

    def __init__(self) -> None:
        self._buf = bytearray()
        self._win = 0  # index in _buf where the current window starts
        self._consumed = 0  # symbols emitted as factors so far
        self._total = 0  # symbols pushed so far
        self._j = 2
        self._p_odd = 1
        self._p_even = 2
        self._finished = False

    @property
    def pending(self) -> int:
        """Number of input symbols buffered but not yet factorized."""
        return len(self._buf) - self._win

    @property
    def state(self) -> PreGaloisState:
        return PreGaloisState(self._consumed, self._j, self._p_odd, self._p_even)

    def _check_live(self) -> None:
        if self._finished:
            raise UseAfterFinishError("this factorizer has already been finished")

    def push(self, symbol: int | bytes) -> list[tuple[int, int]]:
        """Append one symbol; return any factor spans this completes."""
        self._check_live()
        if isinstance(symbol, (bytes, bytearray)):
            if len(symbol) != 1:
                raise ValueError("push takes a single symbol; use update for chunks")
            symbol = symbol[0]
        if not 0 <= symbol <= 255:
            raise ValueError(f"symbol out of byte range: {symbol}")
        self._buf.append(symbol)
        self._total += 1
        return self._drain(final=False)

    def update(self, chunk: Word) -> list[tuple[int, int]]:
        """Append a chunk of symbols; equivalent to pushing them one by one."""
        self._check_live()
        data = as_word(chunk)
        self._buf.extend(data)
        self._total += len(data)
        return self._drain(final=False)

    def finish(self) -> list[tuple[int, int]]:
        """Terminate the input and return the remaining factor spans."""
        self._check_live()
        self._finished = True
        out = self._drain(final=True)
        assert self._consumed == self._total, "drain must exhaust the input"
        self._buf = bytearray()
        self._win = 0
        return out

    def _drain(self, final: bool) -> list[tuple[int, int]]:
        """Advance the scan as far as the buffered symbols allow.

        With ``final`` set, a virtual terminator smaller than every byte
        follows the last pushed symbol, forcing cuts until nothing is left.
        """
        out: list[tuple[int, int]] = []
        buf = self._buf
        win = self._win
        consumed = self._consumed
        j = self._j
        p_odd = self._p_odd
        p_even = self._p_even
        end = len(buf)
        while True:
            idx = win + j - 1
            if idx < end:
                z = buf[idx]
            elif final and idx == end:
                z = -1
            else:
                break  # need more input (or, when final, all consumed)
            fail_odd = fail_even = False
            new_odd, new_even = p_odd, p_even
            if j & 1:
                if p_even < j:
                    ref = buf[idx - p_even]
                    if z < ref:
                        fail_even = True
                    elif z > ref:
                        new_even = j + 1
                if p_odd < j:
                    ref = buf[idx - p_odd]
                    if z < ref:
                        new_odd = j
                    elif z > ref:
                        fail_odd = True
            else:
                if p_even < j:
                    ref = buf[idx - p_even]
                    if z < ref:
                        new_even = j
                    elif z > ref:
                        fail_even = True
                if p_odd < j:
                    ref = buf[idx - p_odd]
                    if z < ref:
                        fail_odd = True
                    elif z > ref:
                        new_odd = j + 1
            if not (fail_odd or fail_even):
                p_odd, p_even = new_odd, new_even
                j += 1
                continue
            if fail_odd and fail_even:
                p = min(p_odd, p_even)
            elif fail_odd:
                p = p_odd
            else:
                p = p_even
            while j > p:
                if p == p_even and p_even == 2 * p_odd:
                    out.append((consumed + 1, p_odd))
                    out.append((consumed + 1 + p_odd, p_odd))
                else:
                    out.append((consumed + 1, p))
                consumed += p
                win += p
                j -= p
                p = p_even
            p_odd, p_even = 1, 2
            j = 2
            if win > 4096 and win * 2 > end:
                del buf[:win]
                win = 0
                end = len(buf)
        self._win = win
        self._consumed = consumed
        self._j = j
        self._p_odd = p_odd
        self._p_even = p_even
        return out


def factorizer_new() -> GaloisFactorizer:
    """Fresh streaming factorizer state."""
    return GaloisFactorizer()


def factorizer_push(state: GaloisFactorizer, symbol: int | bytes) -> list[tuple[int, int]]:
    """Feed one symbol to ``state``; returns newly completed factor spans."""
    return state.push(symbol)


def factorizer_finish(state: GaloisFactorizer) -> list[tuple[int, int]]:
    """Terminate ``state``; returns the remaining factor spans."""
    return state.finish()


def _rotation_scan(data: bytes, trace: TraceFn | None = None) -> tuple[int | None, int]:
    """Scan the tripled word, skipping factors, until the next factor is
    provably at least as long as ``data``; that factor starts with the
    Galois rotation.

    Returns ``(start, ncmp)`` with a 1-based ``start`` into ``data``, or
    ``None`` if the scan exhausts the tripled word, which happens exactly
    when ``data`` is not primitive.
    """
    n = len(data)
    total = 3 * n
    ncmp = 0
    i = 0
    while True:
        p_odd, p_even = 1, 2
        j = 2
        cut = False
        while i + j <= total:
            pos = i + j
            z = data[(pos - 1) % n]
            fail_odd = fail_even = False
            new_odd, new_even = p_odd, p_even
            if j & 1:
                if p_even < j:
                    ncmp += 1
                    ref = data[(pos - p_even - 1) % n]
                    if z < ref:
                        fail_even = True
                    elif z > ref:
                        new_even = j + 1
                if p_odd < j:
                    ncmp += 1
                    ref = data[(pos - p_odd - 1) % n]
                    if z < ref:
                        new_odd = j
                    elif z > ref:
                        fail_odd = True
            else:
                if p_even < j:
                    ncmp += 1
                    ref = data[(pos - p_even - 1) % n]
                    if z < ref:
                        new_even = j
                    elif z > ref:
                        fail_even = True
                if p_odd < j:
                    ncmp += 1
                    ref = data[(pos - p_odd - 1) % n]
                    if z < ref:
                        fail_odd = True
                    elif z > ref:
                        new_odd = j + 1
            if fail_odd or fail_even:
                if fail_odd and fail_even:
                    p = min(p_odd, p_even)
                elif fail_odd:
                    p = p_odd
                else:
                    p = p_even
                while j > p:
                    i += p
                    j -= p
                    p = p_even
                cut = True
                break
            p_odd, p_even = new_odd, new_even
            if trace is not None:
                trace(i, j, p_odd, p_even)
            if p_odd >= n and p_even >= n:
                return i % n + 1, ncmp
            j += 1
        if not cut:
            # The scan ran off the tripled word without the periods ever
            # clearing n: the word repeats a shorter root throughout.
            return None, ncmp


def _smallest_period(data: bytes) -> int:
    """Shortest period of ``data`` via the classic border (failure) table."""
    n = len(data)
    if n == 0:
        return 0
    border = [0] * n
    k = 0
    for q in range(1, n):
        while k and data[q] != data[k]:
            k = border[k - 1]
        if data[q] == data[k]:
            k += 1
        border[q] = k
    return n - border[-1]


def _is_primitive(data: bytes) -> bool:
    if len(data) >= FAST_THRESHOLD:
        fast = kernels()
        if fast is not None:
            return fast.is_primitive(data)
    p = _smallest_period(data)
    return p == len(data) or len(data) % p != 0


def galois_rotation(t: Word, *, validate: bool = True) -> int:
    """1-based start of the unique rotation of ``t`` that is Galois.

    >>> galois_rotation(b"aab")
    2

    Requires a non-empty primitive word.  With ``validate`` (the default) a
    border-table pass rejects non-primitive input up front, at the price of
    linear auxiliary space.  With ``validate=False`` no extra space is
    used; a non-primitive word is then only detected when the scan runs off
    the end of the tripled word, which still raises NotPrimitiveError.
    """
    data = as_word(t)
    n = len(data)
    if n == 0:
        raise EmptyInputError("the empty word has no rotations")
    if validate and not _is_primitive(data):
        raise NotPrimitiveError("input is a proper power of a shorter word")
    if n >= FAST_THRESHOLD:
        fast = kernels()
        if fast is not None:
            start = fast.rotation_scan(data)
            if start == 0:
                raise NotPrimitiveError("input is a proper power of a shorter word")
            return start
    start, _ = _rotation_scan(data)
    if start is None:
        raise NotPrimitiveError("input is a proper power of a shorter word")
    return start

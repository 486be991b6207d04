"""Compiled scan kernels for large inputs.

These mirror the pure-Python scans in galois_core and lyndon_baseline
symbol for symbol; the test suite cross-checks the two implementations on
exhaustive small inputs and random blobs.  Import requires the optional
``fast`` extra (numba + numpy); callers go through galois_words._accel,
which tolerates the import failing.
"""

from __future__ import annotations

import numba
import numpy as np


@numba.njit(cache=True)
def _detect_scan_u8(a):  # pragma: no cover - exercised via wrappers
    n = a.size
    p_odd = 1
    p_even = 2
    for j in range(2, n + 1):
        z = np.int64(a[j - 1])
        if j & 1:
            if p_even < j:
                ref = np.int64(a[j - p_even - 1])
                if z < ref:
                    return 0, p_odd, p_even
                if z > ref:
                    p_even = j + 1
            if p_odd < j:
                ref = np.int64(a[j - p_odd - 1])
                if z < ref:
                    p_odd = j
                elif z > ref:
                    return 0, p_odd, p_even
        else:
            if p_even < j:
                ref = np.int64(a[j - p_even - 1])
                if z < ref:
                    p_even = j
                elif z > ref:
                    return 0, p_odd, p_even
            if p_odd < j:
                ref = np.int64(a[j - p_odd - 1])
                if z < ref:
                    return 0, p_odd, p_even
                if z > ref:
                    p_odd = j + 1
    return 1, p_odd, p_even


@numba.njit(cache=True)
def _factor_spans_u8(a):  # pragma: no cover - exercised via wrappers
    n = a.size
    cap = 16
    starts = np.empty(cap, np.int64)
    lengths = np.empty(cap, np.int64)
    count = 0
    i = 0
    while i < n:
        p_odd = 1
        p_even = 2
        j = 2
        while True:
            pos = i + j
            z = np.int64(a[pos - 1]) if pos <= n else np.int64(-1)
            fail_odd = False
            fail_even = False
            new_odd = p_odd
            new_even = p_even
            if j & 1:
                if p_even < j:
                    ref = np.int64(a[pos - p_even - 1])
                    if z < ref:
                        fail_even = True
                    elif z > ref:
                        new_even = j + 1
                if p_odd < j:
                    ref = np.int64(a[pos - p_odd - 1])
                    if z < ref:
                        new_odd = j
                    elif z > ref:
                        fail_odd = True
            else:
                if p_even < j:
                    ref = np.int64(a[pos - p_even - 1])
                    if z < ref:
                        new_even = j
                    elif z > ref:
                        fail_even = True
                if p_odd < j:
                    ref = np.int64(a[pos - p_odd - 1])
                    if z < ref:
                        fail_odd = True
                    elif z > ref:
                        new_odd = j + 1
            if not (fail_odd or fail_even):
                p_odd = new_odd
                p_even = new_even
                j += 1
                continue
            if fail_odd and fail_even:
                p = p_odd if p_odd < p_even else p_even
            elif fail_odd:
                p = p_odd
            else:
                p = p_even
            while j > p:
                if count + 2 > cap:
                    cap *= 2
                    ns = np.empty(cap, np.int64)
                    nl = np.empty(cap, np.int64)
                    ns[:count] = starts[:count]
                    nl[:count] = lengths[:count]
                    starts = ns
                    lengths = nl
                if p == p_even and p_even == 2 * p_odd:
                    starts[count] = i
                    lengths[count] = p_odd
                    count += 1
                    starts[count] = i + p_odd
                    lengths[count] = p_odd
                    count += 1
                else:
                    starts[count] = i
                    lengths[count] = p
                    count += 1
                i += p
                j -= p
                p = p_even
            break
    return starts[:count], lengths[:count]


@numba.njit(cache=True)
def _rotation_scan_u8(a):  # pragma: no cover - exercised via wrappers
    n = a.size
    total = 3 * n
    i = 0
    while True:
        p_odd = 1
        p_even = 2
        j = 2
        cut = False
        while i + j <= total:
            pos = i + j
            z = np.int64(a[(pos - 1) % n])
            fail_odd = False
            fail_even = False
            new_odd = p_odd
            new_even = p_even
            if j & 1:
                if p_even < j:
                    ref = np.int64(a[(pos - p_even - 1) % n])
                    if z < ref:
                        fail_even = True
                    elif z > ref:
                        new_even = j + 1
                if p_odd < j:
                    ref = np.int64(a[(pos - p_odd - 1) % n])
                    if z < ref:
                        new_odd = j
                    elif z > ref:
                        fail_odd = True
            else:
                if p_even < j:
                    ref = np.int64(a[(pos - p_even - 1) % n])
                    if z < ref:
                        new_even = j
                    elif z > ref:
                        fail_even = True
                if p_odd < j:
                    ref = np.int64(a[(pos - p_odd - 1) % n])
                    if z < ref:
                        fail_odd = True
                    elif z > ref:
                        new_odd = j + 1
            if fail_odd or fail_even:
                if fail_odd and fail_even:
                    p = p_odd if p_odd < p_even else p_even
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
            p_odd = new_odd
            p_even = new_even
            if p_odd >= n and p_even >= n:
                return i % n + 1
            j += 1
        if not cut:
            return 0


@numba.njit(cache=True)
def _smallest_period_u8(a):  # pragma: no cover - exercised via wrappers
    n = a.size
    if n == 0:
        return 0
    border = np.zeros(n, np.int64)
    k = 0
    for q in range(1, n):
        while k > 0 and a[q] != a[k]:
            k = border[k - 1]
        if a[q] == a[k]:
            k += 1
        border[q] = k
    return n - border[n - 1]


@numba.njit(cache=True)
def _duval_spans_u8(a):  # pragma: no cover - exercised via wrappers
    n = a.size
    cap = 16
    starts = np.empty(cap, np.int64)
    lengths = np.empty(cap, np.int64)
    count = 0
    i = 0
    while i < n:
        j = i + 1
        k = i
        while j < n and a[k] <= a[j]:
            if a[k] < a[j]:
                k = i
            else:
                k += 1
            j += 1
        while i <= k:
            if count == cap:
                cap *= 2
                ns = np.empty(cap, np.int64)
                nl = np.empty(cap, np.int64)
                ns[:count] = starts[:count]
                nl[:count] = lengths[:count]
                starts = ns
                lengths = nl
            starts[count] = i
            lengths[count] = j - k
            count += 1
            i += j - k
    return starts[:count], lengths[:count]


def _view(data: bytes) -> np.ndarray:
    return np.frombuffer(data, dtype=np.uint8)


def detect_scan(data: bytes) -> tuple[bool, int, int]:
    """(completed, per_odd, per_even) of the detection scan."""
    completed, p_odd, p_even = _detect_scan_u8(_view(data))
    return bool(completed), int(p_odd), int(p_even)


def factor_spans(data: bytes) -> list[tuple[int, int]]:
    """Galois factor spans as 0-based (start, length) pairs."""
    starts, lengths = _factor_spans_u8(_view(data))
    return [(int(s), int(ln)) for s, ln in zip(starts, lengths)]


def rotation_scan(data: bytes) -> int:
    """1-based Galois rotation start, or 0 when the input is not primitive."""
    return int(_rotation_scan_u8(_view(data)))


def is_primitive(data: bytes) -> bool:
    p = int(_smallest_period_u8(_view(data)))
    return p == len(data) or len(data) % p != 0


def duval_spans(data: bytes) -> list[tuple[int, int]]:
    """Lyndon factor spans as 0-based (start, length) pairs."""
    starts, lengths = _duval_spans_u8(_view(data))
    return [(int(s), int(ln)) for s, ln in zip(starts, lengths)]


def warmup() -> None:
    """Force JIT compilation of all kernels on a tiny input."""
    probe = b"abaab"
    detect_scan(probe)
    factor_spans(probe)
    rotation_scan(b"aab")
    is_primitive(probe)
    duval_spans(probe)

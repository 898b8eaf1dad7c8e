"""Independent checker for universal cycles of S_n.

Only the order-isomorphism primitives are shared with the generator. Every
cyclic window of length n is standardized, ranked, and marked in an n!-bit
set; a repeated window value or an already-marked rank is a failure.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from math import factorial
from typing import Iterable, Optional

import numpy as np

from .core import window_ranks

CHUNK = 1 << 16


@dataclass(frozen=True)
class VerifyReport:
    n: int
    valid: bool
    length_ok: bool
    alphabet_ok: bool
    first_failure: Optional[tuple[int, str]]
    patterns_seen: int
    length: int


class BitSet:
    """Fixed-size bit set over a numpy byte buffer."""

    def __init__(self, size: int):
        self.size = size
        self.bits = np.zeros((size + 7) // 8, dtype=np.uint8)

    def test(self, idx: np.ndarray) -> np.ndarray:
        return ((self.bits[idx >> 3] >> (idx & 7).astype(np.uint8)) & 1).astype(bool)

    def set(self, idx: np.ndarray) -> None:
        np.bitwise_or.at(self.bits, idx >> 3, np.left_shift(1, idx & 7).astype(np.uint8))

    def count(self) -> int:
        return int(np.unpackbits(self.bits).sum())


class WindowChecker:
    """Incremental verifier: ``feed`` symbol chunks in order, then ``finish``.

    Memory is the bit set plus the first and last n - 1 symbols.
    """

    def __init__(self, n: int):
        self.n = n
        self.total = factorial(n)
        self.seen = BitSet(self.total)
        self.head = np.zeros(0, dtype=np.int64)
        self.tail = np.zeros(0, dtype=np.int64)
        self.length = 0
        self.alphabet_ok = True
        self.failure: Optional[tuple[int, str]] = None

    def _fail(self, index: int, reason: str) -> None:
        if self.failure is None or index < self.failure[0]:
            self.failure = (index, reason)

    def feed(self, chunk) -> None:
        chunk = np.asarray(chunk, dtype=np.int64).ravel()
        if chunk.size == 0:
            return
        n = self.n
        bad = np.flatnonzero((chunk < 0) | (chunk > n))
        if bad.size:
            self.alphabet_ok = False
            self._fail(self.length + int(bad[0]), f"symbol {int(chunk[bad[0]])} outside 0..{n}")
        if self.head.size < n - 1:
            need = n - 1 - self.head.size
            self.head = np.concatenate([self.head, chunk[:need]])
        joined = np.concatenate([self.tail, chunk])
        # windows fully inside ``joined`` start at global index self.length - len(tail)
        self._windows(joined, self.length - self.tail.size)
        self.length += chunk.size
        keep = min(n - 1, joined.size)
        self.tail = joined[joined.size - keep:] if keep else joined[:0]

    def _windows(self, seq: np.ndarray, start: int) -> None:
        n = self.n
        if seq.size < n:
            return
        windows = np.lib.stride_tricks.sliding_window_view(seq, n)
        ranks, distinct = window_ranks(windows)
        nd = np.flatnonzero(~distinct)
        if nd.size:
            self._fail(start + int(nd[0]), "window has a repeated symbol")
        idx = np.flatnonzero(distinct)
        r = ranks[idx]
        # a rank may be only partially in range if the alphabet is wrong; ranks are < n! always
        order = np.argsort(r, kind="stable")
        rs = r[order]
        dup_in_chunk = np.zeros(r.size, dtype=bool)
        if r.size > 1:
            same = rs[1:] == rs[:-1]
            dup_in_chunk[order[1:][same]] = True
        dup_prior = self.seen.test(r)
        dup = np.flatnonzero(dup_in_chunk | dup_prior)
        if dup.size:
            self._fail(start + int(idx[dup[0]]), "window pattern already seen")
        self.seen.set(r)

    def finish(self) -> VerifyReport:
        n = self.n
        if self.length >= n - 1 and n > 1:
            # wrap-around windows: last n-1 symbols followed by the first n-1
            self._windows(np.concatenate([self.tail, self.head]), self.length - self.tail.size)
        length_ok = self.length == self.total
        if not length_ok:
            self._fail(self.length, f"length {self.length} != {n}! = {self.total}")
        patterns = self.seen.count()
        valid = length_ok and self.alphabet_ok and self.failure is None and patterns == self.total
        return VerifyReport(n, valid, length_ok, self.alphabet_ok, self.failure, patterns, self.length)


def _as_array(word) -> np.ndarray:
    if isinstance(word, str):
        word = [int(c) for c in word]
    elif isinstance(word, (bytes, bytearray)):
        return np.frombuffer(bytes(word), dtype=np.uint8).astype(np.int64)
    return np.asarray(list(word) if not isinstance(word, np.ndarray) else word, dtype=np.int64)


def verify(n: int, word) -> VerifyReport:
    """Check that ``word`` is a universal cycle for S_n over {0..n}.

    ``word`` may be a digit string, bytes, or any integer sequence. Never raises
    on malformed words; the report says what failed and where.
    """
    checker = WindowChecker(n)
    arr = _as_array(word)
    for i in range(0, arr.size, CHUNK * 16):
        checker.feed(arr[i:i + CHUNK * 16])
    return checker.finish()


def verify_chunks(n: int, chunks: Iterable) -> VerifyReport:
    checker = WindowChecker(n)
    for chunk in chunks:
        checker.feed(_as_array(chunk))
    return checker.finish()


def verify_stream(n: int, source: Iterable[int]) -> VerifyReport:
    """Streaming form of ``verify`` over single symbols."""
    it = iter(source)

    def batches():
        while True:
            block = np.fromiter(islice(it, CHUNK), dtype=np.int64)
            if block.size == 0:
                return
            yield block

    return verify_chunks(n, batches())

"""Text formats for words.

Spaced: decimal symbols separated by single spaces, one line, newline
terminated, no trailing space. Compact (n <= 9): one digit per symbol, no
separators, newline terminated. Readers accept either: a single token longer than two
characters is compact, anything else is spaced.
"""
from __future__ import annotations

from typing import IO, Iterable, Iterator

import numpy as np

BLOCK = 1 << 20


class WordParseError(ValueError):
    pass


def format_word(symbols: Iterable[int], compact: bool = False) -> str:
    if compact:
        return "".join(str(s) for s in symbols)
    return " ".join(str(s) for s in symbols)


def write_word(chunks: Iterable[bytes], out: IO[str], compact: bool = False) -> int:
    """Write symbol chunks as one line; returns the number of symbols."""
    count = 0
    for chunk in chunks:
        if not chunk:
            continue
        if compact:
            if max(chunk) > 9:
                raise ValueError("compact format needs symbols 0..9")
            out.write(bytes(c + 48 for c in chunk).decode("ascii"))
        else:
            if count:
                out.write(" ")
            out.write(" ".join(map(str, chunk)))
        count += len(chunk)
    out.write("\n")
    return count


def _digits(text: str) -> np.ndarray:
    arr = np.frombuffer(text.encode("ascii", "replace"), dtype=np.uint8).astype(np.int64) - 48
    if arr.size and (arr.min() < 0 or arr.max() > 9):
        raise WordParseError("compact word contains a non-digit")
    return arr


def _ints(tokens: list[str]) -> np.ndarray:
    try:
        return np.array([int(t) for t in tokens], dtype=np.int64)
    except ValueError as exc:
        raise WordParseError(str(exc)) from None


def _has_inner_space(text: str) -> bool:
    return any(c.isspace() for c in text.strip())


def read_word(stream: IO[str], block: int = BLOCK) -> Iterator[np.ndarray]:
    """Yield the symbols of a word from a text stream as integer arrays.

    Input is buffered until it shows inner whitespace (spaced format) or ends
    (compact format, which is at most 9! digits).
    """
    text = ""
    while True:
        nxt = stream.read(block)
        text += nxt
        if not nxt or _has_inner_space(text):
            break
    if not nxt:
        body = text.strip()
        if body and not _has_inner_space(body) and len(body) > 2:
            yield _digits(body)
            return
    carry = ""
    while text:
        text = carry + text
        cut = len(text)
        if not text[-1].isspace():
            # the last token may continue in the next block
            cut = max(text.rfind(c) for c in " \n\t\r") + 1
        carry = text[cut:]
        tokens = text[:cut].split()
        if tokens:
            yield _ints(tokens)
        text = stream.read(block)
    if carry.strip():
        yield _ints(carry.split())


def parse_word(text: str) -> list[int]:
    import io

    return [int(v) for arr in read_word(io.StringIO(text)) for v in arr]

"""Order-isomorphism primitives.

Permutations are tuples over ``{1, ..., m}`` (one-line notation). Tuples are
sequences of distinct non-negative integers; the value 0 shows up because the
construction prepends it to a permutation.

Ranking is an internal convention only: ``perm_rank`` is the Lehmer code read
as a factorial-base number, so the identity ranks 0 and the reversal ranks
``m! - 1``.
"""
from __future__ import annotations

from math import factorial
from typing import Sequence

import numpy as np

from .errors import DuplicateValue, InvalidPerm, LengthMismatch

Perm = tuple[int, ...]
Tuple = tuple[int, ...]


def pattern(t: Sequence[int]) -> Perm:
    """Standardize ``t``: replace each value by its rank (smallest -> 1)."""
    if len(set(t)) != len(t):
        raise DuplicateValue(f"tuple has repeated values: {tuple(t)}")
    return tuple(1 + sum(1 for w in t if w < v) for v in t)


def order_isomorphic(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise LengthMismatch(f"lengths differ: {len(a)} != {len(b)}")
    return pattern(a) == pattern(b)


def is_perm(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def perm_rank(p: Sequence[int]) -> int:
    if not is_perm(p):
        raise InvalidPerm(f"not a permutation of 1..{len(p)}: {tuple(p)}")
    m = len(p)
    rank = 0
    for i, v in enumerate(p):
        smaller_right = sum(1 for w in p[i + 1:] if w < v)
        rank += smaller_right * factorial(m - 1 - i)
    return rank


def perm_unrank(rank: int, m: int) -> Perm:
    if not 0 <= rank < factorial(m):
        raise InvalidPerm(f"rank {rank} out of range for S_{m}")
    pool = list(range(1, m + 1))
    out = []
    for i in range(m - 1, -1, -1):
        d, rank = divmod(rank, factorial(i))
        out.append(pool.pop(d))
    return tuple(out)


def all_perms(m: int):
    """Every element of S_m, in rank order."""
    for r in range(factorial(m)):
        yield perm_unrank(r, m)


def window_ranks(windows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Batch pattern ranks for the rows of a 2-D integer array.

    Returns ``(ranks, distinct)``. A row's rank equals ``perm_rank(pattern(row))``
    whenever ``distinct`` is True for it; rows with a repeated value get
    ``distinct = False`` and an arbitrary rank.
    """
    windows = np.asarray(windows)
    rows, m = windows.shape
    ranks = np.zeros(rows, dtype=np.int64)
    distinct = np.ones(rows, dtype=bool)
    for i in range(m):
        col = windows[:, i]
        smaller = np.zeros(rows, dtype=np.int64)
        for j in range(i + 1, m):
            other = windows[:, j]
            smaller += other < col
            distinct &= other != col
        ranks += smaller * factorial(m - 1 - i)
    return ranks, distinct


def shift(x: int, t: Sequence[int]) -> Tuple:
    """Open a gap at value ``x``: values below ``x`` stay, the rest move up one."""
    return tuple(v if v < x else v + 1 for v in t)


def rotate(t: Sequence[int], k: int = 1) -> Tuple:
    """Left-rotate by ``k``; ``rotate(t)`` is the transition-graph step a_1..a_n -> a_2..a_n a_1."""
    t = tuple(t)
    if not t:
        return t
    k %= len(t)
    return t[k:] + t[:k]


def overlaps(u: Sequence[int], v: Sequence[int]) -> bool:
    """True if ``u -> v`` is an edge of the transition graph (shift-by-one overlap)."""
    return len(u) == len(v) and tuple(u[1:]) == tuple(v[:-1])

"""Brute-force U(3) and U(4) independently of the DFS census.

Every normalized candidate word is an increasing first window followed by
one binary choice per remaining symbol (the two values not among the
previous n - 1). All 2**(n! - n) choice vectors are expanded at once with
numpy and every cyclic window is checked by sorting. The printed counts are
the fixtures pinned in tests/test_count.py.
"""
from itertools import combinations
from math import factorial

import numpy as np


def brute_count(n: int) -> tuple[int, list[str]]:
    total = factorial(n)
    steps = total - n
    choices = (np.arange(2 ** steps, dtype=np.int64)[:, None] >> np.arange(steps)) & 1
    found = []
    for first in combinations(range(n + 1), n):
        words = np.zeros((choices.shape[0], total), dtype=np.int8)
        words[:, :n] = first
        for i in range(n, total):
            prev = words[:, i - n + 1:i]
            present = np.zeros((words.shape[0], n + 1), dtype=bool)
            np.put_along_axis(present, prev.astype(np.int64), True, axis=1)
            missing = np.argsort(present, axis=1, kind="stable")[:, :2]  # the two absent symbols, ascending
            words[:, i] = missing[np.arange(words.shape[0]), choices[:, i - n]]
        ext = np.concatenate([words, words[:, : n - 1]], axis=1)
        windows = np.stack([ext[:, s:s + n] for s in range(total)], axis=1)  # (rows, total, n)
        distinct = np.all(np.diff(np.sort(windows, axis=2), axis=2) != 0, axis=(1, 2))
        # encode each window's pattern as the tuple of argsort positions
        pat = np.argsort(np.argsort(windows, axis=2), axis=2)
        code = (pat * (n ** np.arange(n))).sum(axis=2)
        code_sorted = np.sort(code, axis=1)
        unique = np.all(np.diff(code_sorted, axis=1) != 0, axis=1)
        ok = np.flatnonzero(distinct & unique)
        found.extend("".join(map(str, words[r])) for r in ok)
    return len(found), sorted(found)


if __name__ == "__main__":
    for n in (3, 4):
        count, words = brute_count(n)
        print(f"U({n}) = {count}")
        if n == 3:
            print("  words:", " ".join(words))

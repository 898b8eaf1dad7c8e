"""How many universal cycles: exact bounds, small-n census, spanning-tree counts.

``U(n)`` counts words of length n! over {0..n} whose windows hit every
pattern of S_n once and whose first n symbols increase. It lies between
``420 ** ((n-1)! / 24)`` (n >= 5) and ``(n + 1) * 2 ** (n! - n)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from itertools import combinations, product
from math import factorial
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .core import pattern, perm_rank
from .cycles import lv
from .errors import UnsupportedN
from .treebuild import LinkTree, check_properties, extend, induced_graph

BASE_TREES_LOWER = 420
MAX_EXACT_BOUNDS_N = 12

# extra linkable pairs that, added to the base tree, give a graph whose
# spanning trees all satisfy the seven properties
BASE_AUGMENTATION = (
    (lv("1432", 1), lv("2143", 5)),
    (lv("3421", 1), lv("4132", 5)),
    (lv("4231", 2), lv("4321", 4)),
)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lower: Optional[int]
    upper: int


def lower_exponent(n: int) -> int:
    """(n-1)!/24: the number of base-tree copies in the tree for n."""
    return factorial(n - 1) // 24


def lower_bound(n: int) -> Optional[int]:
    """420 ** ((n-1)!/24) for n >= 5, else None."""
    return BASE_TREES_LOWER ** lower_exponent(n) if n >= 5 else None


def upper_bound(n: int) -> int:
    """(n+1) * 2**(n! - n): n+1 increasing starts, then two choices per symbol."""
    return (n + 1) << (factorial(n) - n)


def bounds(n: int) -> BoundsReport:
    if n < 3:
        raise UnsupportedN(f"n must be >= 3, got {n}")
    if n > MAX_EXACT_BOUNDS_N:
        raise UnsupportedN(f"exact bounds beyond n={MAX_EXACT_BOUNDS_N} are too large to hold; use bounds_digits")
    return BoundsReport(n, lower_bound(n), upper_bound(n))


def bounds_digits(n: int) -> dict:
    """Decimal digit counts and log10 of both bounds, without building them."""
    if n < 3:
        raise UnsupportedN(f"n must be >= 3, got {n}")
    with localcontext() as ctx:
        ctx.prec = 60
        up = Decimal(n + 1).log10() + Decimal(factorial(n) - n) * Decimal(2).log10()
        out = {"n": n, "upper_log10": float(up), "upper_digits": int(up) + 1}
        if n >= 5:
            lo = Decimal(lower_exponent(n)) * Decimal(BASE_TREES_LOWER).log10()
            out["lower_log10"] = float(lo)
            out["lower_digits"] = int(lo) + 1
    return out


def enumerate_ucycles(n: int, collect: bool = True) -> tuple[int, list[str]]:
    """Exhaustive count of normalized universal cycles for n in {3, 4}.

    Depth-first over partial words: after an increasing first window each new
    symbol must avoid the previous n - 1, so there are two choices per step;
    a branch dies as soon as a window pattern repeats. Returns the count and,
    if ``collect``, the words as digit strings in lexicographic order.
    """
    if n not in (3, 4):
        raise UnsupportedN(f"exhaustive census only for n = 3, 4, got {n}")
    total = factorial(n)
    used = bytearray(total)
    word = [0] * total
    found: list[str] = []
    count = 0

    def rank_at(start: int) -> int:
        return perm_rank(pattern([word[(start + j) % total] for j in range(n)]))

    def close() -> bool:
        marked = []
        ok = True
        for s in range(total - n + 1, total):
            w = [word[(s + j) % total] for j in range(n)]
            if len(set(w)) < n:
                ok = False
                break
            r = perm_rank(pattern(w))
            if used[r]:
                ok = False
                break
            used[r] = 1
            marked.append(r)
        for r in marked:
            used[r] = 0
        return ok

    def dfs(i: int) -> None:
        nonlocal count
        if i == total:
            if close():
                count += 1
                if collect:
                    found.append("".join(map(str, word)))
            return
        prev = word[i - n + 1:i]
        for s in range(n + 1):
            if s in prev:
                continue
            word[i] = s
            r = rank_at(i - n + 1)
            if used[r]:
                continue
            used[r] = 1
            dfs(i + 1)
            used[r] = 0

    for first in combinations(range(n + 1), n):
        word[:n] = first
        used[0] = 1
        dfs(n)
        used[0] = 0
    return count, found


def spanning_tree_count(num_vertices: int, edges: Iterable[tuple[int, int]]) -> int:
    """Number of spanning trees of an undirected multigraph on ``0..num_vertices-1``.

    Exact Kirchhoff count: the determinant of the Laplacian with row and
    column 0 removed, by fraction-free (Bareiss) elimination. Self-loops are
    ignored; a disconnected graph gives 0.
    """
    if num_vertices <= 1:
        return 1
    lap = np.zeros((num_vertices, num_vertices), dtype=object)
    lap[:] = 0
    for u, v in edges:
        if u == v:
            continue
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    return _bareiss_det(lap[1:, 1:].copy())


def _bareiss_det(m: np.ndarray) -> int:
    size = m.shape[0]
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k, k] == 0:
            rows = [i for i in range(k + 1, size) if m[i, k] != 0]
            if not rows:
                return 0
            m[[k, rows[0]]] = m[[rows[0], k]]
            sign = -sign
        pivot = m[k, k]
        rest = m[k + 1:, k + 1:] * pivot - np.outer(m[k + 1:, k], m[k, k + 1:])
        m[k + 1:, k + 1:] = rest // prev
        m[k + 1:, k] = 0
        prev = pivot
    return int(sign * m[size - 1, size - 1])


def graph_spanning_trees(graph: LinkTree) -> int:
    """Spanning-tree count of a graph on labeled vertices."""
    index = {v: i for i, v in enumerate(graph.vertices)}
    return spanning_tree_count(len(index), ((index[u], index[v]) for u, v in graph.edges()))


def read_edge_list(path) -> tuple[int, list[tuple[int, int]]]:
    """Parse ``p <vertices> <edges>`` followed by ``u v`` lines (vertices 1-based).

    Blank lines and lines starting with ``c`` or ``#`` are skipped. Returns
    0-based edges.
    """
    num_vertices = None
    declared = None
    edges = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "c#":
            continue
        parts = line.split()
        if parts[0] == "p":
            if num_vertices is not None or len(parts) != 3:
                raise ValueError(f"line {lineno}: bad header {raw!r}")
            num_vertices, declared = int(parts[1]), int(parts[2])
            continue
        if num_vertices is None:
            raise ValueError(f"line {lineno}: edge before 'p' header")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= num_vertices and 1 <= v <= num_vertices):
            raise ValueError(f"line {lineno}: vertex out of range 1..{num_vertices}")
        edges.append((u - 1, v - 1))
    if num_vertices is None:
        raise ValueError("missing 'p <vertices> <edges>' header")
    if declared != len(edges):
        raise ValueError(f"header declares {declared} edges, found {len(edges)}")
    return num_vertices, edges


def augmented_base_graph(tree: LinkTree, extra: Sequence = BASE_AUGMENTATION) -> LinkTree:
    """``tree`` plus the augmentation edges; each must join two tree vertices and be linkable."""
    from .linkage import linkable

    edges = tree.edges()
    for u, v in extra:
        if u not in tree or v not in tree:
            raise ValueError(f"augmentation edge {u} -- {v} leaves the tree's vertex set")
        if linkable(u, v) is None:
            raise ValueError(f"augmentation edge {u} -- {v} is not linkable")
        edges.append((u, v))
    return LinkTree.from_edges(tree.n, tree.vertices, edges)


def _tree_key(tree: LinkTree) -> tuple:
    return frozenset(tree.adj), tree.edge_set()


def amplification_check(tree_a: LinkTree, tree_b: LinkTree) -> bool:
    """Distinct base trees give distinct extended trees, in every mix of copies.

    Builds all ``2**n`` extensions that take ``tree_a`` or ``tree_b`` for each
    of the n copies and checks they are pairwise distinct and each satisfies
    the seven properties.
    """
    if tree_a.n != tree_b.n:
        raise ValueError("trees must share n")
    if _tree_key(tree_a) == _tree_key(tree_b):
        raise ValueError("amplification needs two distinct trees")
    if extend(tree_a) == extend(tree_b):
        return False
    keys = set()
    for choice in product((tree_a, tree_b), repeat=tree_a.n):
        grown = extend(list(choice))
        if not check_properties(grown).all():
            return False
        keys.add(_tree_key(grown))
    return len(keys) == 2 ** tree_a.n


def induced_base_graph(tree: LinkTree) -> LinkTree:
    """All H_n edges among the tree's vertices."""
    return induced_graph(tree.n, tree.vertices)


def unaugmented_base_tree(tree: LinkTree, extra: Sequence = BASE_AUGMENTATION) -> LinkTree:
    """The induced graph on ``tree``'s vertices with the augmentation edges removed.

    For the default searched labeling this is again a linking tree with all
    seven properties, and adding ``extra`` back recovers the induced graph.
    """
    drop = {frozenset(e) for e in extra}
    graph = induced_base_graph(tree)
    kept = [e for e in graph.edges() if frozenset(e) not in drop]
    return LinkTree.from_edges(tree.n, graph.vertices, kept)

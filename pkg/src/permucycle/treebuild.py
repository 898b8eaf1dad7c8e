"""Linking trees: a base tree on H_5 by search, then induction to any n.

A linking tree for ``n`` has one labeled vertex ``(a, x)`` per ``a`` in S_{n-1};
its edges are linkable pairs. ``extend`` turns a tree for ``n`` into one for
``n + 1`` by placing ``n`` relabeled copies side by side and reconnecting them
through two replaced leaves.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, fields
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .core import Perm, all_perms, perm_rank
from .cycles import LabeledVertex
from .errors import (
    BaseCaseNotFound,
    InductionInvariantViolated,
    InvalidCopyIndex,
    NotATree,
    UnsupportedN,
)
from .linkage import LinkSpec, linkable


class LinkTree:
    """An undirected graph on labeled vertices, normally a tree.

    Construction does not validate; call ``validate()`` or ``check_properties``.
    """

    def __init__(self, n: int, adj: dict[LabeledVertex, set[LabeledVertex]]):
        self.n = n
        self.adj = adj
        self._by_perm: Optional[dict[Perm, LabeledVertex]] = None

    @classmethod
    def from_edges(cls, n: int, vertices: Iterable[LabeledVertex], edges: Iterable[tuple]) -> "LinkTree":
        adj = {LabeledVertex(tuple(v.perm), v.label): set() for v in vertices}
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    @property
    def vertices(self) -> list[LabeledVertex]:
        return list(self.adj)

    def edges(self) -> list[tuple[LabeledVertex, LabeledVertex]]:
        out = []
        for u, nbrs in self.adj.items():
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        return out

    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges())

    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj.values()) // 2

    def __len__(self) -> int:
        return len(self.adj)

    def __contains__(self, v) -> bool:
        return v in self.adj

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinkTree):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"LinkTree(n={self.n}, vertices={len(self)}, edges={self.num_edges()})"

    def degree(self, v: LabeledVertex) -> int:
        return len(self.adj[v])

    def vertex_of(self, perm: Sequence[int]) -> Optional[LabeledVertex]:
        """The vertex ``v(perm)``, or None. Assumes one label per permutation."""
        if self._by_perm is None:
            self._by_perm = {v.perm: v for v in self.adj}
        return self._by_perm.get(tuple(perm))

    def is_leaf(self, perm: Sequence[int]) -> bool:
        v = self.vertex_of(perm)
        return v is not None and self.degree(v) == 1

    def components(self) -> int:
        seen: set = set()
        count = 0
        for root in self.adj:
            if root in seen:
                continue
            count += 1
            seen.add(root)
            stack = [root]
            while stack:
                u = stack.pop()
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return count

    def is_tree(self) -> bool:
        return len(self) > 0 and self.num_edges() == len(self) - 1 and self.components() == 1

    def link_specs(self) -> list[LinkSpec]:
        """LinkSpec for every edge; raises if an edge is not linkable."""
        out = []
        for u, v in self.edges():
            spec = linkable(u, v)
            if spec is None:
                raise InductionInvariantViolated(f"edge {u} -- {v} is not linkable")
            out.append(spec)
        return out

    def validate(self) -> None:
        """Raise unless this is a tree of linkable edges with one vertex per permutation.

        Also checks that the splice positions at each vertex are pairwise distinct,
        which is what lets every neighbour be spliced into the same short cycle.
        """
        if not self.is_tree():
            raise NotATree(repr(self))
        if len({v.perm for v in self.adj}) != len(self):
            raise InductionInvariantViolated("a permutation carries two labels")
        used: dict[LabeledVertex, set[int]] = {v: set() for v in self.adj}
        for spec in self.link_specs():
            for end in (spec.low, spec.high):
                if spec.t in used[end]:
                    raise InductionInvariantViolated(f"two splices at position {spec.t} of {end}")
                used[end].add(spec.t)


# -- properties ---------------------------------------------------------------

def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def rotated_identity(k: int, m: int) -> Perm:
    """2 3 .. k 1 (k+1) .. m  (1 moved to position k)."""
    return tuple(range(2, k + 1)) + (1,) + tuple(range(k + 1, m + 1))


def _with_tail(head: tuple, m: int) -> Perm:
    return head + tuple(range(len(head) + 1, m + 1))


@dataclass(frozen=True)
class TreeProperties:
    one_label_each: bool
    identity_label_one: bool
    rotated_identities: bool
    p32145: bool
    p243156: bool
    leaf_31245: bool
    leaf_24135: bool

    def all(self) -> bool:
        return all(getattr(self, f.name) for f in fields(self))

    def flags(self) -> list[bool]:
        return [getattr(self, f.name) for f in fields(self)]


def check_properties(tree: LinkTree) -> TreeProperties:
    """Evaluate the seven properties the induction carries from n to n+1."""
    n = tree.n
    m = n - 1
    if n < 5:
        raise UnsupportedN(f"properties are defined for n >= 5, got {n}")
    if not tree.is_tree():
        raise NotATree(repr(tree))
    perms = [v.perm for v in tree.adj]
    one_each = len(perms) == len(set(perms)) and set(perms) == set(all_perms(m))
    return TreeProperties(
        one_label_each=one_each,
        identity_label_one=LabeledVertex(identity(m), 1) in tree,
        rotated_identities=all(
            LabeledVertex(rotated_identity(k - 1, m), k) in tree for k in range(3, n + 1)
        ),
        p32145=LabeledVertex(_with_tail((3, 2, 1), m), 2) in tree,
        p243156=LabeledVertex(_with_tail((2, 4, 3, 1), m), 3) in tree,
        leaf_31245=tree.is_leaf(_with_tail((3, 1, 2), m)),
        leaf_24135=tree.is_leaf(_with_tail((2, 4, 1, 3), m)),
    )


# -- base case ---------------------------------------------------------------

BASE_PINNED = {
    (1, 2, 3, 4): 1,
    (2, 1, 3, 4): 3,
    (2, 3, 1, 4): 4,
    (2, 3, 4, 1): 5,
    (3, 2, 1, 4): 2,
    (2, 4, 3, 1): 3,
}
BASE_LEAVES = ((3, 1, 2, 4), (2, 4, 1, 3))


def labeled_vertices(n: int) -> list[LabeledVertex]:
    """All vertices of H_n, permutations in rank order, labels ascending."""
    return [LabeledVertex(p, x) for p in all_perms(n - 1) for x in range(1, n + 1)]


def link_graph(n: int) -> dict[LabeledVertex, list[LabeledVertex]]:
    """Adjacency lists of H_n (linkable pairs), built from the partner map."""
    from .linkage import partner

    adj: dict[LabeledVertex, list[LabeledVertex]] = {v: [] for v in labeled_vertices(n)}
    for a in all_perms(n - 1):
        for x in range(1, n - 1):
            for y in range(x + 2, n + 1):
                u, w = LabeledVertex(a, x), LabeledVertex(partner(a, x, y), y)
                adj[u].append(w)
                adj[w].append(u)
    for nbrs in adj.values():
        nbrs.sort(key=lambda v: (perm_rank(v.perm), v.label))
    return adj


def find_labeling(label_order: Sequence[int] = (1, 2, 3, 4, 5)) -> dict[Perm, int]:
    """Backtracking search for labels on S_4 that admit a suitable spanning tree.

    Free permutations are visited in rank order and labels tried in
    ``label_order``. A branch is cut when the vertices chosen so far can no
    longer be connected, even granting every remaining permutation all five
    labels; the two designated leaf permutations never serve as connectors.
    """
    return dict(_find_labeling(tuple(label_order)))


@lru_cache(maxsize=None)
def _find_labeling(label_order: tuple[int, ...]) -> tuple:
    n = 5
    adj = link_graph(n)
    perms = list(all_perms(n - 1))
    free = [p for p in perms if p not in BASE_PINNED]

    def connected(required: list, allowed: set) -> bool:
        if not required:
            return True
        seen = {required[0]}
        stack = [required[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return all(v in seen for v in required)

    def feasible(assign: dict) -> bool:
        allowed = set()
        for p in perms:
            if p in BASE_LEAVES:
                continue
            if p in assign:
                allowed.add(LabeledVertex(p, assign[p]))
            else:
                allowed.update(LabeledVertex(p, x) for x in range(1, n + 1))
        required = [LabeledVertex(p, x) for p, x in assign.items() if p not in BASE_LEAVES]
        return connected(required, allowed)

    def complete(assign: dict) -> bool:
        chosen = {LabeledVertex(p, x) for p, x in assign.items()}
        leaves = {LabeledVertex(p, assign[p]) for p in BASE_LEAVES}
        inner = chosen - leaves
        if not connected(sorted(inner), inner):
            return False
        return all(any(w in inner for w in adj[leaf]) for leaf in leaves)

    def search(i: int, assign: dict) -> Optional[dict]:
        if i == len(free):
            return dict(assign) if complete(assign) else None
        p = free[i]
        for x in label_order:
            assign[p] = x
            if feasible(assign):
                found = search(i + 1, assign)
                if found is not None:
                    return found
            del assign[p]
        return None

    found = search(0, dict(BASE_PINNED))
    if found is None:
        raise BaseCaseNotFound(f"no labeling with label order {label_order}")
    return tuple(found.items())


def induced_graph(n: int, vertices: Iterable[LabeledVertex]) -> LinkTree:
    """The subgraph of H_n induced on ``vertices`` (not necessarily a tree)."""
    vs = sorted(vertices, key=lambda v: (perm_rank(v.perm), v.label))
    edges = [(u, v) for u, v in combinations(vs, 2) if linkable(u, v)]
    return LinkTree.from_edges(n, vs, edges)


def find_base_tree(label_order: Sequence[int] = (1, 2, 3, 4, 5)) -> LinkTree:
    """A linking tree for n = 5 satisfying all seven properties.

    The labeling comes from ``find_labeling``; the tree is a breadth-first
    spanning tree of the non-leaf vertices rooted at ``(1234, 1)``, with each
    designated leaf hung from its first neighbour.
    """
    labels = find_labeling(label_order)
    chosen = [LabeledVertex(p, x) for p, x in labels.items()]
    graph = induced_graph(5, chosen)
    leaves = {LabeledVertex(p, labels[p]) for p in BASE_LEAVES}
    order = {v: i for i, v in enumerate(graph.vertices)}

    root = LabeledVertex(identity(4), 1)
    edges = []
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(graph.adj[u], key=order.__getitem__):
            if w in seen or w in leaves:
                continue
            seen.add(w)
            edges.append((u, w))
            queue.append(w)
    for leaf in sorted(leaves, key=order.__getitem__):
        hub = min((w for w in graph.adj[leaf] if w in seen), key=order.__getitem__)
        edges.append((hub, leaf))
    tree = LinkTree.from_edges(5, chosen, edges)
    if not check_properties(tree).all():
        raise BaseCaseNotFound("search result fails the tree properties")
    return tree


# -- induction ---------------------------------------------------------------

def embed_perm(a: Perm, k: int) -> Perm:
    """Map ``a`` in S_{n-1} into S_n for copy ``k``; value 1 lands at a k-dependent position."""
    m = len(a)
    n = m + 1
    if not 0 <= k <= n - 1:
        raise InvalidCopyIndex(f"copy index {k} outside 0..{n - 1}")
    up = [v + 1 for v in a]
    if k == 0:
        return (1, up[2], up[0], up[3], up[1]) + tuple(up[4:])
    if k == 1:
        return (up[2], 1, up[1], up[0]) + tuple(up[3:])
    return (up[k - 1],) + tuple(up[: k - 1]) + (1,) + tuple(up[k:])


def embed(v: LabeledVertex, k: int, n: Optional[int] = None) -> LabeledVertex:
    if n is not None and len(v.perm) != n - 1:
        raise ValueError(f"{v} is not a vertex of H_{n}")
    return LabeledVertex(embed_perm(v.perm, k), v.label + 1)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InductionInvariantViolated(msg)


def _link(adj: dict, u: LabeledVertex, w: LabeledVertex) -> None:
    _require(u in adj and w in adj, f"missing endpoint for {u} -- {w}")
    _require(linkable(u, w) is not None, f"{u} -- {w} is not linkable")
    adj[u].add(w)
    adj[w].add(u)


def _drop_leaf(adj: dict, by_perm: dict, perm: Perm) -> LabeledVertex:
    v = by_perm.get(perm)
    _require(v is not None, f"no vertex for {perm}")
    _require(len(adj[v]) == 1, f"{v} is not a leaf")
    (nbr,) = adj.pop(v)
    adj[nbr].discard(v)
    del by_perm[perm]
    return v


def extend(tree, trace: Optional[list] = None) -> LinkTree:
    """Build a linking tree for n + 1 from n copies of a tree for n.

    ``tree`` is one LinkTree (used for every copy) or a sequence of n trees,
    one per copy. If ``trace`` is a list, the forest's component count is
    appended after each stage: copies placed, hub added, second splice.
    """
    trees = list(tree) if isinstance(tree, (list, tuple)) else None
    n = (trees[0] if trees else tree).n
    if trees is None:
        trees = [tree] * n
    _require(len(trees) == n, f"need {n} copies, got {len(trees)}")
    _require(n >= 5, f"induction starts at n = 5, got {n}")
    m = n  # permutation length in the new tree

    adj: dict[LabeledVertex, set[LabeledVertex]] = {}
    for k, t in enumerate(trees):
        _require(t.n == n, "copies must share n")
        image = {v: embed(v, k) for v in t.adj}
        for v, nbrs in t.adj.items():
            adj[image[v]] = {image[w] for w in nbrs}
    by_perm = {v.perm: v for v in adj}
    _require(len(by_perm) == len(adj), "copies overlap")
    if trace is not None:
        trace.append(LinkTree(n + 1, adj).components())

    # identity: swap the copy-0 leaf for a hub with label 1
    ident = identity(m)
    _drop_leaf(adj, by_perm, ident)
    hub = LabeledVertex(ident, 1)
    adj[hub] = set()
    by_perm[ident] = hub
    for k in range(2, m + 1):
        target = by_perm.get(rotated_identity(k, m))
        _require(target == LabeledVertex(rotated_identity(k, m), k + 1),
                 f"expected ({rotated_identity(k, m)}, {k + 1}), found {target}")
        _link(adj, hub, target)
    if trace is not None:
        trace.append(LinkTree(n + 1, adj).components())

    # 342156..: second replaced leaf bridges copy 0 and copy 2
    p = _with_tail((3, 4, 2, 1), m)
    _drop_leaf(adj, by_perm, p)
    second = LabeledVertex(p, 1)
    adj[second] = set()
    by_perm[p] = second
    _link(adj, second, LabeledVertex(_with_tail((3, 4, 1, 2), m), 3))
    _link(adj, second, LabeledVertex(_with_tail((1, 4, 3, 2), m), 4))
    if trace is not None:
        trace.append(LinkTree(n + 1, adj).components())

    out = LinkTree(n + 1, adj)
    out._by_perm = by_perm
    return out


def build_tree(n: int, base: Optional[LinkTree] = None) -> LinkTree:
    if n < 5:
        raise UnsupportedN(f"linking trees exist for n >= 5, got {n}")
    tree = base if base is not None else find_base_tree()
    while tree.n < n:
        tree = extend(tree)
    return tree


# -- export ------------------------------------------------------------------
#
# Records format, one record per line:
#   tree <n> <vertex count> <edge count>
#   v <p_1> ... <p_{n-1}> <label>        vertex i is the i-th "v" line (0-based),
#                                         vertices sorted by permutation
#   e <i> <j> <t>                         i is the lower-labeled end, t the link position

def _export_order(tree: LinkTree) -> list[LabeledVertex]:
    return sorted(tree.adj)


def _export_edges(tree: LinkTree, index: dict) -> list[tuple[int, int, int]]:
    out = []
    for u, nbrs in tree.adj.items():
        for w in nbrs:
            if u.label < w.label:
                t = u.perm.index(w.label - 1) + 1
                out.append((index[u], index[w], t))
    out.sort()
    return out


def write_records(tree: LinkTree, out) -> None:
    order = _export_order(tree)
    index = {v: i for i, v in enumerate(order)}
    edges = _export_edges(tree, index)
    out.write(f"tree {tree.n} {len(order)} {len(edges)}\n")
    for v in order:
        out.write("v " + " ".join(map(str, v.perm)) + f" {v.label}\n")
    for i, j, t in edges:
        out.write(f"e {i} {j} {t}\n")


def read_records(lines: Iterable[str]) -> LinkTree:
    it = (ln.split() for ln in lines if ln.strip())
    head = next(it)
    if head[0] != "tree" or len(head) != 4:
        raise ValueError(f"bad header: {' '.join(head)}")
    n, nv, ne = map(int, head[1:])
    vertices: list[LabeledVertex] = []
    edges = []
    for parts in it:
        if parts[0] == "v":
            vals = tuple(map(int, parts[1:]))
            if len(vals) != n:
                raise ValueError(f"vertex record needs {n} integers: {' '.join(parts)}")
            vertices.append(LabeledVertex(vals[:-1], vals[-1]))
        elif parts[0] == "e":
            i, j, _t = map(int, parts[1:4])
            edges.append((vertices[i], vertices[j]))
        else:
            raise ValueError(f"unknown record {parts[0]!r}")
    if len(vertices) != nv or len(edges) != ne:
        raise ValueError("record counts disagree with header")
    return LinkTree.from_edges(n, vertices, edges)


def write_graphviz(tree: LinkTree, out) -> None:
    """DOT undirected graph; nodes ``v<i>`` labeled ``perm,label``, edges labeled by t."""
    order = _export_order(tree)
    index = {v: i for i, v in enumerate(order)}
    sep = "" if tree.n <= 10 else " "
    out.write(f"graph linktree_n{tree.n} {{\n")
    for i, v in enumerate(order):
        out.write(f'  v{i} [label="{sep.join(map(str, v.perm))},{v.label}"];\n')
    for i, j, t in _export_edges(tree, index):
        out.write(f'  v{i} -- v{j} [label="{t}"];\n')
    out.write("}\n")

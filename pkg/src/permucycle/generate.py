"""Universal cycles for S_n over {0, ..., n}.

A linking tree is compiled into a splice table; the merged cycle is then
walked one transition at a time. Walk state is ``(cycle id, rotation)``
packed as ``cycle * n + rotation``: the default successor is the next
rotation of the same short cycle, and a splice entry overrides it.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterator, Optional

from .cycles import LabeledVertex, base_tuple
from .errors import CycleMergeFailure, SplicePositionClash, UnsupportedN
from .treebuild import LinkTree, build_tree, identity
from .wordio import format_word

# hand-made words for the sizes below the induction
SEED_WORDS = {
    3: "012032",
    4: "012301423042103421302143",
}

CHUNK = 1 << 16


class SpliceTable:
    """Splice jumps keyed by packed state ``cycle * n + rotation``."""

    def __init__(self, n: int, cycles: list[LabeledVertex], jumps: dict[int, int]):
        self.n = n
        self.cycles = cycles
        self.index = {v: i for i, v in enumerate(cycles)}
        self.jumps = jumps

    def __len__(self) -> int:
        return len(self.jumps)

    def state(self, v: LabeledVertex, rotation: int) -> int:
        return self.index[v] * self.n + rotation % self.n

    def unpack(self, state: int) -> tuple[LabeledVertex, int]:
        c, r = divmod(state, self.n)
        return self.cycles[c], r

    def as_mapping(self) -> dict[tuple[LabeledVertex, int], tuple[LabeledVertex, int]]:
        return {self.unpack(k): self.unpack(v) for k, v in self.jumps.items()}

    def successor(self, state: int) -> int:
        nxt = self.jumps.get(state)
        if nxt is not None:
            return nxt
        return state + 1 if (state + 1) % self.n else state + 1 - self.n


def compile_splices(tree: LinkTree) -> SpliceTable:
    """Two jumps per tree edge: ``(low, t) -> (high, t+1)`` and ``(high, t) -> (low, t+1)``.

    Assumes ``tree`` is a valid linking tree (see ``LinkTree.validate``); only
    the link position is recomputed here, from ``low.perm[t] == high.label - 1``.
    """
    n = tree.n
    cycles = tree.vertices
    index = {v: i for i, v in enumerate(cycles)}
    jumps: dict[int, int] = {}
    for lo, nbrs in tree.adj.items():
        i_lo = index[lo] * n
        for hi in nbrs:
            if hi.label < lo.label + 2:
                if lo.label < hi.label + 2:
                    raise SplicePositionClash(f"{lo} -- {hi}: labels too close to link")
                continue
            t = lo.perm.index(hi.label - 1) + 1
            if hi.perm[t - 1] != lo.label:
                raise SplicePositionClash(f"{lo} -- {hi} is not a linkable pair")
            i_hi = index[hi] * n
            nxt = (t + 1) % n
            for key, dst in ((i_lo + t, i_hi + nxt), (i_hi + t, i_lo + nxt)):
                if key in jumps:
                    raise SplicePositionClash(f"two splices at rotation {t} of cycle {cycles[key // n]}")
                jumps[key] = dst
    return SpliceTable(n, cycles, jumps)


@dataclass(frozen=True)
class UWord:
    n: int
    symbols: bytes

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return format_word(self.symbols, compact=self.n <= 9)


class Walker:
    """The merged-cycle walk for one n >= 5."""

    def __init__(self, n: int, tree: Optional[LinkTree] = None):
        self.n = n
        self.tree = tree if tree is not None else build_tree(n)
        if self.tree.n != n:
            raise ValueError(f"tree is for n={self.tree.n}, not {n}")
        self.table = compile_splices(self.tree)
        # symbol emitted from state c*n + r is the head of rotation r of cycle c
        self.heads = bytes(s for v in self.table.cycles for s in base_tuple(v))
        self.start = self.table.state(LabeledVertex(identity(n - 1), 1), 0)

    def states(self) -> Iterator[int]:
        """Every walk state once, starting from the identity cycle."""
        n, jumps, start = self.n, self.table.jumps, self.start
        total = factorial(n)
        state = start
        for i in range(total):
            yield state
            nxt = jumps.get(state)
            if nxt is None:
                nxt = state + 1 if (state + 1) % n else state + 1 - n
            state = nxt
            if state == start and i != total - 1:
                raise CycleMergeFailure(f"walk closed early after {i + 1} of {total} steps")
        self._check_closed(state, total)

    def _check_closed(self, state: int, steps: int) -> None:
        if state != self.start:
            raise CycleMergeFailure(f"walk did not return to start after {steps} steps")

    def chunks(self, size: int = CHUNK) -> Iterator[bytes]:
        n, jumps, heads, start = self.n, self.table.jumps, self.heads, self.start
        total = factorial(n)
        buf = bytearray()
        state = start
        for i in range(total):
            buf.append(heads[state])
            nxt = jumps.get(state)
            if nxt is None:
                nxt = state + 1 if (state + 1) % n else state + 1 - n
            state = nxt
            if state == start and i != total - 1:
                raise CycleMergeFailure(f"walk closed early after {i + 1} of {total} steps")
            if len(buf) >= size:
                yield bytes(buf)
                buf.clear()
        self._check_closed(state, total)
        if buf:
            yield bytes(buf)


def _check_n(n: int) -> None:
    if n < 3:
        raise UnsupportedN(f"universal cycles for S_n need n >= 3, got {n}")


def iter_chunks(n: int, size: int = CHUNK, tree: Optional[LinkTree] = None) -> Iterator[bytes]:
    _check_n(n)
    if n in SEED_WORDS:
        yield bytes(int(c) for c in SEED_WORDS[n])
        return
    yield from Walker(n, tree).chunks(size)


def generate(n: int, tree: Optional[LinkTree] = None) -> UWord:
    return UWord(n, b"".join(iter_chunks(n, tree=tree)))


def stream(n: int, sink: Callable[[int], object]) -> int:
    """Feed each symbol of the n-th word to ``sink``; returns the symbol count."""
    count = 0
    for chunk in iter_chunks(n):
        for s in chunk:
            sink(s)
        count += len(chunk)
    return count

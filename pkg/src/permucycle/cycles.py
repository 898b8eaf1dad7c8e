"""Short cycles of the transition graph.

A labeled vertex ``(a, x)`` with ``a`` in S_{n-1} and ``x`` in ``1..n`` names
the n-cycle whose k-th vertex is ``rotate(shift(x, (0,) + a), k)``: the n
rotations of ``0a`` written over the alphabet ``{0..n}`` minus ``x``.
Cycles are never materialized; a vertex is ``(labeled vertex, rotation)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .core import Perm, Tuple, is_perm, rotate, shift
from .errors import InvalidLabel, InvalidPerm


class LabeledVertex(NamedTuple):
    perm: Perm
    label: int

    @property
    def n(self) -> int:
        return len(self.perm) + 1

    def __str__(self) -> str:
        sep = "" if self.n <= 10 else " "
        return f"({sep.join(map(str, self.perm))},{self.label})"


def lv(perm, label: int) -> LabeledVertex:
    """Build and validate a labeled vertex; ``perm`` may be a digit string like ``"42135"``."""
    if isinstance(perm, str):
        perm = tuple(int(c) for c in perm)
    perm = tuple(perm)
    if not is_perm(perm):
        raise InvalidPerm(f"not a permutation: {perm}")
    n = len(perm) + 1
    if not 1 <= label <= n:
        raise InvalidLabel(f"label {label} outside 1..{n}")
    return LabeledVertex(perm, label)


def base_tuple(v: LabeledVertex) -> Tuple:
    return shift(v.label, (0,) + tuple(v.perm))


@dataclass(frozen=True)
class ShortCycle:
    source: LabeledVertex
    base: Tuple

    @property
    def order(self) -> int:
        return len(self.base)

    def vertex(self, k: int) -> Tuple:
        return rotate(self.base, k)

    def vertices(self) -> list[Tuple]:
        return [self.vertex(k) for k in range(self.order)]


def short_cycle(v: LabeledVertex) -> ShortCycle:
    v = lv(v.perm, v.label)
    return ShortCycle(v, base_tuple(v))


def cycle_vertex(v: LabeledVertex, k: int) -> Tuple:
    return rotate(base_tuple(v), k)

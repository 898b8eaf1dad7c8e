"""Linking two short cycles into one.

Positions of ``a = a_1 .. a_{n-1}`` are 1-based, and position 0 of ``0a`` holds
the prepended 0, so the link position ``t`` of a pair is also the rotation
index at which the splice happens: the edge ``r^t -> r^{t+1}`` of each cycle
is swapped for the crossing edge into the other cycle.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import Perm, Tuple, is_perm
from .cycles import LabeledVertex, cycle_vertex
from .errors import InvalidPerm, NotLinkableLabels

Edge = tuple[Tuple, Tuple]


@dataclass(frozen=True)
class LinkSpec:
    low: LabeledVertex
    high: LabeledVertex
    t: int


def partner(a: Perm, x: int, y: int) -> Perm:
    """The permutation ``b`` that makes ``(a, x)`` and ``(b, y)`` linkable.

    On values this is the cycle x -> x+1 -> ... -> y-1 -> x.
    """
    n = len(a) + 1
    if not is_perm(a):
        raise InvalidPerm(f"not a permutation: {tuple(a)}")
    if not (1 <= x <= y - 2 <= n - 1):
        raise NotLinkableLabels(f"labels x={x}, y={y} need 1 <= x <= y-2 <= {n - 1}")
    return _cycle_values(a, x, y)


def _cycle_values(a: Perm, x: int, y: int) -> Perm:
    return tuple(v + 1 if x <= v <= y - 2 else (x if v == y - 1 else v) for v in a)


def linkable(u: LabeledVertex, v: LabeledVertex) -> Optional[LinkSpec]:
    """The LinkSpec for the pair, or None if the cycles are not linkable."""
    if len(u.perm) != len(v.perm):
        return None
    if u.label > v.label:
        u, v = v, u
    x, y = u.label, v.label
    n = len(u.perm) + 1
    if not (1 <= x <= y - 2 <= n - 1):
        return None
    if _cycle_values(u.perm, x, y) != tuple(v.perm):
        return None
    t = u.perm.index(y - 1) + 1
    return LinkSpec(u, v, t)


def splice_edges(spec: LinkSpec) -> tuple[list[Edge], list[Edge]]:
    """``(removed, added)`` transition edges for the splice described by ``spec``."""
    lo, hi, t = spec.low, spec.high, spec.t
    lo_t, lo_next = cycle_vertex(lo, t), cycle_vertex(lo, t + 1)
    hi_t, hi_next = cycle_vertex(hi, t), cycle_vertex(hi, t + 1)
    removed = [(lo_t, lo_next), (hi_t, hi_next)]
    added = [(lo_t, hi_next), (hi_t, lo_next)]
    return removed, added

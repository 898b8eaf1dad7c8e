import random
from collections import Counter
from itertools import permutations
from math import factorial

import pytest

from permucycle.core import all_perms, overlaps, pattern
from permucycle.cycles import LabeledVertex, cycle_vertex, lv, short_cycle
from permucycle.errors import InvalidLabel


def digits(s):
    return tuple(int(c) for c in s)


def test_paper_cycle_42135_2():
    cyc = short_cycle(lv("42135", 2))
    expected = ["053146", "531460", "314605", "146053", "460531", "605314"]
    assert cyc.vertices() == [digits(s) for s in expected]


def test_identity_cycle():
    cyc = short_cycle(lv("1234", 1))
    assert cyc.base == (0, 2, 3, 4, 5)
    assert cyc.vertices() == [digits(s) for s in ["02345", "23450", "34502", "45023", "50234"]]
    assert cyc.vertex(5) == cyc.vertex(0)


def test_cycle_vertex_indexing():
    v = lv("42135", 2)
    assert cycle_vertex(v, 0) == digits("053146")
    assert cycle_vertex(v, 1) == digits("531460")
    assert cycle_vertex(v, 7) == digits("531460")


def test_invalid_label():
    with pytest.raises(InvalidLabel):
        lv("1234", 6)
    with pytest.raises(InvalidLabel):
        short_cycle(LabeledVertex((1, 2, 3, 4), 0))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_consecutive_vertices_are_transition_edges(n):
    for a in all_perms(n - 1):
        for x in range(1, n + 1):
            vs = short_cycle(LabeledVertex(a, x)).vertices()
            assert len(set(vs)) == n
            assert all(overlaps(vs[k], vs[(k + 1) % n]) for k in range(n))
            assert vs[0][0] == 0 and x not in vs[0]


@pytest.mark.parametrize("n", [4, 5])
def test_all_short_cycles_disjoint(n):
    owner = {}
    for a in all_perms(n - 1):
        for x in range(1, n + 1):
            for t in short_cycle(LabeledVertex(a, x)).vertices():
                assert t not in owner, (t, owner.get(t), (a, x))
                owner[t] = (a, x)
    assert len(owner) == factorial(n - 1) * n * n


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("seed", range(5))
def test_any_labeling_covers_each_pattern_once(n, seed):
    rng = random.Random(seed)
    pats = Counter()
    for a in all_perms(n - 1):
        x = rng.randint(1, n)
        for k in range(n):
            pats[pattern(cycle_vertex(LabeledVertex(a, x), k))] += 1
    assert set(pats) == set(permutations(range(1, n + 1)))
    assert set(pats.values()) == {1}

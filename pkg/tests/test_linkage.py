from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from permucycle.core import all_perms, overlaps
from permucycle.cycles import LabeledVertex, base_tuple, cycle_vertex, lv, short_cycle
from permucycle.errors import NotLinkableLabels
from permucycle.linkage import LinkSpec, linkable, partner, splice_edges
from permucycle.treebuild import labeled_vertices

from .oracles import walk_spliced


def digits(s):
    return tuple(int(c) for c in s)


def valid_triples(n):
    return [(a, x, y) for a in all_perms(n - 1) for x in range(1, n + 1)
            for y in range(x + 2, n + 1)]


def test_partner_examples():
    assert partner(digits("42135"), 2, 5) == digits("23145")
    assert partner(digits("1234"), 1, 3) == digits("2134")


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_partner_of_identity_is_rotated_identity(n):
    ident = tuple(range(1, n))
    for k in range(2, n):
        expected = tuple(range(2, k + 1)) + (1,) + tuple(range(k + 1, n))
        assert partner(ident, 1, k + 1) == expected


@pytest.mark.parametrize("x,y", [(2, 3), (3, 3), (4, 2), (0, 3), (2, 8)])
def test_partner_rejects_bad_labels(x, y):
    with pytest.raises(NotLinkableLabels):
        partner(digits("42135"), x, y)


@pytest.mark.parametrize("n", [5, 6])
def test_partner_is_value_cycle(n):
    for a, x, y in valid_triples(n):
        b = partner(a, x, y)
        assert sorted(b) == list(range(1, n))
        cyc = {v: v + 1 for v in range(x, y - 1)}
        cyc[y - 1] = x
        assert b == tuple(cyc.get(v, v) for v in a)


def test_linkable_examples():
    spec = linkable(lv("42135", 2), lv("23145", 5))
    assert spec == LinkSpec(lv("42135", 2), lv("23145", 5), 1)
    assert linkable(lv("42135", 2), lv("42135", 3)) is None
    assert linkable(lv("1234", 1), lv("2134", 3)) == LinkSpec(lv("1234", 1), lv("2134", 3), 2)


def test_linkable_symmetric_on_h5():
    vs = labeled_vertices(5)
    for u, v in combinations(vs, 2):
        assert linkable(u, v) == linkable(v, u)


@pytest.mark.parametrize("n", [5])
def test_linked_bases_differ_at_t_only(n):
    for a, x, y in valid_triples(n):
        b = partner(a, x, y)
        sa = base_tuple(LabeledVertex(a, x))
        sb = base_tuple(LabeledVertex(b, y))
        diff = [i for i in range(n) if sa[i] != sb[i]]
        spec = linkable(LabeledVertex(a, x), LabeledVertex(b, y))
        assert diff == [spec.t]
        assert a[spec.t - 1] == y - 1 and b[spec.t - 1] == x


def test_figure_splice_edges():
    removed, added = splice_edges(linkable(lv("42135", 2), lv("23145", 5)))
    assert set(added) == {(digits("531460"), digits("314602")), (digits("231460"), digits("314605"))}
    assert set(removed) == {(digits("531460"), digits("314605")), (digits("231460"), digits("314602"))}
    assert all(overlaps(u, v) for u, v in added)


def test_figure_splice_forms_12_cycle():
    lo, hi = lv("42135", 2), lv("23145", 5)
    removed, added = splice_edges(linkable(lo, hi))
    path = walk_spliced([short_cycle(lo).vertices(), short_cycle(hi).vertices()],
                        removed, added, cycle_vertex(lo, 0))
    assert len(path) == 12
    assert set(path) == set(short_cycle(lo).vertices()) | set(short_cycle(hi).vertices())


@given(st.integers(4, 7), st.data())
def test_random_splices_merge(n, data):
    a = tuple(data.draw(st.permutations(range(1, n))))
    x = data.draw(st.integers(1, n - 2))
    y = data.draw(st.integers(x + 2, n))
    lo, hi = LabeledVertex(a, x), LabeledVertex(partner(a, x, y), y)
    spec = linkable(lo, hi)
    removed, added = splice_edges(spec)
    assert all(overlaps(u, v) for u, v in added + removed)
    path = walk_spliced([short_cycle(lo).vertices(), short_cycle(hi).vertices()],
                        removed, added, cycle_vertex(lo, 0))
    assert len(path) == 2 * n and len(set(path)) == 2 * n

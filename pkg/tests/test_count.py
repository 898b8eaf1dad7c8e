import random
from itertools import combinations

import pytest

from permucycle.count import (
    BASE_AUGMENTATION,
    amplification_check,
    augmented_base_graph,
    bounds,
    bounds_digits,
    enumerate_ucycles,
    graph_spanning_trees,
    induced_base_graph,
    read_edge_list,
    spanning_tree_count,
    unaugmented_base_tree,
)
from permucycle.errors import UnsupportedN
from permucycle.treebuild import LinkTree, check_properties, find_base_tree
from permucycle.verify import verify

from .oracles import is_ucycle, spanning_trees_brute

# exhaustive counts from scripts/derive_census_fixtures.py (independent brute force)
U3 = 4
U4 = 84
U3_WORDS = ["012032", "013213", "023021", "123103"]


def test_bounds_n5():
    b = bounds(5)
    assert b.lower == 420
    assert b.upper == 6 * 2 ** 115


def test_bounds_small_and_identities():
    assert bounds(3).upper == 32 and bounds(3).lower is None
    assert bounds(4).lower is None
    assert bounds(6).lower == 420 ** 5 == bounds(5).lower ** 5
    assert bounds(7).lower == bounds(5).lower ** 30
    for n in range(5, 10):
        b = bounds(n)
        assert b.lower <= b.upper
    with pytest.raises(UnsupportedN):
        bounds(2)


@pytest.mark.parametrize("n", [5, 6, 7, 8])
def test_bounds_digits_exact(n):
    b = bounds(n)
    d = bounds_digits(n)
    for value, digits in ((b.upper, d["upper_digits"]), (b.lower, d["lower_digits"])):
        assert 10 ** (digits - 1) <= value < 10 ** digits


def test_census_n3():
    count, words = enumerate_ucycles(3)
    assert count == U3
    assert words == U3_WORDS
    assert "012032" in words
    assert all(verify(3, w).valid and is_ucycle(3, [int(c) for c in w]) for w in words)
    assert 1 <= count <= bounds(3).upper


def test_census_n4():
    count, words = enumerate_ucycles(4)
    assert count == U4 == len(words) == len(set(words))
    assert "012301423042103421302143" in words
    assert all(verify(4, w).valid for w in words)
    assert all(list(w[:4]) == sorted(w[:4]) for w in words)
    assert 1 <= count <= bounds(4).upper


def test_census_n3_brute_force():
    # every normalized word of length 6 over {0..3}, no pruning
    from itertools import product

    found = sorted(
        "".join(map(str, first + rest))
        for first in combinations(range(4), 3)
        for rest in product(range(4), repeat=3)
        if is_ucycle(3, first + rest)
    )
    assert found == U3_WORDS


def test_census_rejects_other_n():
    with pytest.raises(UnsupportedN):
        enumerate_ucycles(5)


def test_spanning_tree_count_small():
    k4 = list(combinations(range(4), 2))
    assert spanning_tree_count(4, k4) == 16
    assert spanning_tree_count(4, [(0, 1), (1, 2), (2, 3), (3, 0)]) == 4
    assert spanning_tree_count(5, [(0, 1), (1, 2), (1, 3), (3, 4)]) == 1
    assert spanning_tree_count(4, [(0, 1), (2, 3)]) == 0
    assert spanning_tree_count(2, [(0, 1), (0, 1), (0, 1)]) == 3
    assert spanning_tree_count(1, []) == 1


@pytest.mark.parametrize("n", range(2, 9))
def test_cayley(n):
    assert spanning_tree_count(n, list(combinations(range(n), 2))) == n ** (n - 2)


def random_connected_graph(rng, max_v=6, max_e=9):
    while True:
        v = rng.randint(1, max_v)
        e = rng.randint(max(0, v - 1), max_e)
        edges = [tuple(rng.sample(range(v), 2)) if v > 1 else (0, 0) for _ in range(e)]
        edges = [x for x in edges if x[0] != x[1]]
        if len(spanning_trees_brute(v, edges)) > 0:
            return v, edges


def test_spanning_tree_count_vs_brute_force():
    rng = random.Random(2024)
    for _ in range(100):
        v, edges = random_connected_graph(rng)
        assert spanning_tree_count(v, edges) == len(spanning_trees_brute(v, edges))


def test_read_edge_list(tmp_path):
    path = tmp_path / "k4.edges"
    path.write_text("c complete graph\np 4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    v, edges = read_edge_list(path)
    assert v == 4 and spanning_tree_count(v, edges) == 16
    path.write_text("p 4 2\n1 2\n")
    with pytest.raises(ValueError):
        read_edge_list(path)
    path.write_text("1 2\n")
    with pytest.raises(ValueError):
        read_edge_list(path)


def test_augmentation_reproduces_420(base_tree):
    graph = induced_base_graph(base_tree)
    assert graph.num_edges() == 26
    for u, v in BASE_AUGMENTATION:
        assert v in graph.adj[u]
    tree = unaugmented_base_tree(base_tree)
    assert check_properties(tree).all()
    augmented = augmented_base_graph(tree)
    assert augmented.edge_set() == graph.edge_set()
    assert graph_spanning_trees(augmented) == 420


def test_every_spanning_tree_of_augmented_graph_is_suitable(base_tree):
    graph = induced_base_graph(base_tree)
    vs = graph.vertices
    index = {v: i for i, v in enumerate(vs)}
    edges = graph.edges()
    subsets = spanning_trees_brute(len(vs), [(index[u], index[v]) for u, v in edges])
    assert len(subsets) == 420
    for sub in subsets:
        t = LinkTree.from_edges(5, vs, [edges[i] for i in sub])
        assert check_properties(t).all()


def test_amplification(base_tree):
    other = find_base_tree((5, 4, 3, 2, 1))
    assert amplification_check(base_tree, other)
    with pytest.raises(ValueError):
        amplification_check(base_tree, base_tree)


def test_amplification_same_labels_different_edges(base_tree):
    assert amplification_check(base_tree, unaugmented_base_tree(base_tree))

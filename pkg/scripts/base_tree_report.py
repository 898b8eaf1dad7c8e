"""Inspect the searched base tree for n = 5 and the three extra linkable pairs.

Prints the labeling, the tree edges with link positions, and the spanning
tree count of the graph obtained by adding the extra pairs.
"""
from permucycle.count import (
    BASE_AUGMENTATION,
    augmented_base_graph,
    graph_spanning_trees,
    induced_base_graph,
    unaugmented_base_tree,
)
from permucycle.linkage import linkable
from permucycle.treebuild import check_properties, find_base_tree


def main():
    tree = find_base_tree()
    print("labeling:", " ".join(str(v) for v in sorted(tree.adj)))
    print("properties:", check_properties(tree).flags())
    print("BFS tree edges (low -- high @ t):")
    for u, v in sorted(tree.edges()):
        spec = linkable(u, v)
        print(f"  {spec.low} -- {spec.high} @ {spec.t}")

    induced = induced_base_graph(tree)
    print(f"induced subgraph of H_5: {len(induced)} vertices, {induced.num_edges()} edges")
    bare = unaugmented_base_tree(tree)
    print(f"induced minus extra pairs: tree={bare.is_tree()} properties={check_properties(bare).all()}")
    aug = augmented_base_graph(bare)
    print("extra pairs:", ", ".join(f"{u}-{v}" for u, v in BASE_AUGMENTATION))
    print("spanning trees of tree + extra pairs:", graph_spanning_trees(aug))


if __name__ == "__main__":
    main()

"""Universal cycles for permutations over the alphabet {0, ..., n}."""
from .core import order_isomorphic, pattern, perm_rank, perm_unrank, rotate, shift
from .count import bounds, enumerate_ucycles, spanning_tree_count
from .cycles import LabeledVertex, cycle_vertex, lv, short_cycle
from .generate import UWord, compile_splices, generate, iter_chunks, stream
from .linkage import LinkSpec, linkable, partner, splice_edges
from .treebuild import LinkTree, build_tree, check_properties, embed, extend, find_base_tree
from .verify import VerifyReport, verify, verify_stream

__all__ = [
    "order_isomorphic",
    "pattern",
    "perm_rank",
    "perm_unrank",
    "rotate",
    "shift",
    "bounds",
    "enumerate_ucycles",
    "spanning_tree_count",
    "LabeledVertex",
    "cycle_vertex",
    "lv",
    "short_cycle",
    "UWord",
    "compile_splices",
    "generate",
    "iter_chunks",
    "stream",
    "LinkSpec",
    "linkable",
    "partner",
    "splice_edges",
    "LinkTree",
    "build_tree",
    "check_properties",
    "embed",
    "extend",
    "find_base_tree",
    "VerifyReport",
    "verify",
    "verify_stream",
]

__version__ = "0.1.0"

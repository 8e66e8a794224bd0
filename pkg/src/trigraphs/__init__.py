"""Trigraphs, forbidden-structure detection and the {ISK4, wheel}-free decomposition."""

from .core import (
    AdjValue,
    NarrowPath,
    SimpleGraph,
    Trigraph,
    complement,
    components,
    delete,
    full_realization,
    induced,
    is_connected,
    is_narrow_path,
    null_realization,
    realizations,
    semi_realizations,
)
from .cutsets import CutKind, CutPartition, CutsetReport, cut_partition_for, find_clique_cutset, find_stable_2_cutset
from .decomposer import ClassLabel, Leaf, Split, classify, decompose, tree_to_dict, tree_to_json
from .freeness import Pattern, Witness, find_ISK4, find_wheel, is_free, trigraph_is_free
from .structure import (
    as_complete_bipartite,
    as_line_trigraph,
    as_prism,
    is_qualified_line_trigraph,
    is_series_parallel,
    qualify_root,
)
from .triformat import TriFormatError, format_tri, parse_tri, read_tri, write_tri

__all__ = [
    "AdjValue", "NarrowPath", "SimpleGraph", "Trigraph", "complement", "components", "delete",
    "full_realization", "induced", "is_connected", "is_narrow_path", "null_realization",
    "realizations", "semi_realizations",
    "CutKind", "CutPartition", "CutsetReport", "cut_partition_for", "find_clique_cutset",
    "find_stable_2_cutset",
    "ClassLabel", "Leaf", "Split", "classify", "decompose", "tree_to_dict", "tree_to_json",
    "Pattern", "Witness", "find_ISK4", "find_wheel", "is_free", "trigraph_is_free",
    "as_complete_bipartite", "as_line_trigraph", "as_prism", "is_qualified_line_trigraph",
    "is_series_parallel", "qualify_root",
    "TriFormatError", "format_tri", "parse_tri", "read_tri", "write_tri",
]

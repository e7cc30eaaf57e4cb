"""girthlab: directed girth, short-cycle certificates, and product-set bounds.

The library splits into graph-side tools (exact girth, the 2n/(r+1)
short-cycle finder, circulant extremal constructions, automorphism-based
reductions) and group-side tools (product sets, the Kemperman pair and power
bounds, Sidon machinery), joined by Cayley graphs and a desk-scale verifier
for the outdegree-forces-short-cycles conjecture.
"""

from .digraph import (
    Cycle,
    Digraph,
    girth,
    girth_of_rows,
    has_digon,
    has_loop,
    load_edge_list,
    min_outdegree,
    parse_edge_list,
    second_neighborhood_witness,
)
from .groups import (
    FiniteGroup,
    GroupSubset,
    cyclic,
    direct_product,
    from_table,
    is_subgroup,
    iterated_power,
    left_cosets,
    load_cayley_table,
    parse_cayley_table,
    product_set,
)
from .kemperman import (
    check_conditions,
    scan_group,
    verify_pair_bound,
    verify_power_bound,
)
from .cayley import (
    CayleySpec,
    build,
    cayley_girth,
    circulant_extremal,
    girth_witness_word,
    hamidoune_cayley_bound,
    is_connected,
    regular_girth_cayley,
)
from .cs_finder import cs_bound, find_short_cycle, shen_bound
from .transitive import (
    AutomorphismGroup,
    Permutation,
    automorphism_group,
    hamidoune_cycle,
    is_vertex_transitive,
    stabilizer,
)
from .additive import (
    BipartiteLabeled,
    SidonSet,
    fox_labeling,
    graph_sum,
    greedy_sidon,
    greene_construction,
    greene_digest,
    is_sidon,
    representation_function,
)
from .verifier import (
    VerificationReport,
    digon_check,
    exhaustive_ch,
    sampled_ch,
    triangle_threshold,
    triangle_threshold_check,
)

__version__ = "0.1.0"

__all__ = [
    "Cycle", "Digraph", "girth", "girth_of_rows", "has_digon", "has_loop",
    "load_edge_list", "min_outdegree", "parse_edge_list",
    "second_neighborhood_witness",
    "FiniteGroup", "GroupSubset", "cyclic", "direct_product", "from_table",
    "is_subgroup", "iterated_power", "left_cosets", "load_cayley_table",
    "parse_cayley_table", "product_set",
    "check_conditions", "scan_group", "verify_pair_bound", "verify_power_bound",
    "CayleySpec", "build", "cayley_girth", "circulant_extremal",
    "girth_witness_word", "hamidoune_cayley_bound", "is_connected",
    "regular_girth_cayley",
    "cs_bound", "find_short_cycle", "shen_bound",
    "AutomorphismGroup", "Permutation", "automorphism_group",
    "hamidoune_cycle", "is_vertex_transitive", "stabilizer",
    "BipartiteLabeled", "SidonSet", "fox_labeling", "graph_sum",
    "greedy_sidon", "greene_construction", "greene_digest", "is_sidon",
    "representation_function",
    "VerificationReport", "digon_check", "exhaustive_ch", "sampled_ch",
    "triangle_threshold", "triangle_threshold_check",
    "__version__",
]

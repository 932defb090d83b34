"""gent: graph entropy and its combinatorial companions.

Graph entropy H_k(G, P) is the least value of sum_v p_v log2(1/a_v) over
points a of the vertex packing polytope of G. The package computes it two
ways (Frank-Wolfe and alternating minimisation), evaluates the closed forms,
and provides the surrounding exact combinatorics: fractional chromatic
numbers, minimum-entropy colorings, symmetry criteria and the counting
bounds proved with entropy.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .closed_forms import (
    BipartiteEntropyReport,
    bipartite_entropy,
    entropy_by_components,
    entropy_complete,
    entropy_complete_multipartite,
)
from .coloring import (
    ColorSequence,
    Coloring,
    chi_H,
    chromatic_entropy_lower_bound,
    chromatic_number,
    clique_entropy,
    grundy_number,
    max_chi_H,
    min_entropy_coloring,
)
from .corner import (
    EntropyResult,
    FractionalVertexPacking,
    UnitCorner,
    VertexPacking,
    antiblocker_identity_check,
    corner_entropy,
    entropy_am,
    entropy_fw,
    graph_entropy,
    max_entropy_distribution,
    splitting_gap,
)
from .counting import PointSet3D, bregman_bound, count_perfect_matchings, shearer_check
from .errors import (
    CapExceeded,
    ConsistencyError,
    GentError,
    GraphParseError,
    InvalidInput,
    NonConvergence,
    NotBipartite,
)
from .fractional import (
    fractional_chromatic_number,
    fractional_edge_chromatic,
    is_k_graph,
    lp_solve,
    matching_polytope_member,
)
from .graph import (
    Graph,
    complement,
    conormal_power,
    generate,
    line_graph,
    normal_power,
    or_product,
    parse_graph,
    substitute,
)
from .prob import distribution, entropy, uniform
from .symmetry import (
    SymmetryVerdict,
    check_bipartite_symmetric,
    check_line_graph_symmetric,
    check_perfect_symmetric,
    is_perfect,
    max_clique_partition,
    numeric_symmetry_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]

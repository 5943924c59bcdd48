"""Acyclic edge colorings: exact search, verification, lower bounds and
constructions for dense regular and complete bipartite graphs."""

from .bounds import (
    BoundReport,
    counting_lower_bound,
    graph_lower_bound,
    robust_counting_check,
    theorem3_bound,
    theorem3_report,
)
from .coloring import (
    EdgeColoring,
    Verdict,
    class_sizes,
    find_bichromatic_cycle,
    is_proper,
    missing_colors,
    pair_structure,
    parse_coloring,
    serialize_coloring,
    verify_acyclic,
)
from .constructions import (
    BipartiteLabeling,
    circulant_graph,
    cocktail_party_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    cyclic_p1f,
    extend_to_bipartite_plus_one,
    is_perfect_1factorization,
    p1f_restrict,
    theorem2_splice,
)
from .graph import (
    Graph,
    degree_profile,
    delete_vertices,
    is_connected,
    is_regular,
    parse_graph,
    serialize_graph,
)
from .permutations import (
    PerfectMatchingSet,
    Permutation,
    compose,
    cycle_type,
    inverse,
    lemma1_exhaustive_oracle,
    lemma1_sign_check,
    sign,
    union_is_hamiltonian,
)
from .solver import (
    SearchConfig,
    SolveResult,
    acyclic_chromatic_index,
    brute_force_oracle,
    exists_acyclic_coloring,
)

__version__ = "0.1.0"

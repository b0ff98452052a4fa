"""Splittings and JSJ decompositions of right-angled Artin groups.

Everything is driven by the defining graph: A(g) splits freely iff g is
disconnected, splits over Z iff g is not biconnected (three or more vertices),
and the reduced JSJ decomposition of a one-ended A(g) is read off the block
tree of g.  All values are immutable and all functions are pure.
"""

from .blocks import BlockTree, bicomponents, block_tree, cut_vertices, is_biconnected
from .graphs import (
    CapacityError,
    GraphError,
    ParseError,
    SimplicialGraph,
    clique_counts,
    connected_components,
    euler_characteristic,
    induced_subgraph,
    parse_graph,
    shortest_path_avoiding,
    two_edge_segments,
    verify_hamiltonian_cycle,
)
from .jsj import (
    CyclicGroup,
    GoGEdge,
    GoGVertex,
    GraphOfGroups,
    RaagGroup,
    build_j0,
    collapse_to_j,
    is_reduced,
    jsj,
)
from .presentations import (
    Presentation,
    abelianization,
    check_coverage,
    check_euler,
    emit_presentation,
    free_reduce,
    raag_presentation,
    smith_normal_form,
)
from .splitting import (
    FreeSplitWitness,
    NonSplitCover,
    SmallCaseWitness,
    SplitReport,
    ZSplitWitness,
    cover_defects,
    nonsplit_cover,
    splits_freely,
    splits_over_z,
    verify_cover,
    z_split_witness,
)

__all__ = [
    "BlockTree",
    "CapacityError",
    "CyclicGroup",
    "FreeSplitWitness",
    "GoGEdge",
    "GoGVertex",
    "GraphError",
    "GraphOfGroups",
    "NonSplitCover",
    "ParseError",
    "Presentation",
    "RaagGroup",
    "SimplicialGraph",
    "SmallCaseWitness",
    "SplitReport",
    "ZSplitWitness",
    "abelianization",
    "bicomponents",
    "block_tree",
    "build_j0",
    "check_coverage",
    "check_euler",
    "clique_counts",
    "collapse_to_j",
    "connected_components",
    "cover_defects",
    "cut_vertices",
    "emit_presentation",
    "euler_characteristic",
    "free_reduce",
    "induced_subgraph",
    "is_biconnected",
    "is_reduced",
    "jsj",
    "nonsplit_cover",
    "parse_graph",
    "raag_presentation",
    "shortest_path_avoiding",
    "smith_normal_form",
    "splits_freely",
    "splits_over_z",
    "two_edge_segments",
    "verify_cover",
    "verify_hamiltonian_cycle",
    "z_split_witness",
]

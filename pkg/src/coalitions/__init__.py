"""Exact, certified computation of total k-coalition and double coalition
numbers in graphs: verification, bounds, branch-and-bound solving, extremal
family constructions, and exhaustive small-graph scans."""

from .bounds import (
    BoundEntry,
    Certificate,
    Kind,
    bound_report_dc,
    bound_report_tc,
    certify,
    conjectured_tc2,
    double_upper_formula,
)
from .coalition import (
    CoalitionGraph,
    VerificationReport,
    coalition_graph,
    is_coalition,
    verify_partition,
    vertex_cover_number,
)
from .constructions import (
    CertifiedInstance,
    build_extremal_dc,
    build_extremal_tc,
    min_degree_partition,
    partition_from_domatic,
    universal_clique_count,
)
from .domination import (
    DOUBLE,
    DominationTable,
    Mode,
    closed_tuple,
    is_admissible,
    is_dominating,
    max_domatic_partition,
    min_dominating_size,
    open_total,
    require_admissible,
    shrink_to_minimal,
)
from .errors import (
    CertificationError,
    CoalitionsError,
    ConstructionError,
    FixtureError,
    Graph6Error,
    GuardExceededError,
    InadmissibleModeError,
    NotConnectedError,
    SolveError,
)
from .graph import (
    FamilySpec,
    Graph,
    complete,
    complete_multipartite,
    cycle,
    degree_stats,
    from_edges,
    generate,
    is_connected,
    iter_bits,
    join,
    mask_of,
    parse_family,
    petersen,
    set_to_list,
    star,
)
from .graph6 import parse_graph6, write_graph6
from .solver import SolveResult, SolveStats, brute_force_oracle, feasible_c, solve_exact
from .universe import bounded_degree_graphs, labeled_graphs, set_partitions, universe

__version__ = "0.1.0"

__all__ = [
    "BoundEntry",
    "Certificate",
    "CertificationError",
    "CertifiedInstance",
    "CoalitionGraph",
    "CoalitionsError",
    "ConstructionError",
    "DOUBLE",
    "DominationTable",
    "FamilySpec",
    "FixtureError",
    "Graph",
    "Graph6Error",
    "GuardExceededError",
    "InadmissibleModeError",
    "Kind",
    "Mode",
    "NotConnectedError",
    "SolveError",
    "SolveResult",
    "SolveStats",
    "VerificationReport",
    "bound_report_dc",
    "bound_report_tc",
    "bounded_degree_graphs",
    "brute_force_oracle",
    "build_extremal_dc",
    "build_extremal_tc",
    "certify",
    "closed_tuple",
    "coalition_graph",
    "complete",
    "complete_multipartite",
    "conjectured_tc2",
    "cycle",
    "degree_stats",
    "double_upper_formula",
    "feasible_c",
    "from_edges",
    "generate",
    "is_admissible",
    "is_coalition",
    "is_connected",
    "is_dominating",
    "iter_bits",
    "join",
    "labeled_graphs",
    "mask_of",
    "max_domatic_partition",
    "min_degree_partition",
    "min_dominating_size",
    "open_total",
    "parse_family",
    "parse_graph6",
    "partition_from_domatic",
    "petersen",
    "require_admissible",
    "set_partitions",
    "set_to_list",
    "shrink_to_minimal",
    "solve_exact",
    "star",
    "universal_clique_count",
    "universe",
    "verify_partition",
    "vertex_cover_number",
    "write_graph6",
]

"""degix: degree-based graph index toolkit.

Computes the first geometric-arithmetic (GA) and atom-bond connectivity
(ABC) indices with certified interval enclosures, recognizes line graphs,
generates the relevant graph families, and machine-verifies the known
GA-versus-ABC comparison statements on concrete graphs, including
exhaustive sweeps over all small connected graphs and trees.
"""

from .graphs import (
    DegreeStats,
    EdgeDegreeCensus,
    Graph,
    Graph6ParseError,
    GraphConstructionError,
    build_graph,
    canonical_form,
    connectivity,
    degree_stats,
    edge_degree_census,
    format_edge_list,
    graph6_decode,
    graph6_encode,
    is_connected,
    is_tree,
    parse_edge_list,
    permute,
)
from .intervals import CertifiedValue, Interval, interval_json, precision_ladder
from .indices import (
    ComparisonVerdict,
    Sign,
    abc_index,
    compare_ga_abc,
    ga_general,
    ga_index,
    phi_term,
    theta_term,
)
from .linegraph import (
    LineGraphViolation,
    TriangleRecord,
    is_line_graph,
    is_molecular,
    line_graph,
    odd_triangles,
)
from .families import (
    FamilyError,
    FamilyKind,
    FamilySpec,
    boundary_bipartite,
    generate,
    parse_family_spec,
    wheel_closed_forms,
)
from .theorems import (
    Clause,
    CrossoverResult,
    HypothesisCheck,
    PreconditionError,
    SandwichReport,
    SideStatus,
    TheoremFalsified,
    TheoremId,
    TheoremReport,
    check_hypothesis,
    check_sandwich,
    consistency_sweep,
    crossover_scan,
    gamma,
    lemma_f,
    lemma_positivity_scan,
    verify_theorem,
)
from .search import (
    ScanResult,
    ScanRow,
    SweepRow,
    enumerate_connected,
    enumerate_trees,
    scan_conjecture,
    scan_rows,
    summarize_scan,
    sweep_family,
)

__version__ = "0.1.0"

"""Sun and building detection in graphs, with certificate validation and elimination-ordering checks."""

from .buildings import (
    find_building,
    find_building_fast,
    find_bull_with_nose,
    find_gem,
    find_near_building,
    list_triangles,
)
from .bulls import SchemeReport, bull_free_elimination_order, check_lbfs_nose_free, d2_p4_check
from .certificates import (
    BuildingCertificate,
    ContractError,
    GemWitness,
    NoseBull,
    SunCertificate,
    SunflowerCertificate,
    validate_building,
    validate_sun,
    validate_sunflower,
)
from .graph import Graph, GraphError, from_edges, induced_subgraph, is_clique, neighbors, non_neighbors
from .oracle import OracleRefusal, StructureKind, is_sun_graph, oracle_find, oracle_has_sun
from .orderings import (
    Ordering,
    OrderingReport,
    check_p_star,
    is_chordal,
    is_perfect_elimination,
    is_simple,
    is_simplicial,
    is_strong_elimination,
    is_strongly_chordal,
    lbfs,
)
from .sun import (
    BuildingPresent,
    TipSearchState,
    extract_sun,
    find_sun,
    in_3_sun,
    n_dominates,
    scc_completion,
    sunflower_to_sun,
    tip_of_sunflower,
)

__version__ = "0.1.0"

from .complexes import (
    SimplicialComplex,
    minimal_transversals,
    minimal_transversals_bruteforce,
    maximal_faces,
    stanley_reisner_complex,
    stanley_reisner_ideal,
    facet_complex,
    facet_ideal,
    alexander_dual_complex,
    minimal_vertex_covers,
    is_pure,
)
from .primes import (
    DualRoutes,
    Height2Report,
    dual_ideal,
    dual_ideal_routes,
    minimal_primes,
    height2_classification,
    is_flag_dual,
)
from .poset_duals import (
    IntersectionReport,
    OneCogeneratedReport,
    poset_ideal_dual,
    coideal_dual,
    intersect_ideal_coideal,
    one_cogenerated_split,
)
from .cohen_macaulay import (
    GraftReport,
    eagon_reiner_cm,
    is_shellable,
    is_cohen_macaulay,
    graft,
    graft_check,
    random_complex,
)
from .bipartite import (
    BipartiteGraph,
    BipartiteLattice,
    FacetIdealReport,
    edge_ideal,
    perfect_matching,
    bipartite_lattice,
    facet_ideal_cm_check,
)

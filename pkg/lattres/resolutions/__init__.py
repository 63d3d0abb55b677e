from .complex import (
    BasisElement,
    Entry,
    FreeComplex,
    VerificationReport,
    taylor_complex,
    verify_complex,
    verify_resolution,
    is_minimal,
    minimize,
    same_differential,
)
from .mapping_cone import (
    mapping_cone_resolution,
    meet_distributive_differential,
    differential_shape_report,
    neighbor_order,
    basis_size,
)
from .betti import (
    BettiTable,
    RegularityBounds,
    betti_oracle,
    betti_table_from_complex,
    regularity,
    regularity_bounds,
    has_linear_resolution,
)

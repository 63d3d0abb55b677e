from .monomial import (
    SquarefreeMonomial,
    UNIT,
    Ring,
    MonomialIdeal,
    minimize,
    minimal_generators,
    colon_by_monomial,
    ideal_sum,
    ideal_intersection,
    ideal_membership,
    ideal_equal,
    lcm_closure,
    lcm_lattice_degrees,
    format_monomial,
    parse_monomial,
    parse_ideal,
)
from .lattice_ideals import (
    lattice_ring,
    generator_monomial,
    subfamily_ideal,
    lattice_ideal,
    predecessor_ideal,
    colon_formula,
    one_cogenerated_ideal,
    rank_range_ideal,
    interior_ideal,
)
from .quotients import linear_quotients_check, linear_quotients_search

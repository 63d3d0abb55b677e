from .poset import (
    Poset,
    PosetIdeal,
    PosetCoideal,
    build_poset,
    downset,
    upset,
    generators,
    cogenerators,
    enumerate_poset_ideals,
    dual_poset,
    interval,
    is_poset_ideal,
    is_poset_coideal,
)
from .semilattice import (
    MeetSemilattice,
    Classification,
    BirkhoffCompletion,
    build_semilattice,
    semilattice_from_covers,
    meet_set,
    lower_neighbors,
    join,
    classify,
    birkhoff_completion,
    distributive_lattice,
    boolean_lattice,
    chain,
    insert_between,
    add_top,
    unique_minimal_joins,
    meet_distributive_characterizations,
)
from .generate import enumerate_posets, enumerate_semilattices, random_semilattice, random_poset

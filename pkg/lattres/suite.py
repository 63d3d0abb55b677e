"""
Property suite over exhaustively generated and sampled populations.

Every check states an equivalence, an identity or a bound that holds for all members of its population; a falsified check names the failing members. `run_suite` evaluates the checks with `~lattres.main.run` or `~lattres.main.run_multiprocess` and collects the counts in a pandas DataFrame that can be appended to a csv file.
"""
from __future__ import annotations
from typing import Dict, Iterable, List, Optional, Union
from datetime import datetime
from functools import reduce
from operator import and_
from pathlib import Path
from random import Random
import pandas as pd
from sympy.polys.domains.domain import Domain
from .configuration import field_name, get_config, get_field
from .duality.cohen_macaulay import eagon_reiner_cm, graft_check, is_shellable
from .duality.complexes import alexander_dual_complex, stanley_reisner_complex
from .duality.poset_duals import coideal_dual, intersect_ideal_coideal, one_cogenerated_split, poset_ideal_dual
from .duality.primes import dual_ideal, dual_ideal_routes, height2_classification, is_flag_dual
from .exceptions import NotAComplex, NotExact, WrongH0
from .ideals.lattice_ideals import (
    colon_formula,
    lattice_ideal,
    predecessor_ideal,
    subfamily_ideal,
    u_mask,
    x_part,
    y_part,
)
from .ideals.monomial import SquarefreeMonomial, colon_by_monomial, minimal_generators
from .ideals.quotients import linear_quotients_search
from .main import BenchmarkSuite, Check, initialize, run, run_multiprocess
from .posets.poset import ideal_masks, iter_bits, mask_of
from .posets.semilattice import (
    MeetSemilattice,
    insert_between,
    is_distributive,
    is_meet_distributive,
    is_meet_irredundant,
    is_upper_semimodular,
    meet_distributive_characterizations,
)
from .resolutions.betti import betti_oracle, betti_table_from_complex, has_linear_resolution, regularity_bounds
from .resolutions.complex import is_minimal, minimize, same_differential, verify_resolution
from .resolutions.mapping_cone import differential_shape_report, mapping_cone_resolution, meet_distributive_differential


def _trivial(L: MeetSemilattice) -> bool:
    """The one-element semilattice, whose ideal is the unit ideal."""
    return L.n == 1


def _resolves(complex, ideal) -> bool:
    try:
        verify_resolution(complex, ideal)
    except (NotAComplex, NotExact, WrongH0):
        return False
    return True


def check_embedding(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """``ell`` is injective and order reflecting, sends meets to intersections, and every element is the join of ``ell`` of it."""
    ell = L.ell
    for s in range(L.n):
        if L.rank[s] > L.deg[s]:
            return False
        if s != L.bottom and L.join_of(mask_of(L.irreducibles[k] for k in iter_bits(ell[s]))) != s:
            return False
        for t in range(L.n):
            if (ell[s] == ell[t]) != (s == t):
                return False
            if (ell[s] & ~ell[t] == 0) != L.poset.le(s, t):
                return False
            if ell[s] & ell[t] != ell[L.meet(s, t)]:
                return False
    return True


def check_characterizations(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    return len(set(meet_distributive_characterizations(L).values())) == 1


def check_generators(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """Every ``u_q`` splits ``P`` into its ``x`` and ``y`` parts; on lattices no variable divides all generators."""
    if _trivial(L):
        return None
    m = len(L.irreducibles)
    full = (1 << m) - 1
    gens = [SquarefreeMonomial(u_mask(L, q)) for q in range(L.n)]
    for u in gens:
        x, y = x_part(L, u), y_part(L, u)
        if x | y != full or x & y or u.degree != m:
            return False
    ideal = lattice_ideal(L)
    if minimal_generators(minimal_generators(ideal)) != ideal or not all(ideal.contains(u) for u in gens):
        return False
    if L.is_lattice:
        return reduce(and_, (u.mask for u in gens)) == 0
    return True


def check_colon_formula(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    if _trivial(L):
        return None
    for p in L.order:
        if p == L.bottom:
            continue
        label = L.label(p)
        u = SquarefreeMonomial(u_mask(L, p))
        if colon_by_monomial(predecessor_ideal(L, label), u) != colon_formula(L, label):
            return False
    return True


def check_linear_quotients(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """Meet-distributive iff ``H_L`` has linear quotients iff ``H_L`` has a linear resolution, with linear first syzygies in the same cases."""
    if _trivial(L):
        return None
    ideal = lattice_ideal(L)
    distributive = is_meet_distributive(L)
    quotients = linear_quotients_search(ideal) is not None
    linear = has_linear_resolution(ideal, domain)
    d = len(L.irreducibles)
    linear_relations = all(j == d + 1 for i, j in betti_oracle(ideal, domain).graded if i == 1)
    return distributive == quotients == linear == linear_relations


def check_mapping_cone(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """The mapping cone complex resolves ``H_L``; it is minimal iff ``L`` is meet-irredundant, and its minimization has the Betti numbers of the oracle."""
    if _trivial(L):
        return None
    ideal = lattice_ideal(L)
    complex = mapping_cone_resolution(L, domain)
    if not _resolves(complex, ideal):
        return False
    oracle = betti_oracle(ideal, domain)
    if is_minimal(complex) != is_meet_irredundant(L):
        return False
    if is_meet_irredundant(L) and betti_table_from_complex(complex) != oracle:
        return False
    return betti_table_from_complex(minimize(complex)) == oracle


def check_closed_form(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """The closed-form differential resolves ``H_L`` minimally and multihomogeneously when ``L`` is meet-distributive, and equals the mapping cone differential."""
    if _trivial(L) or not is_meet_distributive(L):
        return None
    ideal = lattice_ideal(L)
    complex = meet_distributive_differential(L, domain)
    if not _resolves(complex, ideal):
        return False
    for i in range(1, complex.length + 1):
        for row, col, entry in complex.entries(i):
            source, target = complex.modules[i][col], complex.modules[i - 1][row]
            if not target.multidegree.divides(source.multidegree) or entry.monomial != source.multidegree / target.multidegree:
                return False
    return (
        is_minimal(complex)
        and same_differential(complex, mapping_cone_resolution(L, domain))
        and betti_table_from_complex(complex) == betti_oracle(ideal, domain)
    )


def check_differential_shape(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    if _trivial(L) or not is_meet_irredundant(L):
        return None
    return differential_shape_report(L, mapping_cone_resolution(L, domain)).ok


def check_regularity(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """The combinatorial bound holds, with equality for meet-irredundant ``L``."""
    if _trivial(L):
        return None
    value = betti_oracle(lattice_ideal(L), domain).regularity
    bounds = regularity_bounds(L)
    if value > bounds.upper:
        return False
    return value == bounds.exact if is_meet_irredundant(L) else True


def check_insert_between(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """Subdividing a cover of a meet-irredundant semilattice keeps it meet-irredundant."""
    covers = L.poset.covers
    if not covers or not is_meet_irredundant(L):
        return None
    q, p = covers[rng.randrange(len(covers))]
    return is_meet_irredundant(insert_between(L, L.label(q), L.label(p)))


def check_dual_routes(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """The three routes to the dual of ``H_L`` agree, and dualizing twice gives back ``H_L``."""
    if _trivial(L):
        return None
    ideal = lattice_ideal(L)
    routes = dual_ideal_routes(ideal)
    return routes.agree and dual_ideal(routes.cover) == ideal


def check_shellable_dual(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """The complex with Stanley-Reisner ideal ``H_L*`` is shellable iff it is Cohen-Macaulay iff ``L`` is meet-distributive."""
    if _trivial(L):
        return None
    dual = dual_ideal(lattice_ideal(L))
    complex = stanley_reisner_complex(dual)
    if alexander_dual_complex(alexander_dual_complex(complex)) != complex:
        return False
    return is_shellable(complex) == eagon_reiner_cm(dual, domain) == is_meet_distributive(L)


def check_height_two(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    if _trivial(L) or not L.is_lattice:
        return None
    return height2_classification(L).consistent


def check_flag_dual(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    if _trivial(L) or not L.is_lattice:
        return None
    return is_flag_dual(L) == is_distributive(L)


def check_upper_semimodular(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """On upper semimodular lattices ``H_L`` has a linear resolution iff ``L`` is distributive."""
    if _trivial(L) or not L.is_lattice or not is_upper_semimodular(L):
        return None
    return has_linear_resolution(lattice_ideal(L), domain) == is_distributive(L)


def _nonempty_ideals(L: MeetSemilattice) -> List[int]:
    return [mask for mask in ideal_masks(L.poset) if mask]


def check_poset_ideal_duals(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    """For every poset ideal ``I`` the closed formula gives the dual of ``H_I``, and ``H_I`` splits over the 1-cogenerated ideals."""
    if _trivial(L):
        return None
    for mask in _nonempty_ideals(L):
        labels = L.poset.labels(mask)
        if poset_ideal_dual(L, labels) != dual_ideal(subfamily_ideal(L, labels)):
            return False
        if not one_cogenerated_split(L, labels).ok:
            return False
    return True


def check_coideal_duals(L: MeetSemilattice, domain: Domain, rng: Random) -> Optional[bool]:
    if _trivial(L):
        return None
    full = (1 << L.n) - 1
    for mask in ideal_masks(L.poset):
        coideal = full & ~mask
        if coideal:
            labels = L.poset.labels(coideal)
            if coideal_dual(L, labels) != dual_ideal(subfamily_ideal(L, labels)):
                return False
    return True


def check_intersections(L: MeetSemilattice, domain: Domain, rng: Random, samples: int = 3) -> Optional[bool]:
    """On sampled pairs ``I | J = L`` the dual formula of ``H_I & H_J`` holds and ``rank L <= reg <= rank L + 1``."""
    if _trivial(L):
        return None
    full = (1 << L.n) - 1
    ideals = _nonempty_ideals(L)
    coideals = [full & ~mask for mask in ideal_masks(L.poset) if mask != full]
    for _ in range(samples):
        I = ideals[rng.randrange(len(ideals))]
        options = [J for J in coideals if I | J == full]
        J = options[rng.randrange(len(options))]
        report = intersect_ideal_coideal(L, L.poset.labels(I), L.poset.labels(J), domain)
        if not (report.dual_matches and report.bounds_hold):
            return False
    return True


def check_graft(complex, domain: Domain, rng: Random) -> Optional[bool]:
    """Grafting makes the facet ideal Cohen-Macaulay with a pure complex."""
    if complex.is_void:
        return None
    return graft_check(complex, domain).ok


CHECKS: Dict[str, Check] = {
    "embedding": Check("semilattices", check_embedding),
    "characterizations": Check("semilattices", check_characterizations),
    "generators": Check("semilattices", check_generators),
    "colon_formula": Check("semilattices", check_colon_formula),
    "linear_quotients": Check("semilattices", check_linear_quotients),
    "mapping_cone": Check("semilattices", check_mapping_cone),
    "closed_form": Check("semilattices", check_closed_form),
    "differential_shape": Check("semilattices", check_differential_shape),
    "regularity": Check("semilattices", check_regularity),
    "insert_between": Check("semilattices", check_insert_between),
    "dual_routes": Check("semilattices", check_dual_routes),
    "shellable_dual": Check("semilattices", check_shellable_dual),
    "height_two": Check("semilattices", check_height_two),
    "flag_dual": Check("semilattices", check_flag_dual),
    "upper_semimodular": Check("semilattices", check_upper_semimodular),
    "poset_ideal_duals": Check("distributive", check_poset_ideal_duals),
    "coideal_duals": Check("distributive", check_coideal_duals),
    "intersections": Check("distributive", check_intersections),
    "graft": Check("complexes", check_graft),
}


def run_suite(
    max_elements: Optional[int] = None,
    seed: Optional[int] = None,
    checks: Union[Iterable[str], Dict[str, Check], None] = None,
    domain: Optional[Domain] = None,
    processes: Optional[int] = None,
    output: Optional[str] = None,
    progress: bool = False,
    **kwargs,
) -> pd.DataFrame:
    """Runs the property checks and tabulates the results.

    The results are returned as a pandas DataFrame with one row per check. If ``output`` names a csv file, the rows are saved to it; if a file with the same name exists, the existing file is loaded and the new rows are appended.

    Parameters
    ----------
    max_elements
        Size bound of the exhaustive semilattice population.
    checks
        Names of checks from `CHECKS`, or a dictionary of checks; all of `CHECKS` by default.
    processes
        Number of processes. For a single process, `~.main.run` is used. For multiple processes, `~.main.run_multiprocess` is utilized.
    output
        File name of the csv output. If set to "none", no file is saved.
    kwargs
        Passed on to `~.main.initialize`.

    Raises
    ------
    KeyError
        If an unknown check is named.

    Examples
    --------
        >>> data = run_suite(max_elements=5, checks=["linear_quotients", "mapping_cone"])
        >>> data[["check", "population", "passed", "failed", "skipped"]]
                      check    population  passed  failed  skipped
        0  linear_quotients  semilattices      23       0        1
        1      mapping_cone  semilattices      23       0        1
    """
    config = get_config("suite")
    if max_elements is None:
        max_elements = config["max_elements"]
    if seed is None:
        seed = config["seed"]
    if processes is None:
        processes = config["processes"]
    if output is None:
        output = config["output"]
    if domain is None:
        domain = get_field()
    if checks is None:
        checks = dict(CHECKS)
    elif not isinstance(checks, dict):
        checks = {name: CHECKS[name] for name in checks}

    populations = initialize(max_elements=max_elements, seed=seed, **kwargs)
    benchmarker = BenchmarkSuite({name: "duration" for name in checks})
    if processes > 1:
        result = run_multiprocess(populations, checks, domain, seed, processes, benchmarker, progress)
    else:
        result = run(populations, checks, domain, seed, benchmarker, progress=progress)
    durations = result.pop("benchmark")

    now = datetime.now().strftime("%d/%m/%Y %H:%M:%S")
    rows = []
    for name, check in checks.items():
        counts = result[name]
        key = f"duration/{check.function.__name__}"
        rows.append(
            {
                "check": name,
                "population": check.population,
                "size": len(populations.get(check.population, [])),
                "passed": counts["passed"],
                "failed": counts["failed"],
                "skipped": counts["skipped"],
                "failures": " ".join(counts["failures"]),
                "duration_mean": durations.get(f"{key}/mean", 0.0),
                "duration_std": durations.get(f"{key}/std", 0.0),
                "max_elements": max_elements,
                "seed": seed,
                "field": field_name(domain),
                "datetime": now,
            }
        )
    data = pd.DataFrame(rows)

    if output and output != "none":
        output_path = Path(output)
        if output_path.exists():
            print(f"Loading existing file {output}.")
            data = pd.concat([read_csv(output_path), data], ignore_index=True)
        data.to_csv(output_path)
    return data


def read_csv(file: Union[str, Path]) -> pd.DataFrame:
    """Reads a csv file written by `run_suite`.

    Raises
    ------
    FileNotFoundError
    """
    file = Path(file)
    if not file.exists():
        raise FileNotFoundError(f"File <{file}> does not exist.")
    data = pd.read_csv(file, index_col=0)
    data["failures"] = data["failures"].fillna("")
    return data

"""
Duals of the ideals ``H_I`` and ``H_J`` of a poset ideal ``I`` and a poset coideal ``J`` of a distributive lattice.

The formulas add to ``H_L*`` one ``y``-monomial for every ``q`` outside ``I``, the product of ``y_r`` over the generators ``r`` of ``ell(q)``, and one ``x``-monomial for every ``q`` outside ``J``, the product of ``x_r`` over the minimal elements ``r`` of ``P - ell(q)``.
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, List, Optional
from sympy.polys.domains.domain import Domain
from .primes import dual_ideal
from ..configuration import field_name, get_field
from ..exceptions import EmptyIdeal, NotDistributive, NotPosetCoideal, NotPosetIdeal
from ..ideals.lattice_ideals import (
    lattice_ideal,
    lattice_ring,
    one_cogenerated_ideal,
    subfamily_ideal,
    x_monomial,
    y_monomial,
)
from ..ideals.monomial import MonomialIdeal, ideal_intersection, ideal_sum
from ..posets.semilattice import MeetSemilattice, is_distributive
from ..resolutions.betti import BettiTable, betti_oracle


def _require_distributive(L: MeetSemilattice):
    if not is_distributive(L):
        raise NotDistributive()


def _ideal_mask(L: MeetSemilattice, labels: Iterable[str]) -> int:
    mask = L.poset.mask(labels)
    if not mask:
        raise EmptyIdeal()
    closure = 0
    for q in range(L.n):
        if mask >> q & 1:
            closure |= L.poset.down_masks[q]
    if closure != mask:
        raise NotPosetIdeal(L.poset.labels(closure & ~mask))
    return mask


def _coideal_mask(L: MeetSemilattice, labels: Iterable[str]) -> int:
    mask = L.poset.mask(labels)
    if not mask:
        raise EmptyIdeal()
    closure = 0
    for q in range(L.n):
        if mask >> q & 1:
            closure |= L.poset.up_masks[q]
    if closure != mask:
        raise NotPosetCoideal(L.poset.labels(closure & ~mask))
    return mask


def outside_ideal_generators(L: MeetSemilattice, mask: int) -> list:
    P = L.irreducible_poset
    return [y_monomial(L, P.maximal(L.ell[q])) for q in range(L.n) if not mask >> q & 1]


def outside_coideal_generators(L: MeetSemilattice, mask: int) -> list:
    P = L.irreducible_poset
    full = (1 << P.n) - 1
    return [x_monomial(L, P.minimal(full & ~L.ell[q])) for q in range(L.n) if not mask >> q & 1]


def poset_ideal_dual(L: MeetSemilattice, ideal: Iterable[str]) -> MonomialIdeal:
    """``H_I*`` for a poset ideal ``I`` of the distributive lattice ``L``, by the closed formula.

    Parameters
    ----------
    ideal
        Labels of the elements of ``I``.

    Raises
    ------
    NotDistributive, NotPosetIdeal, EmptyIdeal
    """
    _require_distributive(L)
    mask = _ideal_mask(L, ideal)
    base = dual_ideal(lattice_ideal(L))
    return MonomialIdeal(lattice_ring(L), list(base.minimal) + outside_ideal_generators(L, mask))


def coideal_dual(L: MeetSemilattice, coideal: Iterable[str]) -> MonomialIdeal:
    """``H_J*`` for a poset coideal ``J`` of the distributive lattice ``L``, by the closed formula.

    Raises
    ------
    NotDistributive, NotPosetCoideal, EmptyIdeal
    """
    _require_distributive(L)
    mask = _coideal_mask(L, coideal)
    base = dual_ideal(lattice_ideal(L))
    return MonomialIdeal(lattice_ring(L), list(base.minimal) + outside_coideal_generators(L, mask))


@dataclass
class IntersectionReport:
    """Analysis of ``H_I`` intersected with ``H_J``.

    Attributes
    ----------
    ideal : MonomialIdeal
        The intersection, from the pairwise lcms of the generators.
    equals_meet_family : bool
        Whether the intersection equals ``H_{I & J}``.
    formula_dual, bruteforce_dual : MonomialIdeal
        The dual by the closed formula and by minimal vertex covers.
    union_is_L : bool
        ``I | J = L``, the case in which ``rank L <= reg <= rank L + 1`` is claimed.
    bounds_hold : bool or None
        The regularity bounds, None when ``union_is_L`` is false.
    """

    ideal: MonomialIdeal
    equals_meet_family: bool
    formula_dual: MonomialIdeal
    bruteforce_dual: MonomialIdeal
    betti: BettiTable
    rank: int
    union_is_L: bool
    field: str = "Q"
    bounds_hold: Optional[bool] = None

    @property
    def dual_matches(self) -> bool:
        return self.formula_dual == self.bruteforce_dual

    @property
    def regularity(self) -> int:
        return self.betti.regularity

    @property
    def linear(self) -> bool:
        return len({j - i for i, j in self.betti.graded}) == 1

    def to_dict(self) -> dict:
        return {
            "generators": self.ideal.format(),
            "equals_meet_family": self.equals_meet_family,
            "formula_dual": self.formula_dual.format(),
            "bruteforce_dual": self.bruteforce_dual.format(),
            "dual_matches": self.dual_matches,
            "betti": self.betti.to_dict()["graded"],
            "ranks": self.betti.ranks,
            "regularity": self.regularity,
            "rank": self.rank,
            "union_is_L": self.union_is_L,
            "bounds_hold": self.bounds_hold,
            "linear": self.linear,
            "field": self.field,
        }


def intersect_ideal_coideal(
    L: MeetSemilattice, ideal: Iterable[str], coideal: Iterable[str], domain: Optional[Domain] = None
) -> IntersectionReport:
    """Intersects ``H_I`` and ``H_J`` and compares the result with its closed descriptions.

    Raises
    ------
    NotDistributive, NotPosetIdeal, NotPosetCoideal, EmptyIdeal

    Examples
    --------
    On the lattice ``L8`` with ``I`` all but the top and ``J`` all but the bottom the intersection has a linear resolution with ranks 6, 6, 1.
    """
    if domain is None:
        domain = get_field()
    _require_distributive(L)
    I = _ideal_mask(L, ideal)
    J = _coideal_mask(L, coideal)

    H_I = subfamily_ideal(L, L.poset.labels(I))
    H_J = subfamily_ideal(L, L.poset.labels(J))
    intersection = ideal_intersection(H_I, H_J)
    meet_family = subfamily_ideal(L, L.poset.labels(I & J))

    base = dual_ideal(lattice_ideal(L))
    formula = MonomialIdeal(lattice_ring(L), list(base.minimal) + outside_ideal_generators(L, I) + outside_coideal_generators(L, J))
    betti = betti_oracle(intersection, domain)

    full = (1 << L.n) - 1
    rank = L.rank[L.top]
    report = IntersectionReport(
        ideal=intersection,
        equals_meet_family=intersection == meet_family,
        formula_dual=formula,
        bruteforce_dual=dual_ideal(intersection),
        betti=betti,
        rank=rank,
        union_is_L=I | J == full,
        field=field_name(domain),
    )
    if report.union_is_L:
        report.bounds_hold = rank <= betti.regularity <= rank + 1
    return report


@dataclass
class OneCogeneratedReport:
    """Both identities relating ``H_I`` to the ideals of the 1-cogenerated ``I_q``, ``q`` outside ``I``."""

    outside: List[str]
    intersection_holds: bool
    dual_holds: bool

    @property
    def ok(self) -> bool:
        return self.intersection_holds and self.dual_holds

    def to_dict(self) -> dict:
        return {
            "outside": self.outside,
            "intersection_holds": self.intersection_holds,
            "dual_holds": self.dual_holds,
        }


def one_cogenerated_split(L: MeetSemilattice, ideal: Iterable[str]) -> OneCogeneratedReport:
    """Checks ``H_I = meet of H_{I_q}`` and ``H_I* = sum of H_{I_q}*`` over ``q`` outside ``I``.

    Both hold vacuously for ``I = L``.

    Raises
    ------
    NotDistributive, NotPosetIdeal, EmptyIdeal
    """
    _require_distributive(L)
    mask = _ideal_mask(L, ideal)
    outside = [q for q in range(L.n) if not mask >> q & 1]
    report = OneCogeneratedReport(L.labels(outside), True, True)
    if not outside:
        return report

    H_I = subfamily_ideal(L, L.poset.labels(mask))
    parts = [subfamily_ideal(L, one_cogenerated_ideal(L, L.label(q))) for q in outside]
    report.intersection_holds = reduce(ideal_intersection, parts) == H_I
    report.dual_holds = reduce(ideal_sum, [dual_ideal(part) for part in parts]) == dual_ideal(H_I)
    return report

"""
Alexander duals of squarefree monomial ideals and the minimal primes of ``H_L``.

The dual ``I*`` of ``I = I_Delta`` is the Stanley-Reisner ideal of the Alexander dual of ``Delta``. It is computed in three independent ways:

cover
    generated by the monomials of the minimal vertex covers of the facet complex of ``I``;
complement
    the facet ideal of the complex whose facets are the complements of the facets of ``Delta``;
nonface
    the minimal nonfaces of the dual complex found by scanning all vertex subsets ``G``, where ``G`` is a nonface exactly when ``V - G`` contains no generator of ``I``.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
from .complexes import maximal_faces, minimal_sets, minimal_transversals
from ..configuration import get_config
from ..exceptions import NotLattice, UnitIdeal, ZeroIdeal
from ..ideals.lattice_ideals import lattice_ideal
from ..ideals.monomial import MonomialIdeal, SquarefreeMonomial
from ..posets.semilattice import MeetSemilattice, is_distributive


def _check_proper(ideal: MonomialIdeal):
    if ideal.is_zero:
        raise ZeroIdeal()
    if ideal.is_unit:
        raise UnitIdeal()


def _full(ideal: MonomialIdeal) -> int:
    return (1 << len(ideal.ring)) - 1


def _cover_route(ideal: MonomialIdeal) -> MonomialIdeal:
    covers = minimal_transversals(g.mask for g in ideal.minimal)
    return MonomialIdeal(ideal.ring, [SquarefreeMonomial(c) for c in covers])


def _complement_route(ideal: MonomialIdeal) -> MonomialIdeal:
    full = _full(ideal)
    facets = maximal_faces([g.mask for g in ideal.minimal], len(ideal.ring))
    return MonomialIdeal(ideal.ring, [SquarefreeMonomial(full & ~f) for f in facets])


def _nonface_route(ideal: MonomialIdeal, max_vertices: int) -> Optional[MonomialIdeal]:
    n = len(ideal.ring)
    if n > max_vertices:
        return None
    full = _full(ideal)
    gens = [g.mask for g in ideal.minimal]
    nonfaces = [G for G in range(1 << n) if not any(g & ~(full & ~G) == 0 for g in gens)]
    return MonomialIdeal(ideal.ring, [SquarefreeMonomial(G) for G in minimal_sets(nonfaces)])


def dual_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """The Alexander dual ``I*``, generated by the cover monomials of the facet complex of ``I``.

    Raises
    ------
    ZeroIdeal, UnitIdeal

    Examples
    --------
        >>> B = boolean_lattice(2)
        >>> dual_ideal(lattice_ideal(B)).format()
        ['x_ay_a', 'x_by_b']
    """
    _check_proper(ideal)
    return _cover_route(ideal)


@dataclass
class DualRoutes:
    """The dual computed by each route; ``nonface`` is None above ``[duality] max_nonface_vertices`` variables."""

    cover: MonomialIdeal
    complement: MonomialIdeal
    nonface: Optional[MonomialIdeal] = None

    @property
    def agree(self) -> bool:
        agree = self.cover == self.complement
        if self.nonface is not None:
            agree = agree and self.cover == self.nonface
        return agree


def dual_ideal_routes(ideal: MonomialIdeal, max_vertices: Optional[int] = None) -> DualRoutes:
    """All three computations of ``I*``, see the module documentation."""
    _check_proper(ideal)
    if max_vertices is None:
        max_vertices = get_config("duality")["max_nonface_vertices"]
    return DualRoutes(_cover_route(ideal), _complement_route(ideal), _nonface_route(ideal, max_vertices))


def minimal_primes(ideal: MonomialIdeal) -> List[List[str]]:
    """Variable sets of the minimal primes, the minimal vertex covers of the facet complex."""
    _check_proper(ideal)
    return [ideal.ring.support(g) for g in _cover_route(ideal).minimal]


@dataclass
class Height2Report:
    """Minimal primes of ``H_L`` of height two against the pairs ``p <= q`` of join-irreducibles.

    Attributes
    ----------
    height_two : list
        Pairs ``(p, q)`` with ``(x_p, y_q)`` a minimal prime.
    expected : list
        Pairs ``(p, q)`` with ``p <= q`` in ``P``.
    higher : list
        Variable sets of the minimal primes of height above two.
    """

    height_two: List[Tuple[str, str]] = field(default_factory=list)
    expected: List[Tuple[str, str]] = field(default_factory=list)
    higher: List[List[str]] = field(default_factory=list)
    unexpected: List[List[str]] = field(default_factory=list)
    distributive: bool = True

    @property
    def matches(self) -> bool:
        return not self.unexpected and self.height_two == self.expected

    @property
    def has_higher(self) -> bool:
        return bool(self.higher)

    @property
    def consistent(self) -> bool:
        return self.matches and self.has_higher != self.distributive

    def to_dict(self) -> dict:
        return {
            "height_two": [list(pair) for pair in self.height_two],
            "expected": [list(pair) for pair in self.expected],
            "higher": self.higher,
            "unexpected": self.unexpected,
            "has_higher": self.has_higher,
            "distributive": self.distributive,
            "matches": self.matches,
            "consistent": self.consistent,
        }


def height2_classification(L: MeetSemilattice) -> Height2Report:
    """Classifies the minimal primes of ``H_L`` by height.

    The primes of height two are expected to be ``(x_p, y_q)`` for ``p <= q`` in ``P``, and a prime of larger height should exist exactly when ``L`` is not distributive; `Height2Report.consistent` records whether both hold.

    Raises
    ------
    NotLattice
    """
    if not L.is_lattice:
        raise NotLattice()
    P = L.irreducible_poset
    report = Height2Report(distributive=bool(is_distributive(L)))
    report.expected = sorted((P.elements[i], P.elements[j]) for i in range(P.n) for j in range(P.n) if P.le(i, j))
    ideal = lattice_ideal(L)
    if ideal.is_unit:
        return report

    n = len(L.irreducibles)
    pairs = []
    for g in _cover_route(ideal).minimal:
        if g.degree == 2:
            xs = g.mask & (1 << n) - 1
            ys = g.mask >> n
            if xs.bit_count() == 1 and ys.bit_count() == 1:
                pairs.append((P.elements[xs.bit_length() - 1], P.elements[ys.bit_length() - 1]))
                continue
        if g.degree > 2:
            report.higher.append(ideal.ring.support(g))
        else:
            report.unexpected.append(ideal.ring.support(g))
    report.height_two = sorted(pairs)
    return report


def is_flag_dual(L: MeetSemilattice) -> bool:
    """Whether every minimal generator of ``H_L*`` has degree at most two.

    Raises
    ------
    NotLattice
    """
    if not L.is_lattice:
        raise NotLattice()
    ideal = lattice_ideal(L)
    if ideal.is_unit:
        return True
    return all(g.degree <= 2 for g in dual_ideal(ideal).minimal)


"""
The ideals attached to a meet-semilattice ``L``: the generators ``u_q``, the families ``H_Q`` of subsets ``Q`` of ``L``, the colon ideals of the inductive construction, and the experimental generator families by rank.

For ``q`` in ``L`` the monomial ``u_q`` is the product of ``x_p`` over the join-irreducibles ``p <= q`` and ``y_p`` over the others, so every ``u_q`` has degree ``|P|``.
"""
from __future__ import annotations
from functools import lru_cache
from typing import Iterable, List
from .monomial import MonomialIdeal, Ring, SquarefreeMonomial
from ..exceptions import NotApplicable
from ..posets.poset import iter_bits
from ..posets.semilattice import MeetSemilattice


@lru_cache(maxsize=64)
def lattice_ring(L: MeetSemilattice) -> Ring:
    """Ring with the variables ``x_p`` and ``y_p`` for ``p`` in ``P``, in the order of ``L.irreducibles``."""
    return Ring.paired(L.labels(L.irreducibles))


def _full(L: MeetSemilattice) -> int:
    return (1 << len(L.irreducibles)) - 1


def u_mask(L: MeetSemilattice, q: int) -> int:
    n = len(L.irreducibles)
    return L.ell[q] | (_full(L) & ~L.ell[q]) << n


def y_monomial(L: MeetSemilattice, positions: int) -> SquarefreeMonomial:
    """The product of ``y_p`` over a bitmask of positions in ``P``."""
    return SquarefreeMonomial(positions << len(L.irreducibles))


def x_monomial(L: MeetSemilattice, positions: int) -> SquarefreeMonomial:
    return SquarefreeMonomial(positions)


def x_part(L: MeetSemilattice, monomial: SquarefreeMonomial) -> int:
    return monomial.mask & _full(L)


def y_part(L: MeetSemilattice, monomial: SquarefreeMonomial) -> int:
    return monomial.mask >> len(L.irreducibles)


def generator_monomial(L: MeetSemilattice, q: str) -> SquarefreeMonomial:
    """The generator ``u_q``.

    Examples
    --------
        >>> B = boolean_lattice(2)
        >>> lattice_ring(B).format(generator_monomial(B, "a"))
        'x_ay_b'
    """
    return SquarefreeMonomial(u_mask(L, L.index(q)))


def _ideal_of(L: MeetSemilattice, indices: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(lattice_ring(L), [SquarefreeMonomial(u_mask(L, q)) for q in indices])


def subfamily_ideal(L: MeetSemilattice, labels: Iterable[str]) -> MonomialIdeal:
    """The ideal ``H_Q`` generated by ``u_q`` for ``q`` in ``labels``; the zero ideal for no labels."""
    return _ideal_of(L, sorted(set(L.poset.indices(labels))))


def lattice_ideal(L: MeetSemilattice) -> MonomialIdeal:
    """The ideal ``H_L`` generated by all ``u_q``."""
    return _ideal_of(L, range(L.n))


def predecessor_ideal(L: MeetSemilattice, p: str) -> MonomialIdeal:
    """``H_L`` restricted to the elements before ``p`` in the degree order."""
    order = L.order
    return _ideal_of(L, order[: order.index(L.index(p))])


def colon_formula(L: MeetSemilattice, p: str) -> MonomialIdeal:
    """The colon ``(H_L restricted to q before p) : u_p``, read off the lower neighbors of ``p``.

    Generated by the monomials ``y`` over ``ell(p) - ell(t)`` for ``t`` in ``N(p)``.
    """
    i = L.index(p)
    if i == L.bottom:
        raise NotApplicable(f"Element <{p}> is the bottom element, its colon ideal is not defined.")
    gens = [y_monomial(L, L.ell[i] & ~L.ell[t]) for t in L.lower(i)]
    return MonomialIdeal(lattice_ring(L), gens)


def one_cogenerated_ideal(L: MeetSemilattice, p: str) -> List[str]:
    """The poset ideal ``I_p`` of elements not above ``p``."""
    i = L.index(p)
    return L.labels(q for q in range(L.n) if not L.poset.le(i, q))


def rank_range_ideal(L: MeetSemilattice, r: int, s: int) -> MonomialIdeal:
    """Generated by ``u_p`` for the elements with ``r <= rank p <= s``."""
    return _ideal_of(L, [q for q in range(L.n) if r <= L.rank[q] <= s])


def interior_ideal(L: MeetSemilattice) -> MonomialIdeal:
    """Generated by ``u_p`` for the elements other than the bottom and the top."""
    return _ideal_of(L, [q for q in range(L.n) if q not in (L.bottom, L.top)])


def difference_variable(L: MeetSemilattice, p: int, q: int) -> int:
    """Position in ``P`` of the unique element of ``ell(p) - ell(q)``."""
    difference = L.ell[p] & ~L.ell[q]
    if difference.bit_count() != 1:
        raise NotApplicable(f"ell({L.label(p)}) - ell({L.label(q)}) has {difference.bit_count()} elements.")
    return next(iter_bits(difference))

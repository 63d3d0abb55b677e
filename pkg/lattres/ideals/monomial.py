"""
Squarefree monomials and monomial ideals over an ordered set of variables.

A monomial is a bitmask over the variables of a `Ring`. Rings of semilattices are built by `Ring.paired`, with the variables ``x_p`` of all join-irreducibles ``p`` first and then the variables ``y_p`` in the same order.
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple
from ..configuration import get_config
from ..exceptions import DuplicateLabel, TooLarge, UnknownLabel
from ..posets.poset import iter_bits


@dataclass(frozen=True)
class SquarefreeMonomial:
    """Product of the variables whose bits are set in ``mask``."""

    mask: int

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def is_unit(self) -> bool:
        return self.mask == 0

    def divides(self, other: SquarefreeMonomial) -> bool:
        return self.mask & ~other.mask == 0

    def lcm(self, other: SquarefreeMonomial) -> SquarefreeMonomial:
        return SquarefreeMonomial(self.mask | other.mask)

    def gcd(self, other: SquarefreeMonomial) -> SquarefreeMonomial:
        return SquarefreeMonomial(self.mask & other.mask)

    def __truediv__(self, other: SquarefreeMonomial) -> SquarefreeMonomial:
        if not other.divides(self):
            raise ValueError("Quotient of monomials is not a monomial.")
        return SquarefreeMonomial(self.mask & ~other.mask)


UNIT = SquarefreeMonomial(0)


class Ring:
    """Polynomial ring given by its ordered list of variable names.

    Examples
    --------
        >>> R = Ring.paired(["a", "b"])
        >>> R.variables
        ('x_a', 'x_b', 'y_a', 'y_b')
        >>> R.format(R.monomial(["y_b", "x_a"]))
        'x_ay_b'
    """

    def __init__(self, variables: Sequence[str]):
        self.variables = tuple(variables)
        self.index = {}
        for name in self.variables:
            if name in self.index:
                raise DuplicateLabel(name)
            self.index[name] = len(self.index)

    @classmethod
    def paired(cls, labels: Sequence[str]) -> Ring:
        return cls([f"x_{label}" for label in labels] + [f"y_{label}" for label in labels])

    def __repr__(self):
        return f"<Ring in {len(self.variables)} variables>"

    def __len__(self):
        return len(self.variables)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def monomial(self, names: Iterable[str]) -> SquarefreeMonomial:
        mask = 0
        for name in names:
            if name not in self.index:
                raise UnknownLabel(name)
            mask |= 1 << self.index[name]
        return SquarefreeMonomial(mask)

    def variable(self, name: str) -> SquarefreeMonomial:
        return self.monomial([name])

    def support(self, monomial: SquarefreeMonomial) -> List[str]:
        return [self.variables[i] for i in iter_bits(monomial.mask)]

    def sort_key(self, monomial: SquarefreeMonomial) -> Tuple[int, Tuple[int, ...]]:
        """Degree, then the variable indices of the support compared lexicographically."""
        return monomial.degree, tuple(iter_bits(monomial.mask))

    def sorted(self, monomials: Iterable[SquarefreeMonomial]) -> List[SquarefreeMonomial]:
        return sorted(monomials, key=self.sort_key)

    def format(self, monomial: SquarefreeMonomial) -> str:
        if monomial.is_unit:
            return "1"
        return "".join(self.support(monomial))

    def parse(self, text: str) -> SquarefreeMonomial:
        """Reads the concatenated form written by `format`, matching the longest variable name first."""
        text = text.strip()
        if text == "1":
            return UNIT
        names = sorted(self.variables, key=len, reverse=True)
        mask, position = 0, 0
        while position < len(text):
            for name in names:
                if text.startswith(name, position):
                    mask |= 1 << self.index[name]
                    position += len(name)
                    break
            else:
                raise UnknownLabel(text[position:])
        return SquarefreeMonomial(mask)

    def rename(self, monomial: SquarefreeMonomial, target: Ring, mapping: dict) -> SquarefreeMonomial:
        """The monomial in ``target`` obtained by sending each variable name through ``mapping``."""
        return target.monomial(mapping[name] for name in self.support(monomial))


def minimize(monomials: Iterable[SquarefreeMonomial]) -> List[SquarefreeMonomial]:
    """Divisibility-minimal members of ``monomials``, without duplicates."""
    kept: List[SquarefreeMonomial] = []
    for monomial in sorted(set(monomials), key=lambda m: (m.degree, m.mask)):
        if not any(g.divides(monomial) for g in kept):
            kept.append(monomial)
    return kept


class MonomialIdeal:
    """Ideal generated by squarefree monomials.

    Parameters
    ----------
    ring
        The ambient ring.
    gens
        Generators as given; `minimal` holds the minimal generating set in the ring's sort order.
    """

    def __init__(self, ring: Ring, gens: Iterable[SquarefreeMonomial] = ()):
        self.ring = ring
        self.gens = tuple(gens)

    def __repr__(self):
        return "(" + ", ".join(self.format()) + ")"

    @cached_property
    def minimal(self) -> Tuple[SquarefreeMonomial, ...]:
        return tuple(self.ring.sorted(minimize(self.gens)))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.is_unit for g in self.gens)

    @property
    def degrees(self) -> List[int]:
        return sorted({g.degree for g in self.minimal})

    def contains(self, monomial: SquarefreeMonomial) -> bool:
        return any(g.divides(monomial) for g in self.gens)

    def format(self) -> List[str]:
        return [self.ring.format(g) for g in self.minimal]

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ring == other.ring and set(self.minimal) == set(other.minimal)

    def __hash__(self):
        return hash((self.ring, frozenset(self.minimal)))


def minimal_generators(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.ring, ideal.minimal)


def colon_by_monomial(ideal: MonomialIdeal, u: SquarefreeMonomial) -> MonomialIdeal:
    """The colon ideal ``(I : u)``, generated by ``g / gcd(g, u)``."""
    return minimal_generators(MonomialIdeal(ideal.ring, [g / g.gcd(u) for g in ideal.gens]))


def _same_ring(first: MonomialIdeal, second: MonomialIdeal):
    if first.ring != second.ring:
        raise ValueError("Ideals live in different rings.")


def ideal_sum(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    _same_ring(first, second)
    return minimal_generators(MonomialIdeal(first.ring, first.gens + second.gens))


def ideal_intersection(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """Intersection of monomial ideals, generated by the pairwise lcms."""
    _same_ring(first, second)
    return minimal_generators(MonomialIdeal(first.ring, [f.lcm(g) for f in first.minimal for g in second.minimal]))


def ideal_membership(ideal: MonomialIdeal, monomial: SquarefreeMonomial) -> bool:
    return ideal.contains(monomial)


def ideal_equal(first: MonomialIdeal, second: MonomialIdeal) -> bool:
    return first == second


def lcm_closure(masks: Iterable[int]) -> set:
    """Bitmasks of the lcms of all nonempty subsets of ``masks``.

    Grown one generator at a time, so the cost is bounded by the number of distinct lcms rather than the number of subsets.
    """
    found = set()
    for g in masks:
        found |= {g | mask for mask in found} | {g}
    return found


def lcm_lattice_degrees(ideal: MonomialIdeal, max_generators: Optional[int] = None) -> List[SquarefreeMonomial]:
    """All lcms of nonempty sets of minimal generators, deduplicated and sorted."""
    if max_generators is None:
        max_generators = get_config("monomial")["max_generators"]
    if len(ideal.minimal) > max_generators:
        raise TooLarge("generating set", len(ideal.minimal), max_generators)
    found = lcm_closure(g.mask for g in ideal.minimal)
    return ideal.ring.sorted(SquarefreeMonomial(mask) for mask in found)


def format_monomial(ring: Ring, monomial: SquarefreeMonomial) -> str:
    return ring.format(monomial)


def parse_monomial(ring: Ring, text: str) -> SquarefreeMonomial:
    return ring.parse(text)


def parse_ideal(ring: Ring, texts: Iterable[str]) -> MonomialIdeal:
    return MonomialIdeal(ring, [ring.parse(text) for text in texts])

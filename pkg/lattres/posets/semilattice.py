"""
Meet-semilattices: meets, join-irreducible elements, the canonical embedding into the Boolean lattice on the join-irreducibles, and the classification predicates.

Internally elements are indices of the underlying `~.poset.Poset`; the module level functions take and return labels.
"""
from __future__ import annotations
from dataclasses import dataclass, asdict
from functools import cached_property, reduce
from itertools import combinations
from typing import Dict, List, Optional, Sequence
import numpy as np
from .poset import Poset, build_poset, ideal_masks, iter_bits, mask_of
from ..exceptions import EmptySet, NotLattice, NotMeetSemilattice


class MeetSemilattice:
    """Finite meet-semilattice on a poset.

    Parameters
    ----------
    poset
        Nonempty poset in which every pair of elements has a greatest common lower bound.

    Attributes
    ----------
    meet_table : numpy.ndarray
        ``meet_table[i, j]`` is the index of the meet of elements ``i`` and ``j``.
    bottom : int
        The least element.
    top : int or None
        The greatest element if it exists.
    irreducibles : list of int
        Join-irreducible elements, ordered by degree and then by index. Positions in this list are the positions of the variables ``x_p, y_p``.
    ell : list of int
        Canonical embedding, ``ell[q]`` is the bitmask over positions in ``irreducibles`` of the join-irreducibles below ``q``.
    """

    def __init__(self, poset: Poset):
        if poset.n == 0:
            raise EmptySet("poset")
        self.poset = poset
        self.n = poset.n
        self.meet_table = self._build_meet_table()
        self.bottom = self._find_bottom()
        tops = [i for i in range(self.n) if self.poset.up_masks[i] == 1 << i]
        self.top = tops[0] if len(tops) == 1 else None
        self._set_irreducibles()

    def __repr__(self):
        kind = "lattice" if self.is_lattice else "meet-semilattice"
        return f"<{kind} on {self.n} elements, |P|={len(self.irreducibles)}>"

    def __len__(self):
        return self.n

    def _build_meet_table(self) -> np.ndarray:
        down = self.poset.down_masks
        by_down = {mask: i for i, mask in enumerate(down)}
        table = np.zeros((self.n, self.n), dtype=int)
        for i in range(self.n):
            for j in range(i, self.n):
                common = down[i] & down[j]
                if common not in by_down:
                    candidates = self.poset.labels(self.poset.maximal(common))
                    raise NotMeetSemilattice(self.poset.elements[i], self.poset.elements[j], candidates)
                table[i, j] = table[j, i] = by_down[common]
        table.flags.writeable = False
        return table

    def _find_bottom(self) -> int:
        return reduce(self.meet, range(self.n))

    def _set_irreducibles(self):
        down, up = self.poset.down_masks, self.poset.up_masks
        irreducible = []
        for p in range(self.n):
            if p == self.bottom:
                continue
            below = down[p] & ~(1 << p)
            bounds = reduce(lambda acc, q: acc & up[q], iter_bits(below), (1 << self.n) - 1)
            assert (len(self.lower(p)) == 1) == (self.least(bounds) != p)
            if self.least(bounds) != p:
                irreducible.append(p)

        counts = {p: (down[p] & mask_of(irreducible)).bit_count() for p in irreducible}
        self.irreducibles = sorted(irreducible, key=lambda p: (counts[p], p))
        self.position = {p: k for k, p in enumerate(self.irreducibles)}
        self.ell = [
            mask_of(k for k, p in enumerate(self.irreducibles) if down[q] >> p & 1) for q in range(self.n)
        ]

    def least(self, mask: int) -> Optional[int]:
        """Least element of the subset ``mask``, or None."""
        for i in iter_bits(mask):
            if self.poset.up_masks[i] & mask == mask:
                return i
        return None

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    def meet_of(self, mask: int) -> int:
        """Meet of the nonempty set of elements ``mask``."""
        if mask == 0:
            raise EmptySet()
        return reduce(self.meet, iter_bits(mask))

    def join(self, i: int, j: int) -> Optional[int]:
        """Least upper bound of ``i`` and ``j``, None if it does not exist."""
        return self.least(self.poset.up_masks[i] & self.poset.up_masks[j])

    def join_of(self, mask: int) -> Optional[int]:
        """Least upper bound of a set of elements, the bottom for the empty set."""
        bounds = reduce(lambda acc, q: acc & self.poset.up_masks[q], iter_bits(mask), (1 << self.n) - 1)
        return self.least(bounds)

    def lower(self, p: int) -> List[int]:
        """Lower neighbors N(p)."""
        return self.poset.lower_covers(p)

    def covers(self, lower: int, upper: int) -> bool:
        return self.poset.graph.has_edge(lower, upper)

    @property
    def is_lattice(self) -> bool:
        return self.top is not None

    @cached_property
    def deg(self) -> List[int]:
        return [mask.bit_count() for mask in self.ell]

    @cached_property
    def rank(self) -> List[int]:
        """Length of the longest chain from the bottom to each element."""
        rank = [0] * self.n
        for p in self.poset.topological_order:
            rank[p] = max((rank[q] + 1 for q in self.lower(p)), default=0)
        return rank

    @cached_property
    def shortest_rank(self) -> List[int]:
        """Length of the shortest maximal chain from the bottom to each element."""
        rank = [0] * self.n
        for p in self.poset.topological_order:
            rank[p] = min((rank[q] + 1 for q in self.lower(p)), default=0)
        return rank

    @cached_property
    def order(self) -> List[int]:
        """The linear order extending the degree: by degree, then by index."""
        return sorted(range(self.n), key=lambda p: (self.deg[p], p))

    @cached_property
    def irreducible_poset(self) -> Poset:
        """The join-irreducibles with the induced order, in their variable order."""
        members = self.irreducibles
        return Poset([self.poset.elements[p] for p in members], self.poset.leq[np.ix_(members, members)])

    def label(self, i: int) -> str:
        return self.poset.elements[i]

    def labels(self, indices) -> List[str]:
        return [self.poset.elements[i] for i in indices]

    def index(self, label: str) -> int:
        return self.poset.indices([label])[0]

    def ell_labels(self, q: int) -> List[str]:
        return [self.label(self.irreducibles[k]) for k in iter_bits(self.ell[q])]

    def is_boolean_interval(self, x: int, y: int) -> bool:
        """Whether the interval [x, y] is a Boolean lattice."""
        down, up = self.poset.down_masks, self.poset.up_masks
        members = up[x] & down[y]
        atoms = [z for z in iter_bits(members) if z != x and down[z] & members == (1 << x | 1 << z)]
        if members.bit_count() != 1 << len(atoms):
            return False
        signature = {z: mask_of(k for k, a in enumerate(atoms) if down[z] >> a & 1) for z in iter_bits(members)}
        if len(set(signature.values())) != len(signature):
            return False
        return all(
            self.poset.le(z, w) == (signature[z] & ~signature[w] == 0)
            for z in signature
            for w in signature
        )


@dataclass
class Classification:
    """Classification flags and per-element degree and rank of a semilattice.

    The flags ``is_distributive``, ``is_upper_semimodular`` and ``is_lower_semimodular`` are None when the semilattice has no top element.
    """

    is_lattice: bool
    is_graded: bool
    is_distributive: Optional[bool]
    is_meet_distributive: bool
    is_meet_irredundant: bool
    is_upper_semimodular: Optional[bool]
    is_lower_semimodular: Optional[bool]
    deg: Dict[str, int]
    rank: Dict[str, int]

    def to_dict(self) -> dict:
        return asdict(self)


def build_semilattice(poset: Poset) -> MeetSemilattice:
    """Builds the meet-semilattice structure on ``poset``, raising `NotMeetSemilattice` when some pair has no meet."""
    return MeetSemilattice(poset)


def semilattice_from_covers(elements: Sequence[str], covers) -> MeetSemilattice:
    return MeetSemilattice(build_poset(elements, covers))


def meet_set(L: MeetSemilattice, labels: Sequence[str]) -> str:
    return L.label(L.meet_of(L.poset.mask(labels)))


def lower_neighbors(L: MeetSemilattice, label: str) -> List[str]:
    return L.labels(L.lower(L.index(label)))


def join(L: MeetSemilattice, a: str, b: str) -> Optional[str]:
    j = L.join(L.index(a), L.index(b))
    return None if j is None else L.label(j)


def is_graded(L: MeetSemilattice) -> bool:
    return L.rank == L.shortest_rank


def is_meet_distributive(L: MeetSemilattice) -> bool:
    """Every interval [x, y] whose bottom is the meet of the lower neighbors of y inside it is Boolean.

    The shortcut test on the intervals [meet N(y), y] is evaluated as well and must agree.
    """
    literal = True
    for y in range(L.n):
        for x in iter_bits(L.poset.down_masks[y] & ~(1 << y)):
            inside = mask_of(z for z in L.lower(y) if L.poset.le(x, z))
            if inside and L.meet_of(inside) == x and not L.is_boolean_interval(x, y):
                literal = False
                break
        if not literal:
            break

    shortcut = True
    for y in range(L.n):
        neighbors = L.lower(y)
        if neighbors:
            bottom = L.meet_of(mask_of(neighbors))
            interval = L.poset.up_masks[bottom] & L.poset.down_masks[y]
            if not L.is_boolean_interval(bottom, y) or interval.bit_count() != 1 << len(neighbors):
                shortcut = False
                break

    assert literal == shortcut
    return literal


def is_meet_irredundant(L: MeetSemilattice) -> bool:
    """Every proper nonempty subset of N(p) has a meet strictly above the meet of N(p)."""
    for p in range(L.n):
        neighbors = L.lower(p)
        if len(neighbors) < 2:
            continue
        full = L.meet_of(mask_of(neighbors))
        for size in range(1, len(neighbors)):
            for subset in combinations(neighbors, size):
                if L.meet_of(mask_of(subset)) == full:
                    return False
    return True


def is_distributive(L: MeetSemilattice) -> Optional[bool]:
    """Birkhoff test: the lattice is isomorphic to the poset ideals of its join-irreducibles.

    Cross-checked against the distributive law on all triples.
    """
    if not L.is_lattice:
        return None
    ideals = ideal_masks(L.irreducible_poset)
    birkhoff = len(ideals) == L.n and len(set(L.ell)) == L.n

    law = True
    for a in range(L.n):
        for b in range(L.n):
            for c in range(b + 1, L.n):
                left = L.meet(a, L.join(b, c))
                right = L.join(L.meet(a, b), L.meet(a, c))
                if left != right:
                    law = False
                    break
            if not law:
                break
        if not law:
            break

    assert birkhoff == law
    return birkhoff


def is_upper_semimodular(L: MeetSemilattice) -> Optional[bool]:
    if not L.is_lattice:
        return None
    for p, q in combinations(range(L.n), 2):
        m = L.meet(p, q)
        if L.covers(m, p) and L.covers(m, q):
            j = L.join(p, q)
            if not (L.covers(p, j) and L.covers(q, j)):
                return False
    return True


def is_lower_semimodular(L: MeetSemilattice) -> Optional[bool]:
    if not L.is_lattice:
        return None
    for p, q in combinations(range(L.n), 2):
        j = L.join(p, q)
        if L.covers(p, j) and L.covers(q, j):
            m = L.meet(p, q)
            if not (L.covers(m, p) and L.covers(m, q)):
                return False
    return True


def classify(L: MeetSemilattice) -> Classification:
    """Computes all classification flags of ``L``.

    Examples
    --------
        >>> classify(boolean_lattice(3)).is_meet_distributive
        True
    """
    return Classification(
        is_lattice=L.is_lattice,
        is_graded=is_graded(L),
        is_distributive=is_distributive(L),
        is_meet_distributive=is_meet_distributive(L),
        is_meet_irredundant=is_meet_irredundant(L),
        is_upper_semimodular=is_upper_semimodular(L),
        is_lower_semimodular=is_lower_semimodular(L),
        deg={L.label(p): L.deg[p] for p in range(L.n)},
        rank={L.label(p): L.rank[p] for p in range(L.n)},
    )


def meet_distributive_characterizations(L: MeetSemilattice) -> Dict[str, bool]:
    """The equivalent descriptions of meet-distributivity, each computed on its own.

    ``degree_equals_rank`` applies to every semilattice, ``top_degree_equals_rank`` and ``unique_minimal_joins`` only to lattices and are omitted otherwise.
    """
    graded = is_graded(L)
    result = {
        "meet_distributive": is_meet_distributive(L),
        "degree_equals_rank": graded and L.deg == L.rank,
    }
    if L.is_lattice:
        result["top_degree_equals_rank"] = graded and L.deg[L.top] == L.rank[L.top]
        result["unique_minimal_joins"] = unique_minimal_joins(L)
    return result


def unique_minimal_joins(L: MeetSemilattice) -> bool:
    """Whether every element is the join of a unique minimal set of join-irreducibles."""
    if not L.is_lattice:
        raise NotLattice()
    for q in range(L.n):
        below = [L.irreducibles[k] for k in iter_bits(L.ell[q])]
        spanning = []
        for size in range(len(below) + 1):
            for subset in combinations(below, size):
                mask = mask_of(subset)
                if any(found & ~mask == 0 for found in spanning):
                    continue
                if L.join_of(mask) == q:
                    spanning.append(mask)
        if len(spanning) != 1:
            return False
    return True


@dataclass
class BirkhoffCompletion:
    """The distributive lattice of poset ideals of P with the embedding ``q -> ell(q)``."""

    lattice: MeetSemilattice
    embedding: Dict[str, str]

    @property
    def is_bijective(self) -> bool:
        return len(set(self.embedding.values())) == self.lattice.n


def ideal_label(P: Poset, mask: int) -> str:
    """Label of a poset ideal: the element label for principal ideals, the generators in braces otherwise."""
    tops = P.maximal(mask)
    if tops.bit_count() == 1 and P.down_masks[tops.bit_length() - 1] == mask:
        return P.elements[tops.bit_length() - 1]
    return "{" + ",".join(P.labels(tops)) + "}"


def distributive_lattice(P: Poset, max_elements: Optional[int] = None) -> MeetSemilattice:
    """The lattice of poset ideals of ``P`` ordered by inclusion.

    Principal ideals carry the label of their generator, so the join-irreducibles of the result are labelled like ``P``.
    """
    masks = ideal_masks(P, max_elements)
    labels = [ideal_label(P, mask) for mask in masks]
    position = {mask: k for k, mask in enumerate(masks)}
    covers = [
        (labels[k], labels[position[mask | 1 << i]])
        for k, mask in enumerate(masks)
        for i in range(P.n)
        if not mask >> i & 1 and mask | 1 << i in position
    ]
    return MeetSemilattice(build_poset(labels, covers))


def birkhoff_completion(L: MeetSemilattice, max_elements: Optional[int] = None) -> BirkhoffCompletion:
    """Embeds ``L`` into the distributive lattice of poset ideals of its join-irreducibles."""
    P = L.irreducible_poset
    completion = distributive_lattice(P, max_elements)
    embedding = {L.label(q): ideal_label(P, L.ell[q]) for q in range(L.n)}
    return BirkhoffCompletion(completion, embedding)


def boolean_lattice(n: int) -> MeetSemilattice:
    """Boolean lattice on the atoms ``a, b, c, ...``."""
    atoms = [chr(ord("a") + i) if n <= 26 else f"a{i}" for i in range(n)]
    return distributive_lattice(build_poset(atoms, []))


def chain(n: int) -> MeetSemilattice:
    """Chain ``0 < 1 < ... < n-1``."""
    labels = [str(i) for i in range(n)]
    return MeetSemilattice(build_poset(labels, zip(labels, labels[1:])))


def _fresh_label(L: MeetSemilattice, base: str) -> str:
    label = base
    while label in L.poset.index:
        label += "'"
    return label


def _covers_labels(L: MeetSemilattice) -> List[tuple]:
    return [(L.label(i), L.label(j)) for i, j in L.poset.covers]


def insert_between(L: MeetSemilattice, lower: str, upper: str) -> MeetSemilattice:
    """Adds a new element strictly between ``lower`` and the element ``upper`` covering it."""
    q, p = L.index(lower), L.index(upper)
    if not L.covers(q, p):
        raise ValueError(f"<{upper}> does not cover <{lower}>.")
    new = _fresh_label(L, f"{lower}.{upper}")
    covers = [pair for pair in _covers_labels(L) if pair != (lower, upper)]
    covers += [(lower, new), (new, upper)]
    return MeetSemilattice(build_poset(list(L.poset.elements) + [new], covers))


def add_top(L: MeetSemilattice) -> MeetSemilattice:
    """Adjoins a new greatest element."""
    new = _fresh_label(L, "1")
    maxima = [L.label(i) for i in range(L.n) if L.poset.up_masks[i] == 1 << i]
    covers = _covers_labels(L) + [(m, new) for m in maxima]
    return MeetSemilattice(build_poset(list(L.poset.elements) + [new], covers))


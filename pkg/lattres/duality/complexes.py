"""
Simplicial complexes given by their facets, with the Stanley-Reisner and facet ideal correspondences and the Alexander dual.

Faces are bitmasks over the vertex indices. The void complex has no facets, the irrelevant complex has the single facet ``{}``.
"""
from __future__ import annotations
from typing import Iterable, List, Optional, Sequence
from ..configuration import get_config
from ..exceptions import NoFacets, TooLarge, UnitIdeal, UnknownLabel
from ..ideals.monomial import MonomialIdeal, Ring, SquarefreeMonomial
from ..posets.poset import bit_key, iter_bits, mask_of


def minimal_sets(masks: Iterable[int]) -> List[int]:
    """Inclusion-minimal members of ``masks``, sorted by size and then by member indices."""
    kept = []
    for mask in sorted(set(masks), key=bit_key):
        if not any(k & ~mask == 0 for k in kept):
            kept.append(mask)
    return kept


def maximal_sets(masks: Iterable[int]) -> List[int]:
    masks = sorted(set(masks), key=lambda m: -m.bit_count())
    kept = []
    for mask in masks:
        if not any(mask & ~k == 0 for k in kept):
            kept.append(mask)
    return sorted(kept, key=bit_key)


def minimal_transversals(edges: Iterable[int]) -> List[int]:
    """All inclusion-minimal sets meeting every edge of a hypergraph.

    Edges are added one at a time; each partial transversal missing the new edge is extended by every vertex of it, and the result is reduced to its minimal members. A hypergraph with an empty edge has no transversal, one without edges has the empty transversal.
    """
    transversals = [0]
    for edge in minimal_sets(edges):
        if edge == 0:
            return []
        extended = set()
        for t in transversals:
            if t & edge:
                extended.add(t)
            else:
                extended.update(t | 1 << v for v in iter_bits(edge))
        transversals = minimal_sets(extended)
    return transversals


def minimal_transversals_bruteforce(edges: Sequence[int], n: int, max_vertices: Optional[int] = None) -> List[int]:
    """Minimal transversals by scanning all ``2^n`` vertex subsets."""
    if max_vertices is None:
        max_vertices = get_config("duality")["max_cover_oracle_vertices"]
    if n > max_vertices:
        raise TooLarge("vertex set", n, max_vertices)
    hits = [mask for mask in range(1 << n) if all(mask & edge for edge in edges)]
    return minimal_sets(hits)


class SimplicialComplex:
    """Simplicial complex on an ordered vertex list, stored as its facets.

    Parameters
    ----------
    vertices
        Vertex labels; isolated vertices are allowed and are faces only if some facet contains them.
    facets
        Faces as bitmasks over ``vertices``; reduced to the inclusion-maximal ones.
    """

    def __init__(self, vertices: Sequence[str], facets: Iterable[int]):
        self.vertices = tuple(vertices)
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self.facets = maximal_sets(facets)

    @classmethod
    def from_labels(cls, vertices: Sequence[str], facets: Iterable[Iterable[str]]) -> SimplicialComplex:
        index = {v: i for i, v in enumerate(vertices)}
        masks = []
        for facet in facets:
            for v in facet:
                if v not in index:
                    raise UnknownLabel(v)
            masks.append(mask_of(index[v] for v in facet))
        return cls(vertices, masks)

    def __repr__(self):
        return "<" + ", ".join("{" + ",".join(f) + "}" for f in self.facet_labels()) + ">"

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.vertices == other.vertices and self.facets == other.facets

    def __hash__(self):
        return hash((self.vertices, tuple(self.facets)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def is_void(self) -> bool:
        return not self.facets

    def labels(self, mask: int) -> List[str]:
        return [self.vertices[i] for i in iter_bits(mask)]

    def facet_labels(self) -> List[List[str]]:
        return [self.labels(f) for f in self.facets]

    def contains(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "facets": self.facet_labels()}


def complex_ring(complex: SimplicialComplex) -> Ring:
    return Ring(complex.vertices)


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose minimal nonfaces are the supports of the minimal generators.

    Its facets are the complements of the minimal transversals of the generator supports.

    Raises
    ------
    UnitIdeal
        The unit ideal would give the void complex.
    """
    if ideal.is_unit:
        raise UnitIdeal()
    full = (1 << len(ideal.ring)) - 1
    covers = minimal_transversals(g.mask for g in ideal.minimal)
    return SimplicialComplex(ideal.ring.variables, [full & ~c for c in covers])


def stanley_reisner_ideal(complex: SimplicialComplex) -> MonomialIdeal:
    """The ideal generated by the minimal nonfaces, the minimal transversals of the facet complements."""
    nonfaces = minimal_transversals(complex.full & ~f for f in complex.facets)
    return MonomialIdeal(complex_ring(complex), [SquarefreeMonomial(m) for m in nonfaces])


def facet_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose facets are the supports of the minimal generators."""
    return SimplicialComplex(ideal.ring.variables, [g.mask for g in ideal.minimal])


def facet_ideal(complex: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal(complex_ring(complex), [SquarefreeMonomial(f) for f in complex.facets])


def alexander_dual_complex(complex: SimplicialComplex) -> SimplicialComplex:
    """The complex of complements of the nonfaces.

    Its facets are the complements of the minimal nonfaces. The full simplex has the void complex as dual and the other way round.
    """
    nonfaces = minimal_transversals(complex.full & ~f for f in complex.facets)
    return SimplicialComplex(complex.vertices, [complex.full & ~m for m in nonfaces])


def minimal_vertex_covers(complex: SimplicialComplex) -> List[List[str]]:
    """Inclusion-minimal vertex sets meeting every facet.

    Raises
    ------
    NoFacets
    """
    if complex.is_void:
        raise NoFacets()
    return [complex.labels(c) for c in minimal_transversals(complex.facets)]


def is_pure(complex: SimplicialComplex) -> bool:
    return len({f.bit_count() for f in complex.facets}) <= 1


def maximal_faces(edges: Sequence[int], n: int) -> List[int]:
    """Maximal vertex sets containing no edge, by depth-first search over the vertices in order.

    A branch includes a vertex only if no edge is completed, and a leaf is kept if no vertex can be added.
    """
    edges = minimal_sets(edges)
    if any(e == 0 for e in edges):
        return []
    found = []

    def extend(v: int, face: int):
        if v == n:
            addable = [w for w in range(n) if not face >> w & 1 and not any(e & ~(face | 1 << w) == 0 for e in edges)]
            if not addable:
                found.append(face)
            return
        with_v = face | 1 << v
        if not any(e & ~with_v == 0 for e in edges):
            extend(v + 1, with_v)
        extend(v + 1, face)

    extend(0, 0)
    return sorted(found, key=bit_key)

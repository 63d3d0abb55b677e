"""
Bipartite graphs, the distributive lattice of a Cohen-Macaulay bipartite graph, and the Cohen-Macaulay test for facet ideals of complexes on two vertex classes.

For a bipartite graph ``G`` on ``V = {x_1, ..., x_n}`` and ``V' = {y_1, ..., y_n}`` with a perfect matching ``x_i - y_i``, the relation ``p_i <= p_j`` iff ``{x_i, y_j}`` is an edge is a partial order on ``V`` exactly when ``G`` comes from a poset; then the dual of ``H_J(P)`` is the edge ideal of ``G`` once ``x_p`` is read as ``p`` and ``y_p`` as its matched vertex.
"""
from __future__ import annotations
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple
import networkx as nx
import numpy as np
from sympy.polys.domains.domain import Domain
from .cohen_macaulay import eagon_reiner_cm
from .complexes import SimplicialComplex, facet_ideal, is_pure, stanley_reisner_complex
from .poset_duals import outside_ideal_generators
from .primes import dual_ideal
from ..configuration import field_name, get_config, get_field
from ..exceptions import (
    DuplicateLabel,
    HypothesisViolated,
    NoPerfectMatching,
    NotAPartialOrder,
    TooLarge,
    UnknownLabel,
)
from ..ideals.lattice_ideals import lattice_ideal, lattice_ring
from ..ideals.monomial import MonomialIdeal, Ring
from ..posets.poset import Poset, ideal_masks
from ..posets.semilattice import MeetSemilattice, distributive_lattice


class BipartiteGraph:
    """Graph with edges between the vertex classes ``left`` and ``right`` only.

    Parameters
    ----------
    left, right
        Vertex labels of the two classes; a label may not appear in both.
    edges
        Pairs ``(l, r)`` with ``l`` in ``left`` and ``r`` in ``right``.
    """

    def __init__(self, left: Sequence[str], right: Sequence[str], edges: Sequence[Tuple[str, str]]):
        self.left = tuple(left)
        self.right = tuple(right)
        seen = set()
        for v in self.left + self.right:
            if v in seen:
                raise DuplicateLabel(v)
            seen.add(v)
        left_set, right_set = set(self.left), set(self.right)
        self.edges = []
        for l, r in edges:
            if l in right_set and r in left_set:
                l, r = r, l
            for v, side in ((l, left_set), (r, right_set)):
                if v not in side:
                    raise UnknownLabel(v)
            if (l, r) not in self.edges:
                self.edges.append((l, r))

    def __repr__(self):
        return f"<BipartiteGraph {len(self.left)}+{len(self.right)} vertices, {len(self.edges)} edges>"

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.left, bipartite=0)
        graph.add_nodes_from(self.right, bipartite=1)
        graph.add_edges_from(self.edges)
        return graph

    @property
    def ring(self) -> Ring:
        return Ring(self.left + self.right)

    def isolated(self) -> List[str]:
        return [v for v in self.left + self.right if self.graph.degree(v) == 0]

    def has_edge(self, l: str, r: str) -> bool:
        return self.graph.has_edge(l, r)

    def to_dict(self) -> dict:
        return {"left": list(self.left), "right": list(self.right), "edges": [list(e) for e in self.edges]}


def edge_ideal(G: BipartiteGraph) -> MonomialIdeal:
    ring = G.ring
    return MonomialIdeal(ring, [ring.monomial(edge) for edge in G.edges])


def perfect_matching(G: BipartiteGraph) -> Dict[str, str]:
    """A perfect matching as a map from ``left`` to ``right``, by Hopcroft-Karp.

    Raises
    ------
    NoPerfectMatching
    """
    needed = max(len(G.left), len(G.right))
    matching = nx.bipartite.hopcroft_karp_matching(G.graph, top_nodes=G.left)
    matched = {l: matching[l] for l in G.left if l in matching}
    if len(matched) != needed or len(G.left) != len(G.right):
        raise NoPerfectMatching(len(matched), needed)
    return matched


@dataclass
class BipartiteLattice:
    """The poset ``P`` on ``left`` and the lattice ``L(G) = J(P)`` of a bipartite graph.

    Attributes
    ----------
    matching : dict
        The perfect matching used to label the right class.
    dual_matches : bool
        Whether the dual of ``H_L(G)``, translated to the vertices of ``G``, is the edge ideal.
    """

    graph: BipartiteGraph
    poset: Poset
    lattice: MeetSemilattice
    matching: Dict[str, str]
    dual_matches: bool

    @property
    def valid(self) -> bool:
        return self.dual_matches

    def translation(self) -> Dict[str, str]:
        """Variable names of the lattice ring mapped to vertices of the graph."""
        mapping = {}
        for p in self.poset.elements:
            mapping[f"x_{p}"] = p
            mapping[f"y_{p}"] = self.matching[p]
        return mapping

    def translate(self, ideal: MonomialIdeal) -> MonomialIdeal:
        ring, mapping = self.graph.ring, self.translation()
        return MonomialIdeal(ring, [ideal.ring.rename(g, ring, mapping) for g in ideal.minimal])

    def to_dict(self) -> dict:
        covers = [[self.poset.elements[i], self.poset.elements[j]] for i, j in self.poset.covers]
        return {
            "matching": self.matching,
            "poset": {"elements": list(self.poset.elements), "covers": covers},
            "lattice_size": self.lattice.n,
            "dual_matches": self.dual_matches,
            "valid": self.valid,
        }


def bipartite_lattice(G: BipartiteGraph, max_elements: Optional[int] = None) -> BipartiteLattice:
    """Reconstructs ``P`` from the edges of ``G`` and builds ``L(G)``.

    Raises
    ------
    NoPerfectMatching
    NotAPartialOrder
        If the edge relation is not antisymmetric or not transitive.
    """
    matching = perfect_matching(G)
    left = list(G.left)
    relation = np.array([[G.has_edge(p, matching[q]) for q in left] for p in left], dtype=bool)

    both = relation & relation.T & ~np.eye(len(left), dtype=bool)
    if both.any():
        i, j = map(int, np.argwhere(both)[0])
        raise NotAPartialOrder(f"{left[i]} and {left[j]} are below each other")
    composite = (relation.astype(int) @ relation.astype(int)) > 0
    if (composite & ~relation).any():
        i, j = map(int, np.argwhere(composite & ~relation)[0])
        raise NotAPartialOrder(f"{left[i]} <= {left[j]} follows by transitivity but is not an edge")

    P = Poset(left, relation)
    L = distributive_lattice(P, max_elements)
    result = BipartiteLattice(G, P, L, matching, False)
    result.dual_matches = result.translate(dual_ideal(lattice_ideal(L))) == edge_ideal(G)
    return result


@dataclass
class FacetIdealReport:
    """The three equivalent conditions on a complex ``Delta`` on two vertex classes.

    Attributes
    ----------
    cohen_macaulay : bool
        ``S / I(Delta)`` is Cohen-Macaulay.
    pure : bool
        The complex with Stanley-Reisner ideal ``I(Delta)`` is pure.
    from_poset_ideal : bool or None
        Some poset ideal of ``L(G)`` containing all join-irreducibles has dual ``I(Delta)``; None if the search hit its cap.
    """

    cohen_macaulay: bool
    pure: bool
    from_poset_ideal: Optional[bool]
    graph: BipartiteGraph
    ideal: List[str] = field(default_factory=list)
    searched: int = 0
    field: str = "Q"

    @property
    def consistent(self) -> bool:
        agree = self.cohen_macaulay == self.pure
        if self.from_poset_ideal is not None:
            agree = agree and self.from_poset_ideal == self.cohen_macaulay
        return agree

    def to_dict(self) -> dict:
        return {
            "cohen_macaulay": self.cohen_macaulay,
            "pure": self.pure,
            "from_poset_ideal": self.from_poset_ideal,
            "poset_ideal": self.ideal,
            "searched": self.searched,
            "consistent": self.consistent,
            "field": self.field,
        }


def _graph_of(complex: SimplicialComplex, left: Sequence[str], right: Sequence[str]) -> BipartiteGraph:
    n = len(left)
    left_mask = (1 << n) - 1
    edges = []
    for facet in complex.facets:
        if facet & ~left_mask == 0:
            raise HypothesisViolated(1, f"facet {{{','.join(complex.labels(facet))}}} lies in the left class")
        if facet & left_mask and facet & ~left_mask:
            if facet.bit_count() != 2:
                raise HypothesisViolated(
                    2, f"facet {{{','.join(complex.labels(facet))}}} meets both classes but is not an edge"
                )
            l, r = complex.labels(facet)
            edges.append((l, r))
    G = BipartiteGraph(left, right, edges)
    isolated = G.isolated()
    if isolated:
        raise HypothesisViolated(2, f"vertex {isolated[0]} is isolated in the bipartite graph")
    return G


def facet_ideal_cm_check(
    complex: SimplicialComplex,
    left: Sequence[str],
    right: Sequence[str],
    domain: Optional[Domain] = None,
    max_ideal_search: Optional[int] = None,
) -> FacetIdealReport:
    """Evaluates three conditions on a complex ``Delta`` on ``left`` and ``right`` that are equivalent under two hypotheses.

    The hypotheses are that no facet lies in ``left``, and that the facets meeting both classes form a Cohen-Macaulay bipartite graph ``G`` without isolated vertices. The conditions are that ``S / I(Delta)`` is Cohen-Macaulay, that the complex with Stanley-Reisner ideal ``I(Delta)`` is pure, and that ``I(Delta)`` is the dual of ``H_I`` for a poset ideal ``I`` of ``L(G)`` containing the join-irreducibles.

    Parameters
    ----------
    max_ideal_search
        Number of poset ideals of ``L(G)`` tried, ``[duality] max_ideal_search`` by default.

    Raises
    ------
    HypothesisViolated
    UnknownLabel
        If a facet uses a vertex outside both classes.
    NoPerfectMatching, NotAPartialOrder
    """
    if domain is None:
        domain = get_field()
    if max_ideal_search is None:
        max_ideal_search = get_config("duality")["max_ideal_search"]
    delta = SimplicialComplex.from_labels(list(left) + list(right), complex.facet_labels())
    G = _graph_of(delta, left, right)
    if not eagon_reiner_cm(edge_ideal(G), domain):
        raise HypothesisViolated(2, "the bipartite graph is not Cohen-Macaulay")
    lattice = bipartite_lattice(G)

    ideal = facet_ideal(delta)
    report = FacetIdealReport(
        cohen_macaulay=eagon_reiner_cm(ideal, domain),
        pure=is_pure(stanley_reisner_complex(ideal)),
        from_poset_ideal=None,
        graph=G,
        field=field_name(domain),
    )

    L = lattice.lattice
    try:
        masks = ideal_masks(L.poset)
    except TooLarge:
        return report
    irreducibles = 0
    for p in L.irreducibles:
        irreducibles |= 1 << p
    base = list(dual_ideal(lattice_ideal(L)).minimal)
    ring = lattice_ring(L)
    candidates = [mask for mask in masks if mask & irreducibles == irreducibles]
    for mask in candidates[:max_ideal_search]:
        report.searched += 1
        dual = MonomialIdeal(ring, base + outside_ideal_generators(L, mask))
        if lattice.translate(dual) == ideal:
            report.from_poset_ideal = True
            report.ideal = L.poset.labels(mask)
            return report
    if len(candidates) <= max_ideal_search:
        report.from_poset_ideal = False
    return report

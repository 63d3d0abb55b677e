"""
Generation of small posets and meet-semilattices up to isomorphism.

Every finite poset arises from a smaller one by adding a maximal element above a down-closed set, so the posets with ``k`` elements are produced from those with ``k - 1`` elements and deduplicated with `networkx` isomorphism tests inside Weisfeiler-Lehman hash buckets. A meet-semilattice stays one when the new element sits above a nonempty down-closed set ``D`` such that ``D`` meets every principal ideal in a principal ideal.
"""
from __future__ import annotations
from collections import defaultdict
from random import Random
from typing import Callable, List, Optional
import networkx as nx
import numpy as np
from .poset import Poset, iter_bits
from .semilattice import MeetSemilattice
from ..configuration import get_config
from ..exceptions import TooLarge


Downs = List[int]


def _down_closed(downs: Downs) -> List[int]:
    masks = [0]
    for i, down in enumerate(downs):
        below = down & ~(1 << i)
        masks += [mask | 1 << i for mask in masks if mask & below == below]
    return masks


def _keeps_meets(downs: Downs, new: int) -> bool:
    if new == 0:
        return False
    principal = set(downs)
    return all(new & down in principal for down in downs)


def _hasse(downs: Downs) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(downs)))
    for j, down in enumerate(downs):
        strict = down & ~(1 << j)
        for i in iter_bits(strict):
            if not any(downs[z] >> i & 1 for z in iter_bits(strict & ~(1 << i))):
                graph.add_edge(i, j)
    return graph


def _grow(max_elements: int, accept: Callable[[Downs, int], bool], start: List[Downs]) -> List[List[Downs]]:
    levels = [start]
    while len(levels[-1][0]) < max_elements:
        buckets = defaultdict(list)
        level = []
        for downs in levels[-1]:
            k = len(downs)
            for below in _down_closed(downs):
                if not accept(downs, below):
                    continue
                candidate = downs + [below | 1 << k]
                graph = _hasse(candidate)
                key = nx.weisfeiler_lehman_graph_hash(graph)
                if any(nx.is_isomorphic(graph, other) for other in buckets[key]):
                    continue
                buckets[key].append(graph)
                level.append(candidate)
        levels.append(level)
    return levels


def _to_poset(downs: Downs) -> Poset:
    n = len(downs)
    leq = np.array([[bool(downs[j] >> i & 1) for j in range(n)] for i in range(n)], dtype=bool)
    return Poset([str(i) for i in range(n)], leq)


def _check_cap(max_elements: int, cap: Optional[int]):
    if cap is None:
        cap = get_config("poset")["max_elements"]
    if max_elements > cap:
        raise TooLarge("generated population", max_elements, cap)


def enumerate_posets(max_elements: int, cap: Optional[int] = None) -> List[Poset]:
    """All posets with 1 to ``max_elements`` elements up to isomorphism, smallest first.

    Elements are labelled ``"0", "1", ...`` in a linear extension.
    """
    _check_cap(max_elements, cap)
    if max_elements < 1:
        return []
    levels = _grow(max_elements, lambda downs, below: True, [[1]])
    return [_to_poset(downs) for level in levels for downs in level]


def enumerate_semilattices(max_elements: int, cap: Optional[int] = None) -> List[MeetSemilattice]:
    """All meet-semilattices with 1 to ``max_elements`` elements up to isomorphism, smallest first.

    Examples
    --------
    The counts per size agree with the number of lattices with one more element.

        >>> [len([L for L in enumerate_semilattices(5) if L.n == k]) for k in range(1, 6)]
        [1, 1, 2, 5, 15]
    """
    _check_cap(max_elements, cap)
    if max_elements < 1:
        return []
    levels = _grow(max_elements, _keeps_meets, [[1]])
    return [MeetSemilattice(_to_poset(downs)) for level in levels for downs in level]


def random_semilattice(n: int, rng: Random) -> MeetSemilattice:
    """A meet-semilattice on ``n`` elements grown by random admissible maximal extensions."""
    downs = [1]
    while len(downs) < n:
        options = [below for below in _down_closed(downs) if _keeps_meets(downs, below)]
        below = options[rng.randrange(len(options))]
        downs.append(below | 1 << len(downs))
    return MeetSemilattice(_to_poset(downs))


def random_poset(n: int, rng: Random) -> Poset:
    downs = [1]
    while len(downs) < n:
        options = _down_closed(downs)
        below = options[rng.randrange(len(options))]
        downs.append(below | 1 << len(downs))
    return _to_poset(downs)

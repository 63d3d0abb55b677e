"""
Finite posets stored as a read-only boolean order matrix, with the Hasse diagram kept as a `networkx.DiGraph`.

Subsets of elements are passed around as integer bitmasks over the element indices; `iter_bits` and `mask_of` convert between masks and index lists.
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple
import networkx as nx
import numpy as np
from ..configuration import get_config
from ..exceptions import CycleDetected, DuplicateLabel, TooLarge, UnknownLabel


def iter_bits(mask: int) -> Iterator[int]:
    """Yields the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def bit_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Sort key of element sets: size, then lexicographic on the member indices."""
    return mask.bit_count(), tuple(iter_bits(mask))


class Poset:
    """Finite partially ordered set.

    Parameters
    ----------
    elements
        Element labels. The position of a label is its index, used for every tie-break.
    leq
        Boolean matrix with ``leq[i, j]`` true iff element ``i`` is below or equal to element ``j``. Must be a partial order; use `build_poset` to construct one from a cover list.

    Attributes
    ----------
    index : dict
        Label to index lookup.
    graph : networkx.DiGraph
        Hasse diagram on the indices, edges point from an element to the elements covering it.
    """

    def __init__(self, elements: Sequence[str], leq: np.ndarray):
        self.elements = tuple(elements)
        self.index = {label: i for i, label in enumerate(self.elements)}
        self.n = len(self.elements)
        leq = np.array(leq, dtype=bool)
        leq.flags.writeable = False
        self.leq = leq

    def __repr__(self):
        return f"<Poset on {self.n} elements>"

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self):
        return hash((self.elements, self.leq.tobytes()))

    @cached_property
    def graph(self) -> nx.DiGraph:
        closure = nx.DiGraph()
        closure.add_nodes_from(range(self.n))
        closure.add_edges_from(
            (int(i), int(j)) for i, j in zip(*np.nonzero(self.leq & ~np.eye(self.n, dtype=bool)))
        )
        return nx.transitive_reduction(closure)

    @cached_property
    def covers(self) -> List[Tuple[int, int]]:
        """Cover pairs ``(child, parent)`` sorted by index."""
        return sorted(self.graph.edges)

    @cached_property
    def down_masks(self) -> List[int]:
        return [mask_of(np.nonzero(self.leq[:, i])[0]) for i in range(self.n)]

    @cached_property
    def up_masks(self) -> List[int]:
        return [mask_of(np.nonzero(self.leq[i, :])[0]) for i in range(self.n)]

    @cached_property
    def topological_order(self) -> List[int]:
        return list(nx.lexicographical_topological_sort(self.graph))

    def le(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j])

    def lower_covers(self, i: int) -> List[int]:
        return sorted(self.graph.predecessors(i))

    def upper_covers(self, i: int) -> List[int]:
        return sorted(self.graph.successors(i))

    def indices(self, labels: Iterable[str]) -> List[int]:
        """Indices of ``labels``, raises `UnknownLabel` on undeclared labels."""
        indices = []
        for label in labels:
            if label not in self.index:
                raise UnknownLabel(label)
            indices.append(self.index[label])
        return indices

    def mask(self, labels: Iterable[str]) -> int:
        return mask_of(self.indices(labels))

    def labels(self, mask: int) -> List[str]:
        return [self.elements[i] for i in iter_bits(mask)]

    def maximal(self, mask: int) -> int:
        """Maximal elements of the subset ``mask``."""
        return mask_of(i for i in iter_bits(mask) if self.up_masks[i] & mask == 1 << i)

    def minimal(self, mask: int) -> int:
        """Minimal elements of the subset ``mask``."""
        return mask_of(i for i in iter_bits(mask) if self.down_masks[i] & mask == 1 << i)


@dataclass(frozen=True)
class PosetIdeal:
    """Downward closed subset of a poset."""

    poset: Poset
    mask: int

    @property
    def members(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    @property
    def labels(self) -> List[str]:
        return self.poset.labels(self.mask)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, label: str):
        return bool(self.mask >> self.poset.index[label] & 1)

    def __repr__(self):
        return "{" + ",".join(self.labels) + "}"


@dataclass(frozen=True, repr=False)
class PosetCoideal(PosetIdeal):
    """Upward closed subset of a poset."""


def build_poset(elements: Sequence[str], covers: Iterable[Sequence[str]]) -> Poset:
    """Builds a poset from labels and any relation whose closure is the order.

    The relation is closed reflexively and transitively; the stored covers are the transitive reduction of the closure.

    Parameters
    ----------
    elements
        Distinct labels, the list order fixes the indices.
    covers
        Pairs ``(below, above)`` of declared labels.

    Examples
    --------
        >>> P = build_poset(["a", "b", "c", "d"], [("a", "c"), ("b", "d")])
        >>> P.leq.sum()
        6
    """
    index = {}
    for label in elements:
        if label in index:
            raise DuplicateLabel(label)
        index[label] = len(index)

    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(index)))
    for child, parent in covers:
        for label in (child, parent):
            if label not in index:
                raise UnknownLabel(label)
        if child != parent:
            graph.add_edge(index[child], index[parent])

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise CycleDetected([elements[i] for i, _ in cycle])

    leq = np.eye(len(index), dtype=bool)
    for i, j in nx.transitive_closure_dag(graph).edges:
        leq[i, j] = True
    return Poset(list(elements), leq)


def downset(poset: Poset, labels: Iterable[str]) -> PosetIdeal:
    """Smallest poset ideal containing ``labels``."""
    mask = 0
    for i in poset.indices(labels):
        mask |= poset.down_masks[i]
    return PosetIdeal(poset, mask)


def upset(poset: Poset, labels: Iterable[str]) -> PosetCoideal:
    """Smallest poset coideal containing ``labels``."""
    mask = 0
    for i in poset.indices(labels):
        mask |= poset.up_masks[i]
    return PosetCoideal(poset, mask)


def generators(ideal: PosetIdeal) -> List[str]:
    """Maximal members of a poset ideal."""
    return ideal.poset.labels(ideal.poset.maximal(ideal.mask))


def cogenerators(coideal: PosetCoideal) -> List[str]:
    """Minimal members of a poset coideal."""
    return coideal.poset.labels(coideal.poset.minimal(coideal.mask))


def is_down_closed(poset: Poset, mask: int) -> bool:
    return all(poset.down_masks[i] & ~mask == 0 for i in iter_bits(mask))


def is_up_closed(poset: Poset, mask: int) -> bool:
    return all(poset.up_masks[i] & ~mask == 0 for i in iter_bits(mask))


def is_poset_ideal(poset: Poset, labels: Iterable[str]) -> bool:
    return is_down_closed(poset, poset.mask(labels))


def is_poset_coideal(poset: Poset, labels: Iterable[str]) -> bool:
    return is_up_closed(poset, poset.mask(labels))


def ideal_masks(poset: Poset, max_elements: Optional[int] = None) -> List[int]:
    """Bitmasks of all poset ideals, sorted by size and then by member indices.

    Elements are added along a topological order; an element may join a partial ideal once all elements below it are present, so every ideal is produced exactly once.
    """
    if max_elements is None:
        max_elements = get_config("poset")["max_elements"]
    if poset.n > max_elements:
        raise TooLarge("poset", poset.n, max_elements)

    masks = [0]
    for i in poset.topological_order:
        below = poset.down_masks[i] & ~(1 << i)
        masks += [mask | 1 << i for mask in masks if mask & below == below]
    return sorted(masks, key=bit_key)


def enumerate_poset_ideals(poset: Poset, max_elements: Optional[int] = None) -> List[PosetIdeal]:
    """All poset ideals, each exactly once, in a deterministic order."""
    return [PosetIdeal(poset, mask) for mask in ideal_masks(poset, max_elements)]


def dual_poset(poset: Poset) -> Poset:
    """The poset with the order reversed."""
    return Poset(poset.elements, poset.leq.T)


def interval(poset: Poset, x: str, y: str) -> List[str]:
    """Elements ``z`` with ``x <= z <= y``."""
    i, j = poset.indices([x, y])
    return poset.labels(poset.up_masks[i] & poset.down_masks[j])


def subposet(poset: Poset, mask: int) -> Poset:
    """Induced order on the elements of ``mask``, kept in index order."""
    members = list(iter_bits(mask))
    return Poset([poset.elements[i] for i in members], poset.leq[np.ix_(members, members)])

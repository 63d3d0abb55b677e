"""
Betti tables, the Betti number oracle, and regularity.

The oracle computes multigraded Betti numbers without reference to any constructed resolution. Up to ``[resolution] max_oracle_generators`` minimal generators it takes the homology of the Taylor complex tensored with the field, strand by strand; above that it takes the reduced homology of the upper Koszul simplicial complexes

.. math:: K^a = \\{F \\subseteq \\operatorname{supp} a : x^{a - F} \\in I\\}, \\qquad \\beta_{i,a} = \\dim \\tilde H_{i-1}(K^a)

at the multidegrees ``a`` of the lcm lattice.
"""
from __future__ import annotations
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple
import pandas as pd
from sympy.polys.domains.domain import Domain
from .complex import FreeComplex
from .linalg import rank
from ..configuration import get_config, get_field
from ..exceptions import MixedDegrees, Timeout, TooLarge, ZeroIdeal
from ..ideals.monomial import MonomialIdeal, Ring, SquarefreeMonomial, lcm_closure
from ..ideals.quotients import linear_quotients_search
from ..posets.poset import iter_bits, mask_of
from ..posets.semilattice import MeetSemilattice


@dataclass
class BettiTable:
    """Graded and multigraded Betti numbers of an ideal.

    Attributes
    ----------
    graded : dict
        ``(i, j) -> beta_{i,j}``, only nonzero values.
    multigraded : dict
        ``(i, a) -> beta_{i,a}`` with ``a`` a `SquarefreeMonomial`.
    """

    graded: Dict[Tuple[int, int], int] = field(default_factory=dict)
    multigraded: Dict[Tuple[int, SquarefreeMonomial], int] = field(default_factory=dict)
    ring: Optional[Ring] = field(default=None, compare=False, repr=False)

    @classmethod
    def from_multigraded(cls, multigraded: dict, ring: Optional[Ring] = None) -> BettiTable:
        multigraded = {key: value for key, value in multigraded.items() if value}
        graded = defaultdict(int)
        for (i, a), value in multigraded.items():
            graded[(i, a.degree)] += value
        return cls(dict(sorted(graded.items())), multigraded, ring)

    @property
    def ranks(self) -> List[int]:
        if not self.graded:
            return []
        ranks = [0] * (max(i for i, _ in self.graded) + 1)
        for (i, _), value in self.graded.items():
            ranks[i] += value
        return ranks

    @property
    def regularity(self) -> int:
        if not self.graded:
            raise ZeroIdeal()
        return max(j - i for i, j in self.graded)

    def shifts(self, i: int) -> Dict[int, int]:
        """Internal degrees and multiplicities of the ``i``-th module."""
        return {j: value for (k, j), value in self.graded.items() if k == i}

    def to_frame(self) -> pd.DataFrame:
        """Macaulay layout: columns are the homological degrees ``i``, rows the values ``j - i``."""
        if not self.graded:
            return pd.DataFrame(dtype=int)
        columns = range(max(i for i, _ in self.graded) + 1)
        rows = range(min(j - i for i, j in self.graded), self.regularity + 1)
        frame = pd.DataFrame(0, index=pd.Index(rows, name="j-i"), columns=pd.Index(columns, name="i"))
        for (i, j), value in self.graded.items():
            frame.loc[j - i, i] = value
        return frame

    def to_text(self) -> str:
        frame = self.to_frame()
        if frame.empty:
            return "zero ideal"
        width = max(len(str(value)) for value in frame.to_numpy().flat) + 1
        width = max(width, len(str(frame.columns[-1])) + 1)
        lines = ["      " + "".join(f"{i:>{width}}" for i in frame.columns)]
        lines.append("total:" + "".join(f"{value:>{width}}" for value in frame.sum(axis=0)))
        for row, values in frame.iterrows():
            cells = "".join(f"{value if value else '.':>{width}}" for value in values)
            lines.append(f"{row:>5}:" + cells)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        data = {"graded": [[i, j, value] for (i, j), value in sorted(self.graded.items())]}
        if self.ring is not None:
            data["multigraded"] = [
                [i, self.ring.format(a), value]
                for (i, a), value in sorted(self.multigraded.items(), key=lambda item: (item[0][0], self.ring.sort_key(item[0][1])))
            ]
        return data


def _taylor_betti(gens: List[int], domain: Domain) -> dict:
    m = len(gens)
    lcm = [0] * (1 << m)
    groups = defaultdict(list)
    for mask in range(1, 1 << m):
        low = mask & -mask
        lcm[mask] = lcm[mask ^ low] | gens[low.bit_length() - 1]
        groups[lcm[mask]].append(mask)

    betti = {}
    minus = domain(-1)
    for degree, subsets in groups.items():
        by_size = defaultdict(list)
        for mask in subsets:
            by_size[mask.bit_count()].append(mask)
        position = {mask: pos for size in by_size.values() for pos, mask in enumerate(size)}
        ranks = defaultdict(int)
        for size, masks in by_size.items():
            if size < 2 or size - 1 not in by_size:
                continue
            matrix = defaultdict(dict)
            for col, mask in enumerate(masks):
                for j, k in enumerate(iter_bits(mask)):
                    face = mask & ~(1 << k)
                    if lcm[face] == degree:
                        matrix[position[face]][col] = minus if j % 2 else domain.one
            ranks[size] = rank(dict(matrix), (len(by_size[size - 1]), len(masks)), domain)
        for size, masks in by_size.items():
            value = len(masks) - ranks[size] - ranks[size + 1]
            if value:
                betti[(size - 1, SquarefreeMonomial(degree))] = value
    return betti


def _koszul_betti(gens: List[int], domain: Domain) -> dict:
    betti = {}
    minus = domain(-1)
    for degree in lcm_closure(gens):
        dividing = [g for g in gens if g & ~degree == 0]
        faces = defaultdict(list)
        sub = degree
        while True:
            rest = degree & ~sub
            if any(g & ~rest == 0 for g in dividing):
                faces[sub.bit_count()].append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & degree
        position = {face: pos for size in faces.values() for pos, face in enumerate(size)}
        ranks = defaultdict(int)
        for size, members in faces.items():
            if size < 1:
                continue
            matrix = defaultdict(dict)
            for col, face in enumerate(members):
                for j, v in enumerate(iter_bits(face)):
                    matrix[position[face & ~(1 << v)]][col] = minus if j % 2 else domain.one
            ranks[size] = rank(dict(matrix), (len(faces.get(size - 1, [])), len(members)), domain)
        for size, members in faces.items():
            value = len(members) - ranks[size] - ranks[size + 1]
            if value:
                betti[(size, SquarefreeMonomial(degree))] = value
    return betti


def betti_oracle(
    ideal: MonomialIdeal,
    domain: Optional[Domain] = None,
    max_generators: Optional[int] = None,
    method: str = "auto",
) -> BettiTable:
    """Multigraded Betti numbers of ``ideal`` over ``domain``.

    Parameters
    ----------
    method
        ``"taylor"``, ``"koszul"`` or ``"auto"``, which takes the Taylor strands up to ``max_generators`` minimal generators and the Koszul complexes above.

    Raises
    ------
    TooLarge
        If the Taylor method is requested above ``max_generators`` generators, or the Koszul method above ``[resolution] max_koszul_variables`` variables.
    """
    config = get_config("resolution")
    if domain is None:
        domain = get_field()
    if max_generators is None:
        max_generators = config["max_oracle_generators"]
    gens = [g.mask for g in ideal.minimal]
    if not gens:
        return BettiTable(ring=ideal.ring)

    if method == "auto":
        method = "taylor" if len(gens) <= max_generators else "koszul"
    if method == "taylor":
        if len(gens) > max_generators:
            raise TooLarge("generating set", len(gens), max_generators)
        betti = _taylor_betti(gens, domain)
    elif method == "koszul":
        support = 0
        for g in gens:
            support |= g
        if support.bit_count() > config["max_koszul_variables"]:
            raise TooLarge("variable support", support.bit_count(), config["max_koszul_variables"])
        betti = _koszul_betti(gens, domain)
    else:
        raise ValueError(f"Unknown Betti method <{method}>.")
    return BettiTable.from_multigraded(betti, ideal.ring)


def betti_table_from_complex(complex: FreeComplex) -> BettiTable:
    """Betti numbers read off the bases of a minimal complex."""
    counts = defaultdict(int)
    for i, module in enumerate(complex.modules):
        for b in module:
            counts[(i, b.multidegree)] += 1
    return BettiTable.from_multigraded(counts, complex.ring)


def regularity(ideal: MonomialIdeal, domain: Optional[Domain] = None) -> int:
    """``max(j - i)`` over the nonzero Betti numbers ``beta_{i,j}``."""
    if ideal.is_zero:
        raise ZeroIdeal()
    return betti_oracle(ideal, domain).regularity


@dataclass
class RegularityBounds:
    """Combinatorial regularity values of ``H_L``.

    ``upper`` bounds the regularity in general, ``exact`` equals it when ``L`` is meet-irredundant; the ``*_at`` fields name a maximising element and subset.
    """

    upper: int
    exact: int
    upper_at: Tuple[str, List[str]]
    exact_at: Tuple[str, List[str]]

    def to_dict(self) -> dict:
        return {
            "upper": self.upper,
            "exact": self.exact,
            "upper_at": {"element": self.upper_at[0], "subset": self.upper_at[1]},
            "exact_at": {"element": self.exact_at[0], "subset": self.exact_at[1]},
        }


def regularity_bounds(L: MeetSemilattice) -> RegularityBounds:
    """``|P| + max(deg p - deg(meet S) - |S|)``, over all subsets ``S`` of ``N(p)`` for the bound and over ``S = N(p)`` for the exact value.

    The empty subset contributes 0.
    """
    size = len(L.irreducibles)

    def excess(p: int, subset) -> int:
        if not subset:
            return 0
        return L.deg[p] - L.deg[L.meet_of(mask_of(subset))] - len(subset)

    upper, upper_at = 0, (L.label(L.bottom), [])
    exact, exact_at = 0, (L.label(L.bottom), [])
    for p in range(L.n):
        neighbors = L.lower(p)
        for k in range(1, len(neighbors) + 1):
            for subset in combinations(neighbors, k):
                value = excess(p, subset)
                if value > upper:
                    upper, upper_at = value, (L.label(p), L.labels(subset))
        value = excess(p, neighbors)
        if value > exact:
            exact, exact_at = value, (L.label(p), L.labels(neighbors))
    return RegularityBounds(size + upper, size + exact, upper_at, exact_at)


def has_linear_resolution(
    ideal: MonomialIdeal, domain: Optional[Domain] = None, use_quotients: bool = False
) -> bool:
    """Whether all minimal generators have the same degree ``d`` and ``beta_{i,j} = 0`` for ``j != i + d``.

    Parameters
    ----------
    use_quotients
        Accept an order with linear quotients, found by `linear_quotients_search`, as proof before falling back to the oracle.

    Raises
    ------
    ZeroIdeal, MixedDegrees
    """
    if ideal.is_zero:
        raise ZeroIdeal()
    degrees = ideal.degrees
    if len(degrees) > 1:
        raise MixedDegrees(degrees)
    d = degrees[0]
    if use_quotients:
        try:
            if linear_quotients_search(ideal) is not None:
                return True
        except (Timeout, TooLarge):
            pass
    table = betti_oracle(ideal, domain)
    return all(j == i + d for i, j in table.graded)

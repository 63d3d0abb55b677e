"""
Multigraded free complexes of ideals with exact scalars.

A `FreeComplex` stores the modules ``F_0, ..., F_l`` as lists of `BasisElement`, and every differential ``d_i: F_i -> F_{i-1}`` as a list of sparse columns ``{row: Entry}``. The augmentation sends the ``k``-th basis element of ``F_0`` to the ``k``-th monomial of ``augmentation``.
"""
from __future__ import annotations
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Dict, Iterator, List, Optional, Tuple
from sympy.polys.domains.domain import Domain
from .linalg import rank
from ..configuration import field_name, get_config, get_field
from ..exceptions import NotAComplex, NotExact, TooLarge, WrongH0
from ..ideals.monomial import MonomialIdeal, Ring, SquarefreeMonomial, lcm_lattice_degrees
from ..posets.poset import bit_key, iter_bits


@dataclass(frozen=True)
class BasisElement:
    """Free generator of a module of a complex.

    Parameters
    ----------
    name
        Display name, ``b(p;{s,t})`` for mapping cone bases.
    multidegree
        The multidegree as a squarefree monomial.
    element
        Index of ``p`` in the semilattice, None for bases without one.
    subset
        Bitmask of ``S`` over element indices, or of generator positions for Taylor bases.
    """

    name: str
    multidegree: SquarefreeMonomial
    element: Optional[int] = None
    subset: int = 0


@dataclass(frozen=True)
class Entry:
    """Matrix entry ``scalar * monomial``."""

    scalar: Any
    monomial: SquarefreeMonomial


Column = Dict[int, Entry]


def scalar_text(domain: Domain, value) -> str:
    return str(domain.to_sympy(value))


class FreeComplex:
    """Free complex ``0 -> F_l -> ... -> F_0`` resolving the ideal generated by its augmentation.

    Parameters
    ----------
    ring
        Ring of the multidegrees and entry monomials.
    domain
        Field of the scalars.
    modules
        Basis of every ``F_i``.
    differentials
        ``differentials[i]`` holds the columns of ``d_i`` for ``i >= 1``; ``differentials[0]`` is empty.
    augmentation
        Image of the basis of ``F_0`` in the ideal.
    """

    def __init__(
        self,
        ring: Ring,
        domain: Domain,
        modules: List[List[BasisElement]],
        differentials: List[List[Column]],
        augmentation: List[SquarefreeMonomial],
    ):
        self.ring = ring
        self.domain = domain
        self.modules = modules
        self.differentials = differentials
        self.augmentation = augmentation

    def __repr__(self):
        return f"<FreeComplex of ranks {self.ranks}>"

    @property
    def ranks(self) -> List[int]:
        return [len(module) for module in self.modules]

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def differential(self, i: int) -> List[Column]:
        if i < 1 or i > self.length:
            return []
        return self.differentials[i]

    def entries(self, i: int) -> Iterator[Tuple[int, int, Entry]]:
        """Yields ``(row, col, entry)`` of ``d_i`` column by column."""
        for col, column in enumerate(self.differential(i)):
            for row in sorted(column):
                yield row, col, column[row]

    def to_dict(self) -> dict:
        fmt = self.ring.format
        return {
            "field": field_name(self.domain),
            "variables": list(self.ring.variables),
            "modules": [
                [{"name": b.name, "multidegree": fmt(b.multidegree)} for b in module] for module in self.modules
            ],
            "differentials": [
                {
                    "i": i,
                    "entries": [
                        [row, col, scalar_text(self.domain, entry.scalar), fmt(entry.monomial)]
                        for row, col, entry in self.entries(i)
                    ],
                }
                for i in range(1, self.length + 1)
            ],
            "augmentation": [fmt(m) for m in self.augmentation],
        }


@dataclass
class VerificationReport:
    """Outcome of `verify_complex` or `verify_resolution`; failures raise instead."""

    entries: int
    strands: int
    field: str
    passed: bool = True

    def to_dict(self) -> dict:
        return {"entries": self.entries, "strands": self.strands, "field": self.field, "passed": self.passed}


def taylor_complex(
    ideal: MonomialIdeal, domain: Optional[Domain] = None, max_generators: Optional[int] = None
) -> FreeComplex:
    """The Taylor complex of the generators of ``ideal`` as given.

    The basis of ``F_i`` are the subsets of ``i + 1`` generators with the lcm as multidegree, and

    .. math:: d(e_\\sigma) = \\sum_j (-1)^j \\frac{m_\\sigma}{m_{\\sigma - s_j}} e_{\\sigma - s_j}.
    """
    if domain is None:
        domain = get_field()
    if max_generators is None:
        max_generators = get_config("monomial")["max_generators"]
    gens = list(ideal.gens)
    m = len(gens)
    if m > max_generators:
        raise TooLarge("generating set", m, max_generators)
    if m == 0:
        return FreeComplex(ideal.ring, domain, [[]], [[]], [])

    lcm = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        lcm[mask] = lcm[mask ^ low] | gens[low.bit_length() - 1].mask

    subsets = sorted(range(1, 1 << m), key=bit_key)
    modules = [[] for _ in range(m)]
    position = {}
    for mask in subsets:
        i = mask.bit_count() - 1
        position[mask] = len(modules[i])
        name = "t{" + ",".join(str(k) for k in iter_bits(mask)) + "}"
        modules[i].append(BasisElement(name, SquarefreeMonomial(lcm[mask]), subset=mask))

    differentials = [[] for _ in range(m)]
    for mask in subsets:
        i = mask.bit_count() - 1
        if i == 0:
            continue
        column = {}
        for j, k in enumerate(iter_bits(mask)):
            face = mask & ~(1 << k)
            sign = domain(-1) if j % 2 else domain.one
            column[position[face]] = Entry(sign, SquarefreeMonomial(lcm[mask] & ~lcm[face]))
        differentials[i].append(column)

    return FreeComplex(ideal.ring, domain, modules, differentials, [SquarefreeMonomial(g.mask) for g in gens])


def verify_complex(complex: FreeComplex) -> VerificationReport:
    """Checks multihomogeneity of every entry and that consecutive differentials compose to zero.

    Entries of multihomogeneous maps compose to monomials ``deg(source) / deg(target)``, so the composite vanishes iff the scalar sums vanish for every pair of basis elements.

    Raises
    ------
    NotAComplex
        With the differential index and the offending position.
    """
    domain = complex.domain
    count = 0
    for i in range(1, complex.length + 1):
        for col, column in enumerate(complex.differential(i)):
            source = complex.modules[i][col].multidegree
            for row, entry in column.items():
                target = complex.modules[i - 1][row].multidegree
                if not target.divides(source) or entry.monomial != source / target:
                    raise NotAComplex(i, row, col, "the entry is not multihomogeneous")
                count += 1

    for row, image in enumerate(complex.augmentation):
        if image != complex.modules[0][row].multidegree:
            raise NotAComplex(0, row, 0, "the augmentation is not multihomogeneous")

    for col, column in enumerate(complex.differential(1)):
        total = sum((entry.scalar for entry in column.values()), domain.zero)
        if not domain.is_zero(total):
            raise NotAComplex(1, 0, col, "the augmentation does not vanish on the image")

    for i in range(2, complex.length + 1):
        lower = complex.differential(i - 1)
        for col, column in enumerate(complex.differential(i)):
            sums = defaultdict(lambda: domain.zero)
            for middle, entry in column.items():
                for row, other in lower[middle].items():
                    sums[row] += other.scalar * entry.scalar
            for row, value in sums.items():
                if not domain.is_zero(value):
                    raise NotAComplex(i, row, col)

    return VerificationReport(entries=count, strands=0, field=field_name(domain))


def strand_ranks(complex: FreeComplex, degree: SquarefreeMonomial) -> Tuple[List[int], List[int]]:
    """Dimensions and differential ranks of the strand of ``complex`` at a squarefree multidegree.

    The strand has a basis of the elements whose multidegree divides ``degree``; entries keep their scalars. Returns the dimensions of the strand spaces and the ranks of ``d_1, ..., d_l``, indexed from 1 with ``ranks[0] = 0``.
    """
    spaces = [[k for k, b in enumerate(module) if b.multidegree.divides(degree)] for module in complex.modules]
    ranks = [0]
    for i in range(1, complex.length + 1):
        rows = {k: pos for pos, k in enumerate(spaces[i - 1])}
        matrix = defaultdict(dict)
        for pos, col in enumerate(spaces[i]):
            for row, entry in complex.differentials[i][col].items():
                matrix[rows[row]][pos] = entry.scalar
        ranks.append(rank(dict(matrix), (len(spaces[i - 1]), len(spaces[i])), complex.domain))
    return [len(space) for space in spaces], ranks


def verify_resolution(
    complex: FreeComplex, ideal: MonomialIdeal, max_generators: Optional[int] = None
) -> VerificationReport:
    """Checks that ``complex`` is a free resolution of ``ideal``.

    Besides `verify_complex`, the augmentation must generate ``ideal`` and every strand at a multidegree of the lcm lattice or of a basis element must be exact in positions ``>= 1``, with ``H_0`` of dimension 1 exactly at the multidegrees in the ideal. Strands at other squarefree multidegrees coincide with one of these.

    Raises
    ------
    NotAComplex, NotExact, WrongH0
    """
    report = verify_complex(complex)
    fmt = complex.ring.format

    target = MonomialIdeal(complex.ring, complex.augmentation)
    if target != ideal:
        for g in ideal.minimal:
            if not target.contains(g):
                raise WrongH0(fmt(g), 0, 1)
        for g in target.minimal:
            if not ideal.contains(g):
                raise WrongH0(fmt(g), 1, 0)

    degrees = set(lcm_lattice_degrees(ideal, max_generators))
    degrees |= {b.multidegree for module in complex.modules for b in module}
    for degree in complex.ring.sorted(degrees):
        dims, ranks = strand_ranks(complex, degree)
        ranks.append(0)
        for i in range(1, complex.length + 1):
            if dims[i] - ranks[i] != ranks[i + 1]:
                raise NotExact(fmt(degree), i)
        found = dims[0] - ranks[1] if complex.length >= 1 else dims[0]
        expected = 1 if ideal.contains(degree) else 0
        if found != expected:
            raise WrongH0(fmt(degree), found, expected)

    report.strands = len(degrees)
    return report


def is_minimal(complex: FreeComplex) -> bool:
    """No differential has an entry that is a nonzero scalar times the unit monomial."""
    return not any(
        entry.monomial.is_unit and not complex.domain.is_zero(entry.scalar)
        for i in range(1, complex.length + 1)
        for _, _, entry in complex.entries(i)
    )


def _find_unit(modules: List[dict], differentials: Dict[int, dict]) -> Optional[Tuple[int, int, int]]:
    for i in sorted(differentials):
        for col in modules[i]:
            column = differentials[i][col]
            for row in sorted(column):
                if column[row].monomial.is_unit:
                    return i, col, row
    return None


def minimize(complex: FreeComplex) -> FreeComplex:
    """Cancels unit entries until the complex is minimal.

    For a unit entry ``lambda`` of ``d_i`` at ``(r, c)`` write ``d_i = [[lambda, beta], [gamma, delta]]`` with respect to the splittings ``F_i = <c> + B`` and ``F_{i-1} = <r> + A``. The complex with ``d_i`` replaced by ``delta - gamma lambda^{-1} beta`` on ``B -> A``, row ``c`` removed from ``d_{i+1}`` and column ``r`` removed from ``d_{i-1}`` (or from the augmentation) is homotopy equivalent. Pivots are taken at the smallest ``i``, then column, then row.
    """
    domain = complex.domain
    modules = [dict(enumerate(module)) for module in complex.modules]
    differentials = {
        i: {col: dict(column) for col, column in enumerate(complex.differentials[i])}
        for i in range(1, complex.length + 1)
    }
    augmentation = dict(enumerate(complex.augmentation))

    while True:
        pivot = _find_unit(modules, differentials)
        if pivot is None:
            break
        i, c, r = pivot
        gamma = differentials[i].pop(c)
        lam = gamma.pop(r).scalar
        for b, column in differentials[i].items():
            beta = column.pop(r, None)
            if beta is None:
                continue
            factor = beta.scalar / lam
            source = modules[i][b].multidegree
            for a, entry in gamma.items():
                value = column[a].scalar if a in column else domain.zero
                value -= entry.scalar * factor
                if domain.is_zero(value):
                    column.pop(a, None)
                else:
                    column[a] = Entry(value, source / modules[i - 1][a].multidegree)
        if i + 1 in differentials:
            for column in differentials[i + 1].values():
                column.pop(c, None)
        if i - 1 >= 1:
            differentials[i - 1].pop(r)
        else:
            augmentation.pop(r)
        del modules[i][c]
        del modules[i - 1][r]

    while len(modules) > 1 and not modules[-1]:
        modules.pop()

    keys = [list(module) for module in modules]
    position = [{key: pos for pos, key in enumerate(module)} for module in keys]
    new_differentials = [[]]
    for i in range(1, len(keys)):
        new_differentials.append(
            [
                {position[i - 1][row]: entry for row, entry in sorted(differentials[i][col].items())}
                for col in keys[i]
            ]
        )
    return FreeComplex(
        complex.ring,
        domain,
        [[modules[i][key] for key in module] for i, module in enumerate(keys)],
        new_differentials,
        [augmentation[key] for key in keys[0]],
    )


def same_differential(first: FreeComplex, second: FreeComplex) -> bool:
    """Whether two complexes have the same bases, in the same order, and identical differentials."""
    if [[b.name for b in m] for m in first.modules] != [[b.name for b in m] for m in second.modules]:
        return False
    return all(list(first.entries(i)) == list(second.entries(i)) for i in range(1, first.length + 1))

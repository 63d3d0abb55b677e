"""
The resolution of ``H_L`` by iterated mapping cones.

Elements ``p`` of ``L`` are added in the degree order. The colon of the ideal of the earlier elements by ``u_p`` is generated by the monomials ``y`` over ``ell(p) - ell(t)`` for ``t`` in ``N(p)``, so the Taylor complex on those monomials, shifted by ``u_p``, contributes the basis elements ``b(p;S)`` for the subsets ``S`` of ``N(p)``. The differential of ``b(p;S)`` is the Taylor part plus a lift of the comparison map into the complex built so far.

The lower neighbors of ``p`` are ordered by the positions of ``ell(p) - ell(t)`` in ``P``; for meet-distributive ``L`` this is the order of the elements ``p - t`` and the signs agree with the closed form of `meet_distributive_differential`.
"""
from __future__ import annotations
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple
from sympy.polys.domains.domain import Domain
from .complex import BasisElement, Column, Entry, FreeComplex
from .linalg import solve
from ..configuration import get_config, get_field
from ..exceptions import LiftFailed, NotApplicable, NotMeetDistributive, TooLarge
from ..ideals.lattice_ideals import difference_variable, lattice_ring, u_mask, x_monomial, y_monomial
from ..ideals.monomial import SquarefreeMonomial
from ..posets.poset import iter_bits, mask_of
from ..posets.semilattice import MeetSemilattice, is_meet_distributive, is_meet_irredundant


def neighbor_order(L: MeetSemilattice, p: int) -> List[int]:
    """``N(p)`` sorted by the positions of ``ell(p) - ell(t)``, then by index."""
    return sorted(L.lower(p), key=lambda t: (tuple(iter_bits(L.ell[p] & ~L.ell[t])), t))


def basis_name(L: MeetSemilattice, p: int, subset: Sequence[int]) -> str:
    return f"b({L.label(p)};{{{','.join(L.label(t) for t in subset)}}})"


def basis_size(L: MeetSemilattice) -> int:
    """Number of basis elements ``b(p;S)``, the sum of ``2^|N(p)|``."""
    return sum(1 << len(L.lower(p)) for p in range(L.n))


class _ComplexBuilder:
    """Collects the basis and columns of a complex on the elements ``b(p;S)``, in the degree order of ``p``."""

    def __init__(self, L: MeetSemilattice, domain: Optional[Domain], max_basis: Optional[int]):
        if domain is None:
            domain = get_field()
        if max_basis is None:
            max_basis = get_config("resolution")["max_basis"]
        size = basis_size(L)
        if size > max_basis:
            raise TooLarge("resolution basis", size, max_basis)
        self.L = L
        self.domain = domain
        self.ring = lattice_ring(L)
        self.modules: List[List[BasisElement]] = [[]]
        self.columns: List[List[Column]] = [[]]
        self.position: Dict[Tuple[int, int], int] = {}

    def sign(self, j: int):
        return self.domain(-1) if j % 2 else self.domain.one

    def multidegree(self, p: int, subset: Sequence[int]) -> SquarefreeMonomial:
        mask = u_mask(self.L, p)
        for t in subset:
            mask |= u_mask(self.L, t)
        return SquarefreeMonomial(mask)

    def find(self, p: int, subset: Sequence[int]) -> int:
        return self.position[(p, mask_of(subset))]

    def append(self, p: int, subset: Sequence[int], column: Column) -> BasisElement:
        i = len(subset)
        while len(self.modules) <= i:
            self.modules.append([])
            self.columns.append([])
        element = BasisElement(basis_name(self.L, p, subset), self.multidegree(p, subset), p, mask_of(subset))
        self.position[(p, element.subset)] = len(self.modules[i])
        self.modules[i].append(element)
        if i:
            self.columns[i].append(column)
        return element

    def taylor_part(self, p: int, subset: Sequence[int], degree: SquarefreeMonomial) -> Column:
        """``sum_j (-1)^j (deg b(p;S) / deg b(p;S - s_j)) b(p;S - s_j)``."""
        i = len(subset)
        column = {}
        for j in range(i):
            rest = subset[:j] + subset[j + 1 :]
            row = self.find(p, rest)
            column[row] = Entry(self.sign(j), degree / self.modules[i - 1][row].multidegree)
        return column

    def complex(self) -> FreeComplex:
        augmentation = [b.multidegree for b in self.modules[0]]
        return FreeComplex(self.ring, self.domain, self.modules, self.columns, augmentation)


def _lift(builder: _ComplexBuilder, p: int, subset: Sequence[int], degree: SquarefreeMonomial) -> Column:
    """Solves ``d(beta) = -d(taylor part)`` for ``beta`` in the strand of the earlier elements."""
    domain = builder.domain
    i = len(subset)
    name = basis_name(builder.L, p, subset)
    lower, upper = builder.modules[i - 2], builder.modules[i - 1]

    image = defaultdict(lambda: domain.zero)
    for j in range(i):
        column = builder.columns[i - 1][builder.find(p, subset[:j] + subset[j + 1 :])]
        for row, entry in column.items():
            image[row] += builder.sign(j) * entry.scalar

    target = {}
    for row, value in image.items():
        if domain.is_zero(value):
            continue
        if lower[row].element == p:
            raise LiftFailed(name)
        target[row] = -value

    candidates = [k for k, b in enumerate(upper) if b.element != p and b.multidegree.divides(degree)]
    rows = sorted(set(target) | {row for k in candidates for row in builder.columns[i - 1][k]})
    row_position = {row: pos for pos, row in enumerate(rows)}
    matrix = defaultdict(dict)
    for pos, k in enumerate(candidates):
        for row, entry in builder.columns[i - 1][k].items():
            matrix[row_position[row]][pos] = entry.scalar
    rhs = {row_position[row]: value for row, value in target.items()}

    solution = solve(dict(matrix), (len(rows), len(candidates)), rhs, domain)
    if solution is None:
        raise LiftFailed(name)
    return {
        candidates[pos]: Entry(value, degree / upper[candidates[pos]].multidegree)
        for pos, value in enumerate(solution)
        if not domain.is_zero(value)
    }


def mapping_cone_resolution(
    L: MeetSemilattice, domain: Optional[Domain] = None, max_basis: Optional[int] = None
) -> FreeComplex:
    """The multigraded free resolution of ``H_L`` with basis ``b(p;S)``, ``S`` a subset of ``N(p)``, in position ``|S|``.

    The comparison map is ``-(lcm(u_p, u_t) / u_t) b(t;{})`` on ``b(p;{t})``; in higher positions it is the solution of the lifting problem in the strand of ``b(p;S)``, computed by reduced row echelon form over the earlier basis elements in construction order with free variables set to zero.

    Raises
    ------
    TooLarge
        If the number of basis elements exceeds ``max_basis``.
    LiftFailed
        If a lift does not exist, which means the partial complex is not exact.

    Examples
    --------
        >>> mapping_cone_resolution(boolean_lattice(2)).ranks
        [4, 4, 1]
    """
    builder = _ComplexBuilder(L, domain, max_basis)
    for p in L.order:
        neighbors = neighbor_order(L, p)
        for size in range(len(neighbors) + 1):
            for subset in combinations(neighbors, size):
                subset = list(subset)
                if size == 0:
                    builder.append(p, subset, {})
                    continue
                degree = builder.multidegree(p, subset)
                column = builder.taylor_part(p, subset, degree)
                if size == 1:
                    t = subset[0]
                    row = builder.find(t, [])
                    column[row] = Entry(builder.domain(-1), degree / builder.modules[0][row].multidegree)
                else:
                    column.update(_lift(builder, p, subset, degree))
                builder.append(p, subset, column)
    return builder.complex()


def meet_distributive_differential(
    L: MeetSemilattice, domain: Optional[Domain] = None, max_basis: Optional[int] = None
) -> FreeComplex:
    """The resolution of ``H_L`` for meet-distributive ``L`` with the differential in closed form,

    .. math:: d\\, b(p;S) = \\sum_{q \\in S} (-1)^{\\sigma(q)} \\left(y_{p-q}\\, b(p; S - q) - x_{p-q}\\, b(q; q \\wedge (S - q))\\right)

    where ``p - q`` is the unique element of ``ell(p) - ell(q)`` and ``sigma(q)`` counts the ``s`` in ``S`` with ``p - s`` before ``p - q`` in ``P``.

    Raises
    ------
    NotMeetDistributive
    """
    if not is_meet_distributive(L):
        raise NotMeetDistributive()
    builder = _ComplexBuilder(L, domain, max_basis)
    for p in L.order:
        neighbors = neighbor_order(L, p)
        for size in range(len(neighbors) + 1):
            for subset in combinations(neighbors, size):
                subset = list(subset)
                column = {}
                for j, q in enumerate(subset):
                    rest = subset[:j] + subset[j + 1 :]
                    r = difference_variable(L, p, q)
                    meets = [t for t in neighbor_order(L, q) if t in {L.meet(q, s) for s in rest}]
                    assert len(meets) == len(rest)
                    column[builder.find(p, rest)] = Entry(builder.sign(j), y_monomial(L, 1 << r))
                    column[builder.find(q, meets)] = Entry(-builder.sign(j), x_monomial(L, 1 << r))
                builder.append(p, subset, column)
    return builder.complex()


@dataclass
class ShapeReport:
    """Targets of the differential outside the Taylor part, checked against the expected shape."""

    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"checked": self.checked, "violations": self.violations, "ok": self.ok}


def differential_shape_report(L: MeetSemilattice, complex: FreeComplex) -> ShapeReport:
    """Checks the shape of the differential of a mapping cone resolution of a meet-irredundant ``L``.

    For every ``b(p;S)`` and every target ``b(t;T)`` with ``t != p``, with ``r`` the meet of ``S``: ``t`` lies in ``[r, p]``, ``T`` consists of lower neighbors of ``t`` inside ``[r, p]``, and the entry monomial is the quotient of the multidegrees.
    """
    if not is_meet_irredundant(L):
        raise NotApplicable("The differential shape is only described for meet-irredundant semilattices.")
    report = ShapeReport()
    up, down = L.poset.up_masks, L.poset.down_masks
    for i in range(1, complex.length + 1):
        for col, column in enumerate(complex.differential(i)):
            source = complex.modules[i][col]
            p = source.element
            r = L.meet_of(source.subset)
            inside = up[r] & down[p]
            for row, entry in column.items():
                target = complex.modules[i - 1][row]
                t = target.element
                if t == p:
                    continue
                report.checked += 1
                problems = []
                if not inside >> t & 1:
                    problems.append(f"{L.label(t)} outside [{L.label(r)}, {L.label(p)}]")
                lower = set(L.lower(t))
                for s in iter_bits(target.subset):
                    if s not in lower or not inside >> s & 1:
                        problems.append(f"{L.label(s)} is not a lower neighbor of {L.label(t)} inside the interval")
                if entry.monomial != source.multidegree / target.multidegree:
                    problems.append("coefficient monomial is not the multidegree quotient")
                if problems:
                    report.violations.append(f"{source.name} -> {target.name}: " + "; ".join(problems))
    return report

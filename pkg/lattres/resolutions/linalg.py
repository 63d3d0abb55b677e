"""
Exact linear algebra on sparse matrices through `sympy.polys.matrices.DomainMatrix`.

Matrices are given as dicts ``{row: {col: scalar}}`` of nonzero domain elements.
"""
from typing import Dict, List, Optional
from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

Sparse = Dict[int, Dict[int, object]]


def _clean(rows: Sparse, domain: Domain) -> Sparse:
    return {
        i: {j: value for j, value in row.items() if not domain.is_zero(value)}
        for i, row in rows.items()
        if any(not domain.is_zero(value) for value in row.values())
    }


def rank(rows: Sparse, shape: tuple, domain: Domain) -> int:
    if 0 in shape:
        return 0
    rows = _clean(rows, domain)
    if not rows:
        return 0
    return DomainMatrix(rows, shape, domain).rank()


def solve(rows: Sparse, shape: tuple, rhs: Dict[int, object], domain: Domain) -> Optional[List]:
    """A solution ``v`` of ``M v = rhs``, or None if the system is inconsistent.

    The augmented matrix is brought to reduced row echelon form, pivot variables are read off and free variables are set to zero, which makes the solution unique for a given column order.
    """
    m, n = shape
    if m == 0:
        return [domain.zero] * n
    augmented = {i: dict(row) for i, row in rows.items()}
    for i, value in rhs.items():
        augmented.setdefault(i, {})[n] = value
    augmented = _clean(augmented, domain)
    if not augmented:
        return [domain.zero] * n
    reduced, pivots = DomainMatrix(augmented, (m, n + 1), domain).rref()
    if n in pivots:
        return None
    entries = reduced.to_dok()
    solution = [domain.zero] * n
    for r, c in enumerate(pivots):
        solution[c] = entries.get((r, n), domain.zero)
    return solution

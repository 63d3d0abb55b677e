"""
Cohen-Macaulay and shellability tests through the Alexander dual, and grafting.

``K[Delta]`` is Cohen-Macaulay exactly when the dual ideal ``I_Delta*`` has a linear resolution, and ``Delta`` is shellable exactly when ``I_Delta*`` has linear quotients. No other Cohen-Macaulay criterion is implemented, and the answer depends on the field through the Betti numbers of the dual.
"""
from __future__ import annotations
from dataclasses import dataclass
from random import Random
from typing import List, Optional
from sympy.polys.domains.domain import Domain
from .complexes import SimplicialComplex, facet_ideal, stanley_reisner_complex, stanley_reisner_ideal
from .primes import dual_ideal
from ..configuration import field_name, get_field
from ..exceptions import MixedDegrees, NoFacets
from ..ideals.monomial import MonomialIdeal, SquarefreeMonomial
from ..ideals.quotients import linear_quotients_search
from ..resolutions.betti import has_linear_resolution


def eagon_reiner_cm(ideal: MonomialIdeal, domain: Optional[Domain] = None, use_quotients: bool = False) -> bool:
    """Whether ``S / I`` is Cohen-Macaulay, read off the resolution of ``I*``.

    The zero ideal, the ideal of a full simplex, is Cohen-Macaulay. A dual with generators of several degrees has no linear resolution.

    Parameters
    ----------
    ideal
        The Stanley-Reisner ideal of the complex under test.
    use_quotients
        Passed to `has_linear_resolution`.

    Raises
    ------
    UnitIdeal
    """
    if ideal.is_zero:
        return True
    try:
        return has_linear_resolution(dual_ideal(ideal), domain, use_quotients=use_quotients)
    except MixedDegrees:
        return False


def is_shellable(complex: SimplicialComplex) -> bool:
    """Whether the dual ideal, generated by ``x_{V - F}`` over the facets ``F``, has linear quotients.

    Raises
    ------
    NoFacets
        For the void complex.
    TooLarge, Timeout
        From `linear_quotients_search`.
    """
    if complex.is_void:
        raise NoFacets()
    dual = MonomialIdeal(
        facet_ideal(complex).ring, [SquarefreeMonomial(complex.full & ~f) for f in complex.facets]
    )
    if dual.is_unit:
        return True
    return linear_quotients_search(dual) is not None


def is_cohen_macaulay(complex: SimplicialComplex, domain: Optional[Domain] = None) -> bool:
    """`eagon_reiner_cm` of the Stanley-Reisner ideal of ``complex``."""
    if complex.is_void:
        raise NoFacets()
    return eagon_reiner_cm(stanley_reisner_ideal(complex), domain)


def _whisker_name(complex: SimplicialComplex, v: str) -> str:
    name = f"w_{v}"
    while name in complex.index:
        name += "'"
    return name


def graft(complex: SimplicialComplex) -> SimplicialComplex:
    """Attaches a whisker ``{v, w_v}`` at every vertex ``v``.

    The new vertices follow the old ones in the same order; facets of ``complex`` that are single vertices are absorbed by their whiskers.

    Examples
    --------
        >>> graft(SimplicialComplex.from_labels(["a", "b"], [["a", "b"]]))
        <{a,b}, {a,w_a}, {b,w_b}>
    """
    n = complex.n
    names = [_whisker_name(complex, v) for v in complex.vertices]
    whiskers = [1 << i | 1 << (n + i) for i in range(n)]
    return SimplicialComplex(list(complex.vertices) + names, list(complex.facets) + whiskers)


@dataclass
class GraftReport:
    """Checks on the grafted complex ``Gamma`` and on ``Sigma``, the complex with ``I_Sigma = I(Gamma)``."""

    grafted: SimplicialComplex
    sigma_facet_sizes: List[int]
    vertices: int
    cohen_macaulay: bool
    field: str = "Q"

    @property
    def pure(self) -> bool:
        return self.sigma_facet_sizes == [self.vertices] * len(self.sigma_facet_sizes)

    @property
    def ok(self) -> bool:
        return self.pure and self.cohen_macaulay

    def to_dict(self) -> dict:
        return {
            "grafted": self.grafted.to_dict(),
            "sigma_pure": self.pure,
            "sigma_facet_sizes": sorted(set(self.sigma_facet_sizes)),
            "cohen_macaulay": self.cohen_macaulay,
            "field": self.field,
        }


def graft_check(complex: SimplicialComplex, domain: Optional[Domain] = None) -> GraftReport:
    """Grafts ``complex`` and tests that the facet ideal of the result is Cohen-Macaulay.

    Every facet of ``Sigma`` is expected to have as many vertices as ``complex``.
    """
    if domain is None:
        domain = get_field()
    grafted = graft(complex)
    ideal = facet_ideal(grafted)
    sigma = stanley_reisner_complex(ideal)
    return GraftReport(
        grafted=grafted,
        sigma_facet_sizes=[f.bit_count() for f in sigma.facets],
        vertices=complex.n,
        cohen_macaulay=eagon_reiner_cm(ideal, domain),
        field=field_name(domain),
    )


def random_complex(n: int, rng: Random, max_facets: Optional[int] = None) -> SimplicialComplex:
    """A complex on the vertices ``v1, ..., vn`` with up to ``max_facets`` random nonempty faces as facets."""
    if max_facets is None:
        max_facets = n
    vertices = [f"v{i + 1}" for i in range(n)]
    count = rng.randint(1, max(1, max_facets))
    facets = [rng.randrange(1, 1 << n) for _ in range(count)]
    return SimplicialComplex(vertices, facets)

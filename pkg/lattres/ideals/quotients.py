"""
Linear quotients of squarefree monomial ideals.

An order ``u_1, ..., u_m`` of the minimal generators has linear quotients if every colon ideal ``(u_1, ..., u_{i-1}) : u_i`` is generated by variables. For squarefree generators the colon is generated by ``u_k / gcd(u_k, u_i)``, which allows the bitmask test `_colon_is_linear`.
"""
from __future__ import annotations
from typing import List, Optional, Sequence
from .monomial import MonomialIdeal, SquarefreeMonomial, colon_by_monomial
from ..configuration import get_config
from ..exceptions import NotMinimal, Timeout, TooLarge


def _colon_is_linear(previous: Sequence[int], g: int) -> bool:
    quotients = [h & ~g for h in previous]
    variables = 0
    for q in quotients:
        if q.bit_count() == 1:
            variables |= q
    return all(q & variables for q in quotients)


def _variable_criterion(previous: Sequence[int], g: int) -> bool:
    """For each earlier ``u_j`` some earlier ``u_k / gcd(u_k, u_i)`` is a variable dividing ``u_j``."""
    for uj in previous:
        if not any((uk & ~g).bit_count() == 1 and (uk & ~g) & ~uj == 0 for uk in previous):
            return False
    return True


def linear_quotients_check(ideal: MonomialIdeal, order: Sequence[SquarefreeMonomial]) -> bool:
    """Whether the generators in ``order`` have linear quotients.

    The colon ideals are computed and tested for being generated by variables, and the squarefree variable criterion is evaluated as well; both must agree.

    Raises
    ------
    NotMinimal
        If ``order`` is not a permutation of the minimal generators.
    """
    order = list(order)
    if len(set(order)) != len(order) or set(order) != set(ideal.minimal):
        extra = [ideal.ring.format(m) for m in order if m not in ideal.minimal]
        raise NotMinimal(extra[0] if extra else None)

    for i, u in enumerate(order):
        colon = colon_by_monomial(MonomialIdeal(ideal.ring, order[:i]), u)
        by_colon = all(g.degree == 1 for g in colon.minimal)
        by_criterion = _variable_criterion([m.mask for m in order[:i]], u.mask)
        assert by_colon == by_criterion
        if not by_colon:
            return False
    return True


def linear_quotients_search(
    ideal: MonomialIdeal,
    max_generators: Optional[int] = None,
    max_steps: Optional[int] = None,
) -> Optional[List[SquarefreeMonomial]]:
    """Searches an order of the minimal generators with linear quotients.

    Depth first over the generators in their stored order; sets of chosen generators from which no completion exists are remembered, so each set is expanded at most once.

    Parameters
    ----------
    max_generators
        Cap on the number of minimal generators, ``[monomial] max_generators`` by default.
    max_steps
        Number of tested extensions before `Timeout` is raised, ``[monomial] search_steps`` by default.

    Returns
    -------
    list or None
        An admissible order, or None if none exists.
    """
    config = get_config("monomial")
    if max_generators is None:
        max_generators = config["max_generators"]
    if max_steps is None:
        max_steps = config["search_steps"]

    gens = [g.mask for g in ideal.minimal]
    m = len(gens)
    if m > max_generators:
        raise TooLarge("generating set", m, max_generators)

    failed = set()
    steps = 0

    def extend(chosen: int, order: List[int]) -> Optional[List[int]]:
        nonlocal steps
        if len(order) == m:
            return order
        if chosen in failed:
            return None
        previous = [gens[k] for k in order]
        for k in range(m):
            if chosen >> k & 1:
                continue
            steps += 1
            if steps > max_steps:
                raise Timeout(max_steps)
            if _colon_is_linear(previous, gens[k]):
                found = extend(chosen | 1 << k, order + [k])
                if found is not None:
                    return found
        failed.add(chosen)
        return None

    found = extend(0, [])
    if found is None:
        return None
    return [ideal.minimal[k] for k in found]

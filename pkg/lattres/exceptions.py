"""
Exception types raised by the library. All of them derive from `LatticeError`, itself a `ValueError`, so code that only guards against bad values keeps working.
"""
from typing import Any, Optional


class LatticeError(ValueError):
    """Base class of every error raised by lattres."""


class DuplicateLabel(LatticeError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"Element label <{label}> is declared more than once.")


class UnknownLabel(LatticeError):
    def __init__(self, label: Any):
        self.label = label
        super().__init__(f"Element label <{label}> is not declared.")


class CycleDetected(LatticeError):
    def __init__(self, cycle: list):
        self.cycle = cycle
        super().__init__(f"Cover relation contains the cycle {cycle}.")


class TooLarge(LatticeError):
    def __init__(self, what: str, size: int, cap: int):
        self.what, self.size, self.cap = what, size, cap
        super().__init__(f"{what} has size {size}, above the configured cap {cap}.")


class Timeout(LatticeError):
    def __init__(self, steps: int):
        self.steps = steps
        super().__init__(f"Search stopped after its budget of {steps} steps.")


class NotMeetSemilattice(LatticeError):
    def __init__(self, a: str, b: str, candidates: list):
        self.a, self.b, self.candidates = a, b, candidates
        if candidates:
            reason = f"several maximal common lower bounds {candidates}"
        else:
            reason = "no common lower bound"
        super().__init__(f"Elements <{a}> and <{b}> have {reason}.")


class EmptySet(LatticeError):
    def __init__(self, what: str = "set"):
        super().__init__(f"The meet of an empty {what} is undefined.")


class NotApplicable(LatticeError):
    pass


class NotMinimal(LatticeError):
    def __init__(self, monomial: Optional[str] = None):
        self.monomial = monomial
        super().__init__(f"Order is not a permutation of the minimal generators (offending entry {monomial}).")


class LiftFailed(LatticeError):
    def __init__(self, basis: str):
        self.basis = basis
        super().__init__(f"No lift of the comparison map exists for {basis}; the partial complex is not exact.")


class NotMeetDistributive(LatticeError):
    def __init__(self):
        super().__init__("The closed-form differential requires a meet-distributive semilattice.")


class NotAComplex(LatticeError):
    def __init__(self, i: int, row: int, col: int, reason: str = "the composite of two differentials is nonzero"):
        self.i, self.row, self.col = i, row, col
        super().__init__(f"Differential {i}, entry ({row}, {col}): {reason}.")


class NotExact(LatticeError):
    def __init__(self, a: str, i: int):
        self.a, self.i = a, i
        super().__init__(f"Strand at multidegree {a} has nonzero homology in position {i}.")


class WrongH0(LatticeError):
    def __init__(self, a: str, found: int, expected: int):
        self.a, self.found, self.expected = a, found, expected
        super().__init__(f"Strand at multidegree {a} has H_0 of dimension {found}, expected {expected}.")


class MixedDegrees(LatticeError):
    def __init__(self, degrees: list):
        self.degrees = degrees
        super().__init__(f"Minimal generators have the different degrees {degrees}.")


class UnitIdeal(LatticeError):
    def __init__(self):
        super().__init__("The ideal is the whole ring.")


class ZeroIdeal(LatticeError):
    def __init__(self):
        super().__init__("The ideal is zero.")


class NoFacets(LatticeError):
    def __init__(self):
        super().__init__("The complex has no facets.")


class NotLattice(LatticeError):
    def __init__(self):
        super().__init__("The semilattice has no top element.")


class NotDistributive(LatticeError):
    def __init__(self):
        super().__init__("The lattice is not distributive.")


class NotPosetIdeal(LatticeError):
    def __init__(self, missing: list):
        self.missing = missing
        super().__init__(f"Subset is not downward closed, missing {missing}.")


class NotPosetCoideal(LatticeError):
    def __init__(self, missing: list):
        self.missing = missing
        super().__init__(f"Subset is not upward closed, missing {missing}.")


class EmptyIdeal(LatticeError):
    def __init__(self):
        super().__init__("The poset ideal is empty.")


class HypothesisViolated(LatticeError):
    def __init__(self, hypothesis: int, reason: str):
        self.hypothesis, self.reason = hypothesis, reason
        super().__init__(f"Hypothesis ({hypothesis}) fails: {reason}.")


class NoPerfectMatching(LatticeError):
    def __init__(self, size: int, needed: int):
        self.size, self.needed = size, needed
        super().__init__(f"Maximum matching has {size} edges, a perfect matching needs {needed}.")


class NotAPartialOrder(LatticeError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Edge relation is not a partial order: {reason}.")


class InvalidInput(LatticeError):
    def __init__(self, source: str, reason: str):
        self.source, self.reason = source, reason
        super().__init__(f"{source}: {reason}.")

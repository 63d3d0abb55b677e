from lattres.posets.poset import *
from lattres.posets.semilattice import *
from lattres.posets.generate import *
from lattres.exceptions import CycleDetected, DuplicateLabel, NotMeetSemilattice, TooLarge, UnknownLabel
from lattres.io import load_fixture
import numpy as np
import pytest
from .variables import *


def test_build_poset_closure():
    """Covers are closed transitively, the stored covers are the reduction."""
    P = build_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    assert P.le(0, 2)
    assert P.covers == [(0, 1), (1, 2)]
    leq = P.leq.astype(int)
    assert np.array_equal((leq @ leq) > 0, P.leq)


@pytest.mark.parametrize(
    "elements, covers, error",
    [
        (["a", "a"], [], DuplicateLabel),
        (["a", "b"], [("a", "z")], UnknownLabel),
        (["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")], CycleDetected),
    ],
)
def test_build_poset_errors(elements, covers, error):
    with pytest.raises(error):
        build_poset(elements, covers)


def test_ideal_masks_antichain():
    P = build_poset(["a", "b", "c"], [])
    masks = ideal_masks(P)
    assert len(masks) == 8
    assert masks[0] == 0
    assert masks == sorted(masks, key=bit_key)


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_ideal_masks_bruteforce(n):
    """Every down-closed subset is produced exactly once."""
    P = random_poset(n, get_rng())
    expected = [mask for mask in range(1 << n) if is_down_closed(P, mask)]
    masks = ideal_masks(P)
    assert len(masks) == len(set(masks))
    assert sorted(masks) == expected


def test_ideal_masks_cap():
    with pytest.raises(TooLarge):
        ideal_masks(build_poset([str(i) for i in range(5)], []), max_elements=4)


def test_downset_upset():
    P = build_poset(["a", "b", "c", "d"], [("a", "c"), ("b", "d"), ("a", "d")])
    ideal = downset(P, ["d"])
    assert ideal.labels == ["a", "b", "d"]
    assert generators(ideal) == ["d"]
    coideal = upset(P, ["a"])
    assert coideal.labels == ["a", "c", "d"]
    assert cogenerators(coideal) == ["a"]
    assert is_poset_ideal(P, ["a", "b", "d"])
    assert not is_poset_ideal(P, ["d"])
    assert is_poset_coideal(P, ["c", "d"])
    assert interval(P, "a", "d") == ["a", "d"]
    assert dual_poset(dual_poset(P)) == P


def test_l11_structure():
    L = load_fixture("L11")
    assert L.is_lattice
    assert len(L.irreducibles) == 6
    assert meet_set(L, ["e", "g"]) == "d"
    assert lower_neighbors(L, "t") == ["e", "g", "h"]
    assert join(L, "a", "b") == "e"
    assert L.rank[L.top] == 4
    assert L.deg[L.top] == 6


def test_l11_classification():
    classification = classify(load_fixture("L11"))
    assert classification.is_lattice
    assert classification.is_graded
    assert classification.is_meet_irredundant
    assert not classification.is_meet_distributive
    assert not classification.is_distributive
    assert classification.is_upper_semimodular is False
    assert classification.is_lower_semimodular is False


def test_boolean_classification():
    classification = classify(load_fixture("B3"))
    assert classification.is_distributive
    assert classification.is_meet_distributive
    assert classification.is_meet_irredundant
    assert classification.is_upper_semimodular
    assert classification.is_lower_semimodular
    assert classification.deg == classification.rank


def test_diamond_classification():
    L = load_fixture("M3")
    classification = classify(L)
    assert not classification.is_meet_irredundant
    assert not classification.is_meet_distributive
    assert not classification.is_distributive
    assert classification.is_upper_semimodular
    assert classification.is_lower_semimodular
    assert not unique_minimal_joins(L)


def test_not_meet_semilattice():
    with pytest.raises(NotMeetSemilattice):
        semilattice_from_covers(["a", "b", "c"], [("a", "c"), ("b", "c")])


@pytest.mark.parametrize("name", SEMILATTICES)
def test_characterizations_agree(name):
    values = meet_distributive_characterizations(load_fixture(name))
    assert len(set(values.values())) == 1


@pytest.mark.parametrize("name", DISTRIBUTIVE)
def test_birkhoff_completion(name):
    """A distributive lattice is its own completion."""
    L = load_fixture(name)
    completion = birkhoff_completion(L)
    assert completion.is_bijective
    assert completion.lattice.n == L.n
    assert is_distributive(completion.lattice)


def test_birkhoff_completion_proper():
    L = load_fixture("L11")
    completion = birkhoff_completion(L)
    assert not completion.is_bijective
    assert completion.lattice.n == 27
    assert len(set(completion.embedding.values())) == L.n


def test_distributive_lattice():
    P = build_poset(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "d")])
    L = distributive_lattice(P)
    assert L.n == 8
    assert is_distributive(L)
    assert sorted(L.labels(L.irreducibles)) == ["a", "b", "c", "d"]


def test_boolean_and_chain():
    assert boolean_lattice(2).n == 4
    assert unique_minimal_joins(boolean_lattice(3))
    assert is_meet_distributive(chain(3))
    assert len(chain(3).irreducibles) == 2


def test_insert_between():
    L = insert_between(load_fixture("L11"), "z", "a")
    assert L.n == 12
    assert is_meet_irredundant(L)
    with pytest.raises(ValueError):
        insert_between(load_fixture("L11"), "z", "t")


def test_add_top():
    L = semilattice_from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")])
    assert not L.is_lattice
    assert add_top(L).is_lattice


@pytest.mark.parametrize("max_elements", [4, 6])
def test_enumerate_semilattices(max_elements):
    found = enumerate_semilattices(max_elements)
    counts = [len([L for L in found if L.n == k]) for k in range(1, max_elements + 1)]
    assert counts == SEMILATTICE_COUNTS[:max_elements]


@pytest.mark.exhaustive
def test_enumerate_semilattices_exhaustive():
    found = enumerate_semilattices(8)
    counts = [len([L for L in found if L.n == k]) for k in range(1, 9)]
    assert counts == SEMILATTICE_COUNTS


def test_enumerate_posets():
    counts = [len([P for P in enumerate_posets(4) if P.n == k]) for k in range(1, 5)]
    assert counts == [1, 2, 5, 16]


def test_enumerate_cap():
    with pytest.raises(TooLarge):
        enumerate_semilattices(9, cap=8)


def test_random_semilattice():
    L = random_semilattice(9, get_rng())
    assert L.n == 9
    assert random_semilattice(9, get_rng()).poset == L.poset

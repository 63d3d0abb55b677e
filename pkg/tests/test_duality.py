from lattres.duality import *
from lattres.exceptions import (
    EmptyIdeal,
    HypothesisViolated,
    NoFacets,
    NoPerfectMatching,
    NotAPartialOrder,
    NotDistributive,
    NotLattice,
    NotPosetIdeal,
    UnitIdeal,
    ZeroIdeal,
)
from lattres.ideals.lattice_ideals import lattice_ideal, subfamily_ideal
from lattres.ideals.monomial import MonomialIdeal, Ring, parse_ideal
from lattres.io import fixture_path, load_fixture, read_complex
from lattres.posets.semilattice import semilattice_from_covers
import lattres.resolutions.betti as betti_module
import pytest
from .variables import *

TRIANGLE = SimplicialComplex.from_labels(["1", "2", "3"], [["1", "2"], ["1", "3"], ["2", "3"]])
TWO_EDGES = SimplicialComplex.from_labels(["1", "2", "3", "4"], [["1", "2"], ["3", "4"]])


def test_dual_boolean():
    ideal = lattice_ideal(load_fixture("B2"))
    assert dual_ideal(ideal).format() == ["x_ay_a", "x_by_b"]
    assert minimal_primes(ideal) == [["x_a", "y_a"], ["x_b", "y_b"]]


@pytest.mark.parametrize("name", SEMILATTICES)
def test_dual_routes(name):
    """All routes agree and dualizing twice is the identity."""
    ideal = lattice_ideal(load_fixture(name))
    routes = dual_ideal_routes(ideal)
    assert routes.agree
    assert routes.nonface is not None
    assert dual_ideal(dual_ideal(ideal)) == ideal


def test_dual_routes_without_nonface():
    routes = dual_ideal_routes(lattice_ideal(load_fixture("B3")), max_vertices=4)
    assert routes.nonface is None
    assert routes.agree


def test_dual_improper():
    R = Ring(["a"])
    with pytest.raises(ZeroIdeal):
        dual_ideal(MonomialIdeal(R))
    with pytest.raises(UnitIdeal):
        dual_ideal(parse_ideal(R, ["1"]))


@pytest.mark.parametrize("edges", [[0b0011, 0b0110, 0b1100], [0b0111, 0b1001], [0b1111]])
def test_minimal_transversals(edges):
    assert minimal_transversals(edges) == minimal_transversals_bruteforce(edges, 4)


def test_stanley_reisner_correspondence():
    ideal = lattice_ideal(load_fixture("B2"))
    assert stanley_reisner_ideal(stanley_reisner_complex(ideal)) == ideal
    assert facet_ideal(facet_complex(ideal)) == ideal
    assert alexander_dual_complex(alexander_dual_complex(TRIANGLE)) == TRIANGLE
    assert minimal_vertex_covers(TWO_EDGES) == [["1", "3"], ["1", "4"], ["2", "3"], ["2", "4"]]
    assert is_pure(TRIANGLE)


@pytest.mark.parametrize("complex, expected", [(TRIANGLE, True), (TWO_EDGES, False)])
def test_shellable_and_cohen_macaulay(complex, expected):
    assert is_shellable(complex) == expected
    assert is_cohen_macaulay(complex) == expected


def test_void_complex():
    void = SimplicialComplex(["a"], [])
    with pytest.raises(NoFacets):
        is_shellable(void)
    with pytest.raises(NoFacets):
        minimal_vertex_covers(void)


def test_height_two():
    report = height2_classification(load_fixture("L11"))
    assert report.consistent
    assert report.has_higher
    report = height2_classification(load_fixture("B3"))
    assert report.consistent
    assert not report.has_higher
    assert report.height_two == report.expected


@pytest.mark.parametrize("name, flag", [("B3", True), ("L9", True), ("L11", False), ("M3", False)])
def test_flag_dual(name, flag):
    assert is_flag_dual(load_fixture(name)) == flag


def test_flag_dual_needs_lattice():
    L = semilattice_from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")])
    with pytest.raises(NotLattice):
        is_flag_dual(L)


def test_poset_ideal_dual():
    L = load_fixture("L9")
    dual = poset_ideal_dual(L, L9_IDEAL)
    assert set(dual.format()) == L9_DUAL
    assert dual == dual_ideal(subfamily_ideal(L, L9_IDEAL))


@pytest.mark.parametrize(
    "name, labels, error",
    [("L11", ["z"], NotDistributive), ("L9", ["a"], NotPosetIdeal), ("L9", [], EmptyIdeal)],
)
def test_poset_ideal_dual_errors(name, labels, error):
    with pytest.raises(error):
        poset_ideal_dual(load_fixture(name), labels)


def test_coideal_dual():
    L = load_fixture("L9")
    coideal = ["abd", "abcd"]
    assert coideal_dual(L, coideal) == dual_ideal(subfamily_ideal(L, coideal))


def test_one_cogenerated():
    report = one_cogenerated_split(load_fixture("L9"), L9_IDEAL)
    assert report.ok
    assert report.outside == ["abd", "abcd"]


def test_intersection_linear():
    report = intersect_ideal_coideal(load_fixture("L8"), L8_IDEAL, L8_COIDEAL)
    assert set(report.ideal.format()) == L8_GENERATORS
    assert report.betti.ranks == [6, 6, 1]
    assert report.linear
    assert report.dual_matches
    assert report.equals_meet_family
    assert report.union_is_L
    assert report.bounds_hold
    assert report.rank == 4


def test_intersection_not_linear():
    report = intersect_ideal_coideal(load_fixture("B3"), B3_IDEAL, B3_COIDEAL)
    assert not report.linear
    assert report.dual_matches


def test_graft():
    grafted = graft(SimplicialComplex.from_labels(["a", "b"], [["a", "b"]]))
    assert repr(grafted) == "<{a,b}, {a,w_a}, {b,w_b}>"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_graft_check(n):
    report = graft_check(random_complex(n, get_rng()))
    assert report.ok
    assert report.pure


def test_bipartite_lattice():
    G = BipartiteGraph(["p1", "p2"], ["q1", "q2"], [("p1", "q1"), ("p1", "q2"), ("p2", "q2")])
    assert perfect_matching(G) == {"p1": "q1", "p2": "q2"}
    result = bipartite_lattice(G)
    assert result.lattice.n == 3
    assert result.dual_matches
    assert result.valid


def test_bipartite_no_matching():
    G = BipartiteGraph(["p1", "p2"], ["q1", "q2"], [("p1", "q1"), ("p2", "q1")])
    with pytest.raises(NoPerfectMatching):
        bipartite_lattice(G)


def test_bipartite_not_a_poset():
    edges = [("p1", "q1"), ("p2", "q2"), ("p1", "q2"), ("p2", "q1")]
    with pytest.raises(NotAPartialOrder):
        bipartite_lattice(BipartiteGraph(["p1", "p2"], ["q1", "q2"], edges))


def test_facet_ideal_cm_check():
    complex, left, right = read_complex(fixture_path("delta_L9"))
    report = facet_ideal_cm_check(complex, left, right)
    assert report.cohen_macaulay
    assert report.pure
    assert report.from_poset_ideal
    assert report.consistent


def test_facet_ideal_cm_check_hypothesis():
    complex = SimplicialComplex.from_labels(["x1", "x2", "y1", "y2"], [["x1", "x2"], ["y1"]])
    with pytest.raises(HypothesisViolated):
        facet_ideal_cm_check(complex, ["x1", "x2"], ["y1", "y2"])


def test_cohen_macaulay_from_betti_numbers(monkeypatch):
    """Cohen-Macaulay answers come from the Betti numbers of the dual, never from a linear quotients order."""

    def no_search(*args, **kwargs):
        raise AssertionError("linear quotients search used")

    monkeypatch.setattr(betti_module, "linear_quotients_search", no_search)
    assert graft_check(random_complex(3, get_rng())).ok
    complex, left, right = read_complex(fixture_path("delta_L9"))
    assert facet_ideal_cm_check(complex, left, right).cohen_macaulay

from lattres.resolutions.betti import *
from lattres.resolutions.complex import *
from lattres.resolutions.mapping_cone import *
from lattres.configuration import get_field
from lattres.exceptions import MixedDegrees, NotAComplex, NotApplicable, NotMeetDistributive, TooLarge, WrongH0
from lattres.ideals.lattice_ideals import lattice_ideal, subfamily_ideal
from lattres.ideals.monomial import UNIT, MonomialIdeal, Ring
from lattres.io import load_fixture, read_resolution
import pytest
from .variables import *


def test_mapping_cone_boolean():
    assert mapping_cone_resolution(load_fixture("B2")).ranks == [4, 4, 1]


def test_mapping_cone_l11():
    """Graded Betti numbers, regularity and minimality of the eleven-element lattice."""
    L = load_fixture("L11")
    ideal = lattice_ideal(L)
    complex = mapping_cone_resolution(L)
    verify_resolution(complex, ideal)
    assert is_minimal(complex)
    assert complex.ranks == L11_RANKS

    table = betti_table_from_complex(complex)
    assert [table.shifts(i) for i in range(4)] == L11_SHIFTS
    assert table.regularity == L11_REGULARITY
    assert table == betti_oracle(ideal)


def test_mapping_cone_l7():
    L = load_fixture("L7")
    complex = mapping_cone_resolution(L)
    verify_resolution(complex, lattice_ideal(L))
    assert is_minimal(complex)
    assert complex.ranks == L7_RANKS


def test_mapping_cone_not_irredundant():
    """The diamond gives a nonminimal resolution, whose minimization has the oracle's Betti numbers."""
    L = load_fixture("M3")
    ideal = lattice_ideal(L)
    complex = mapping_cone_resolution(L)
    verify_resolution(complex, ideal)
    assert complex.ranks == [5, 6, 3, 1]
    assert not is_minimal(complex)
    reduced = minimize(complex)
    assert is_minimal(reduced)
    verify_resolution(reduced, ideal)
    assert betti_table_from_complex(reduced) == betti_oracle(ideal)


@pytest.mark.parametrize("field", ["Q", 2, 32003])
def test_mapping_cone_fields(field):
    domain = get_field(field)
    L = load_fixture("L11")
    complex = mapping_cone_resolution(L, domain)
    verify_resolution(complex, lattice_ideal(L))
    assert complex.ranks == L11_RANKS


def test_mapping_cone_cap():
    with pytest.raises(TooLarge):
        mapping_cone_resolution(load_fixture("L11"), max_basis=10)


@pytest.mark.parametrize("name", DISTRIBUTIVE)
def test_closed_form(name):
    L = load_fixture(name)
    ideal = lattice_ideal(L)
    complex = meet_distributive_differential(L)
    verify_resolution(complex, ideal)
    assert is_minimal(complex)
    assert same_differential(complex, mapping_cone_resolution(L))
    assert betti_table_from_complex(complex) == betti_oracle(ideal)


def test_closed_form_not_meet_distributive():
    with pytest.raises(NotMeetDistributive):
        meet_distributive_differential(load_fixture("L11"))


@pytest.mark.parametrize("name", ["L11", "L7", "B3"])
def test_differential_shape(name):
    L = load_fixture(name)
    report = differential_shape_report(L, mapping_cone_resolution(L))
    assert report.ok
    assert report.checked > 0


def test_differential_shape_not_irredundant():
    L = load_fixture("M3")
    with pytest.raises(NotApplicable):
        differential_shape_report(L, mapping_cone_resolution(L))


def test_taylor_complex():
    ideal = lattice_ideal(load_fixture("B2"))
    complex = taylor_complex(ideal)
    assert complex.ranks == [4, 6, 4, 1]
    verify_resolution(complex, ideal)
    assert not is_minimal(complex)
    assert minimize(complex).ranks == [4, 4, 1]


def test_verify_complex_rejects_wrong_monomial():
    complex = mapping_cone_resolution(load_fixture("B2"))
    differentials = [list(d) for d in complex.differentials]
    column = dict(differentials[2][0])
    row = min(column)
    column[row] = Entry(column[row].scalar, UNIT)
    differentials[2][0] = column
    broken = FreeComplex(complex.ring, complex.domain, complex.modules, differentials, complex.augmentation)
    with pytest.raises(NotAComplex):
        verify_complex(broken)


def test_verify_resolution_wrong_ideal():
    L = load_fixture("B2")
    with pytest.raises(WrongH0):
        verify_resolution(mapping_cone_resolution(L), subfamily_ideal(L, ["0", "a"]))


def test_resolution_from_dict():
    L = load_fixture("B2")
    complex = mapping_cone_resolution(L)
    copy = read_resolution(complex.to_dict())
    assert copy.ranks == complex.ranks
    verify_resolution(copy, lattice_ideal(L))


@pytest.mark.parametrize("name", ["B2", "B3", "M3", "L7", "L8", "L9"])
def test_oracle_methods_agree(name):
    ideal = lattice_ideal(load_fixture(name))
    assert betti_oracle(ideal, method="taylor") == betti_oracle(ideal, method="koszul")


def test_oracle_unknown_method():
    with pytest.raises(ValueError):
        betti_oracle(lattice_ideal(load_fixture("B2")), method="cellular")


def test_betti_frame():
    table = betti_oracle(lattice_ideal(load_fixture("B2")))
    frame = table.to_frame()
    assert list(frame.columns) == [0, 1, 2]
    assert frame.loc[2].tolist() == [4, 4, 1]
    assert "total:" in table.to_text()
    assert table.to_dict()["graded"] == [[0, 2, 4], [1, 3, 4], [2, 4, 1]]


def test_regularity_bounds():
    bounds = regularity_bounds(load_fixture("L11"))
    assert bounds.exact == L11_REGULARITY
    assert bounds.upper >= bounds.exact
    assert regularity(lattice_ideal(load_fixture("L11"))) == L11_REGULARITY


@pytest.mark.parametrize("name, linear", [("B3", True), ("L9", True), ("L11", False), ("M3", False)])
@pytest.mark.parametrize("use_quotients", [True, False])
def test_linear_resolution(name, linear, use_quotients):
    ideal = lattice_ideal(load_fixture(name))
    assert has_linear_resolution(ideal, use_quotients=use_quotients) == linear


def test_linear_resolution_mixed_degrees():
    R = Ring(["a", "b", "c"])
    ideal = MonomialIdeal(R, [R.monomial(["a"]), R.monomial(["b", "c"])])
    with pytest.raises(MixedDegrees):
        has_linear_resolution(ideal)

from lattres.io import *
from lattres.exceptions import InvalidInput, NotMeetSemilattice
import json
import pytest
from .variables import *


@pytest.mark.parametrize("name", SEMILATTICES)
def test_load_fixture(name):
    L = load_fixture(name)
    assert L.n == len(L.poset.elements)


def test_fixture_sizes():
    assert load_fixture("L11").n == 11
    assert len(load_fixture("L11").irreducibles) == 6
    assert load_fixture("L7").n == 7


def test_unknown_fixture():
    with pytest.raises(FileNotFoundError):
        fixture_path("L12")


def test_poset_dict():
    P = read_poset(fixture_path("B2"))
    assert read_poset(poset_to_dict(P)) == P


@pytest.mark.parametrize(
    "data",
    [
        {"elements": ["a"]},
        {"elements": "ab", "covers": []},
        {"elements": ["a", "b"], "covers": [["a"]]},
    ],
)
def test_invalid_poset(data):
    with pytest.raises(InvalidInput):
        read_poset(data)


def test_not_meet_semilattice(tmp_path):
    path = tmp_path / "two_minima.json"
    write_json({"elements": ["a", "b", "c"], "covers": [["a", "c"], ["b", "c"]]}, path)
    with pytest.raises(NotMeetSemilattice):
        read_semilattice(path)


def test_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"elements": ["a",\n  "covers": []}')
    with pytest.raises(json.JSONDecodeError) as info:
        read_poset(path)
    assert info.value.lineno == 2


def test_top_level_not_object(tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]")
    with pytest.raises(InvalidInput):
        load_json(path)


def test_read_complex():
    complex, left, right = read_complex(fixture_path("delta_L9"))
    assert complex.n == 8
    assert len(complex.facets) == 8
    assert left == ["x_a", "x_b", "x_c", "x_d"]
    assert right == ["y_a", "y_b", "y_c", "y_d"]

    complex, left, right = read_complex({"vertices": ["a", "b"], "facets": [["a", "b"]]})
    assert left is None and right is None


def test_read_bipartite():
    G = read_bipartite({"left": ["p"], "right": ["q"], "edges": [["q", "p"]]})
    assert G.edges == [("p", "q")]


def test_write_json(tmp_path):
    path = tmp_path / "out.json"
    write_json({"b": 1, "a": [1, 2]}, path)
    assert path.read_text().endswith("\n")
    assert load_json(path) == ({"b": 1, "a": [1, 2]}, str(path))
    assert dumps({"a": 1}) == '{\n  "a": 1\n}'

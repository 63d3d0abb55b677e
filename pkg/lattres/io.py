"""
JSON input and output of posets, semilattices, simplicial complexes, bipartite graphs and free complexes.

Formats
-------
poset
    ``{"elements": [...], "covers": [[below, above], ...]}``; the order of ``elements`` fixes the indices.
complex
    ``{"vertices": [...], "facets": [[...], ...]}``, optionally with the vertex classes ``"left"`` and ``"right"``.
bipartite graph
    ``{"left": [...], "right": [...], "edges": [[l, r], ...]}``.

Any file may carry a ``"description"`` entry, which is ignored. Decoding errors are raised as `json.JSONDecodeError` and keep the line and column of the offending character.
"""
from __future__ import annotations
from pathlib import Path
from typing import List, Optional, Tuple, Union
import json
from sympy import Rational
from .exceptions import InvalidInput
from .duality.bipartite import BipartiteGraph
from .duality.complexes import SimplicialComplex
from .ideals.monomial import Ring
from .posets.poset import Poset, build_poset
from .posets.semilattice import MeetSemilattice
from .resolutions.complex import BasisElement, Entry, FreeComplex
from .configuration import get_field


FIXTURES = Path(__file__).resolve().parent / "fixtures"

source_type = Union[str, Path, dict]


def load_json(source: source_type) -> Tuple[dict, str]:
    """Returns the decoded object of a file, or a dict as is, with a name for diagnostics."""
    if isinstance(source, dict):
        return source, "<input>"
    path = Path(source)
    with open(path, encoding="utf-8") as file:
        data = json.load(file)
    if not isinstance(data, dict):
        raise InvalidInput(str(path), "top level value must be an object")
    return data, str(path)


def write_json(data: dict, path: Union[str, Path]):
    with open(path, "w", encoding="utf-8") as file:
        json.dump(data, file, indent=2, ensure_ascii=False)
        file.write("\n")


def dumps(data: dict) -> str:
    """Deterministic JSON text of a report."""
    return json.dumps(data, indent=2, ensure_ascii=False)


def _require(data: dict, name: str, keys: List[str]):
    for key in keys:
        if key not in data:
            raise InvalidInput(name, f"missing entry <{key}>")
        if not isinstance(data[key], list):
            raise InvalidInput(name, f"entry <{key}> must be a list")


def _pairs(data: dict, name: str, key: str) -> List[Tuple[str, str]]:
    pairs = []
    for item in data[key]:
        if not isinstance(item, list) or len(item) != 2:
            raise InvalidInput(name, f"every item of <{key}> must be a pair, found {item}")
        pairs.append((str(item[0]), str(item[1])))
    return pairs


def read_poset(source: source_type) -> Poset:
    data, name = load_json(source)
    _require(data, name, ["elements", "covers"])
    return build_poset([str(label) for label in data["elements"]], _pairs(data, name, "covers"))


def read_semilattice(source: source_type) -> MeetSemilattice:
    """Reads a poset file and checks that every pair of elements has a meet.

    Raises
    ------
    NotMeetSemilattice
    """
    return MeetSemilattice(read_poset(source))


def poset_to_dict(poset: Poset) -> dict:
    return {
        "elements": list(poset.elements),
        "covers": [[poset.elements[i], poset.elements[j]] for i, j in poset.covers],
    }


def read_complex(source: source_type) -> Tuple[SimplicialComplex, Optional[List[str]], Optional[List[str]]]:
    """Reads a complex and its vertex classes, None when the file names none."""
    data, name = load_json(source)
    _require(data, name, ["vertices", "facets"])
    for facet in data["facets"]:
        if not isinstance(facet, list):
            raise InvalidInput(name, f"facet {facet} must be a list")
    complex = SimplicialComplex.from_labels([str(v) for v in data["vertices"]], data["facets"])
    if "left" in data or "right" in data:
        _require(data, name, ["left", "right"])
        return complex, [str(v) for v in data["left"]], [str(v) for v in data["right"]]
    return complex, None, None


def read_bipartite(source: source_type) -> BipartiteGraph:
    data, name = load_json(source)
    _require(data, name, ["left", "right", "edges"])
    return BipartiteGraph([str(v) for v in data["left"]], [str(v) for v in data["right"]], _pairs(data, name, "edges"))


def read_resolution(source: source_type) -> FreeComplex:
    """Rebuilds a complex written by `FreeComplex.to_dict`."""
    data, name = load_json(source)
    _require(data, name, ["variables", "modules", "differentials", "augmentation"])
    field = data.get("field", "Q")
    domain = get_field(field[3:-1] if field.startswith("GF(") else field)
    ring = Ring(data["variables"])
    modules = [[BasisElement(b["name"], ring.parse(b["multidegree"])) for b in module] for module in data["modules"]]
    differentials = [[]]
    for i, differential in enumerate(data["differentials"], start=1):
        columns = [dict() for _ in modules[i]]
        for row, col, scalar, monomial in differential["entries"]:
            columns[col][row] = Entry(domain.from_sympy(Rational(scalar)), ring.parse(monomial))
        differentials.append(columns)
    augmentation = [ring.parse(m) for m in data["augmentation"]]
    return FreeComplex(ring, domain, modules, differentials, augmentation)


def fixture_path(name: str) -> Path:
    path = FIXTURES / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(f"No fixture named <{name}>, available: {sorted(p.stem for p in FIXTURES.glob('*.json'))}")
    return path


def load_fixture(name: str) -> MeetSemilattice:
    """One of the semilattices shipped in *lattres/fixtures*."""
    return read_semilattice(fixture_path(name))

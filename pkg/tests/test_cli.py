from lattres.__main__ import cli
from lattres import configuration
from lattres.configuration import RunConfig
import json
import pytest
from .variables import *


def run_json(capsys, args):
    code = cli(["--json"] + args)
    return code, json.loads(capsys.readouterr().out)


def test_cli_check(capsys):
    assert cli(["check", get_fixture_path("L11")]) == 0
    out = capsys.readouterr().out
    assert "✅ meet irredundant" in out
    assert "❌ meet distributive" in out


def test_cli_check_json(capsys):
    code, data = run_json(capsys, ["check", get_fixture_path("B3")])
    assert code == 0
    assert data["is_meet_distributive"]
    assert data["irreducibles"] == ["a", "b", "c"]
    assert data["field"] == "Q"


def test_cli_resolve(capsys, tmp_path):
    output = tmp_path / "resolution.json"
    code, data = run_json(capsys, ["resolve", get_fixture_path("L11"), "--verify", "-o", str(output)])
    assert code == 0
    assert [len(module) for module in data["resolution"]["modules"]] == L11_RANKS
    assert data["verification"]["passed"]
    assert output.exists()


def test_cli_resolve_deterministic(capsys):
    outputs = []
    for _ in range(2):
        assert cli(["--json", "resolve", get_fixture_path("L7")]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]


def test_cli_resolve_closed_form(capsys):
    code, data = run_json(capsys, ["resolve", get_fixture_path("B3"), "--closed-form", "--verify"])
    assert code == 0
    assert data["verification"]["passed"]


def test_cli_resolve_closed_form_rejected(capsys):
    assert cli(["resolve", get_fixture_path("L11"), "--closed-form"]) == 1
    assert "NotMeetDistributive" in capsys.readouterr().err


def test_cli_resolve_family(capsys):
    args = ["resolve", get_fixture_path("L8"), "-v", "-I"] + L8_IDEAL + ["-J"] + L8_COIDEAL
    code, data = run_json(capsys, args)
    assert code == 0
    assert [len(module) for module in data["resolution"]["modules"]] == [6, 6, 1]


@pytest.mark.parametrize("field", ["Q", "2", "32003"])
def test_cli_betti(capsys, field):
    code, data = run_json(capsys, ["--field", field, "betti", get_fixture_path("L11")])
    assert code == 0
    assert data["ranks"] == L11_RANKS
    assert data["regularity"] == L11_REGULARITY
    assert data["bounds"]["exact"] == L11_REGULARITY


def test_cli_bad_field(capsys):
    assert cli(["--field", "4", "betti", get_fixture_path("B2")]) == 1
    assert "ValueError" in capsys.readouterr().err


def test_cli_dual(capsys):
    code, data = run_json(capsys, ["dual", get_fixture_path("B2")])
    assert code == 0
    assert data["generators"] == ["x_ay_a", "x_by_b"]
    assert data["routes_agree"]


def test_cli_dual_poset_ideal(capsys):
    code, data = run_json(capsys, ["dual", get_fixture_path("L9"), "--poset-ideal"] + L9_IDEAL)
    assert code == 0
    assert set(data["generators"]) == L9_DUAL
    assert data["formula_matches_bruteforce"]


def test_cli_dual_not_an_ideal(capsys):
    assert cli(["dual", get_fixture_path("L9"), "-I", "a"]) == 1
    assert "NotPosetIdeal" in capsys.readouterr().err


def test_cli_intersect(capsys):
    args = ["intersect", get_fixture_path("L8"), "-I"] + L8_IDEAL + ["-J"] + L8_COIDEAL
    code, data = run_json(capsys, args)
    assert code == 0
    assert set(data["generators"]) == L8_GENERATORS
    assert data["ranks"] == [6, 6, 1]
    assert data["linear"]


def test_cli_intersect_not_linear(capsys):
    args = ["intersect", get_fixture_path("B3"), "-I"] + B3_IDEAL + ["-J"] + B3_COIDEAL
    code, data = run_json(capsys, args)
    assert not data["linear"]


@pytest.mark.parametrize("command", [["rank-range", "1", "2"], ["interior"]])
def test_cli_families(capsys, command):
    code, data = run_json(capsys, [command[0], get_fixture_path("B3")] + command[1:])
    assert code == 0
    assert data["generators"]


def test_cli_graft(capsys, tmp_path):
    path = tmp_path / "complex.json"
    path.write_text(json.dumps({"vertices": ["a", "b", "c"], "facets": [["a", "b"], ["c"]]}))
    assert cli(["graft", str(path)]) == 0
    assert "✅ Cohen-Macaulay" in capsys.readouterr().out


def test_cli_bipartite(capsys, tmp_path):
    path = tmp_path / "graph.json"
    path.write_text(json.dumps({"left": ["p1", "p2"], "right": ["q1", "q2"], "edges": [["p1", "q1"], ["p1", "q2"], ["p2", "q2"]]}))
    code, data = run_json(capsys, ["bipartite", str(path)])
    assert code == 0
    assert data["lattice_size"] == 3


def test_cli_cm_check(capsys):
    code, data = run_json(capsys, ["cm-check", get_fixture_path("delta_L9")])
    assert code == 0
    assert data["cohen_macaulay"] and data["pure"] and data["from_poset_ideal"]


def test_cli_cm_check_without_classes(capsys, tmp_path):
    path = tmp_path / "complex.json"
    path.write_text(json.dumps({"vertices": ["a", "b"], "facets": [["a", "b"]]}))
    assert cli(["cm-check", str(path)]) == 1
    assert "InvalidInput" in capsys.readouterr().err


def test_cli_malformed_json(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"elements": ["a",\n  "covers": []}')
    assert cli(["check", str(path)]) == 1
    assert "invalid JSON at line 2" in capsys.readouterr().err


def test_cli_missing_file(capsys, tmp_path):
    assert cli(["check", str(tmp_path / "missing.json")]) == 1
    assert "FileNotFoundError" in capsys.readouterr().err


def test_cli_suite(capsys):
    args = ["suite", "-k", "4", "-ch", "linear_quotients", "mapping_cone", "dual_routes", "-o", "none"]
    assert cli(args) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3
    assert all(line.startswith("✅") for line in lines)


def test_cli_suite_json(capsys):
    code, data = run_json(capsys, ["suite", "-k", "3", "-ch", "colon_formula", "-o", "none"])
    assert code == 0
    assert data["checks"][0]["passed"] == 3
    assert data["checks"][0]["skipped"] == 1


def test_cli_write_config(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert cli(["--write-config"]) == 0
    assert (tmp_path / "lattres.ini").exists()


def test_cli_resolve_closed_form_with_family(capsys):
    args = ["resolve", get_fixture_path("L8"), "--closed-form", "-I"] + L8_IDEAL
    with pytest.raises(SystemExit) as info:
        cli(args)
    assert info.value.code == 2
    assert "--closed-form" in capsys.readouterr().err


def test_run_config_seed(monkeypatch):
    """An unset seed falls back to the configuration file, an explicit zero is kept."""
    config = dict(configuration._cached_config())
    config["suite"] = {**config["suite"], "seed": 7}
    monkeypatch.setattr(configuration, "_cached_config", lambda: config)
    assert RunConfig(command="suite").seed == 7
    assert RunConfig(command="suite", seed=0).seed == 0

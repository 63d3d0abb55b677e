from lattres.main import *
from lattres.main import _combine_mean_std
from lattres.configuration import get_field
from lattres.io import load_fixture
from lattres.suite import CHECKS, check_closed_form, check_generators, read_csv, run_suite
import pytest
from .variables import *

PROCESSES = [1, 2, 3]


def always_true(item, domain, rng):
    return True


def fails_on_lattices(L, domain, rng):
    """Negative control, falsified on every lattice with more than one element."""
    if L.n == 1:
        return None
    return not L.is_lattice


def draw(item, domain, rng):
    return rng.random() < 0.5


def test_initialize():
    populations = initialize(max_elements=4, samples=0, graft_samples=2, distributive_max_irreducibles=2)
    assert {name: len(items) for name, items in populations.items()} == {"semilattices": 9, "distributive": 3, "complexes": 2}


def test_initialize_samples():
    """Sampled populations depend on the seed only."""
    first = initialize(max_elements=2, samples=3, sample_elements=6, graft_samples=3, seed=SEED)
    second = initialize(max_elements=2, samples=3, sample_elements=6, graft_samples=3, seed=SEED)
    assert [L.poset for L in first["semilattices"]] == [L.poset for L in second["semilattices"]]
    assert first["complexes"] == second["complexes"]
    assert len(first["semilattices"]) == 5


def test_run():
    populations = initialize(max_elements=3, samples=0, graft_samples=0)
    output = run(populations, {"trivial": Check("semilattices", always_true)})
    assert output == {"trivial": {"passed": 4, "failed": 0, "skipped": 0, "failures": []}}


def test_run_negative_control():
    """A falsified property is reported with its failing items."""
    populations = initialize(max_elements=4, samples=0, graft_samples=0)
    output = run(populations, {"control": Check("semilattices", fails_on_lattices)})
    counts = output["control"]
    assert counts["skipped"] == 1
    assert counts["failed"] > 0
    assert counts["passed"] + counts["failed"] + counts["skipped"] == 9
    assert all(case.startswith("semilattices[") for case in counts["failures"])


@pytest.mark.parametrize("processes", PROCESSES)
def test_run_multiprocess(processes):
    """Splitting over processes gives the same counts and failing items as a single run."""
    populations = initialize(max_elements=5, samples=0, graft_samples=0)
    checks = {"control": Check("semilattices", fails_on_lattices), "draw": Check("semilattices", draw)}
    single = run(populations, checks, seed=SEED)
    multiple = run_multiprocess(populations, checks, seed=SEED, processes=processes)
    assert multiple == single


def test_benchmark():
    benchmarker = BenchmarkSuite({"trivial": ["duration", "count_calls", "value_to_list"]})
    populations = initialize(max_elements=4, samples=0, graft_samples=0)
    output = run(populations, {"trivial": Check("semilattices", always_true)}, benchmark=benchmarker)
    benchmark = output["benchmark"]
    assert benchmark["cases"] == 9
    assert benchmark["duration/always_true/count"] == 9
    assert benchmark["count_calls/always_true/mean"] == 1.0


def test_benchmark_unknown_decorator():
    benchmarker = BenchmarkSuite({"trivial": "memory"})
    with pytest.raises(NameError):
        run(initialize(max_elements=2, graft_samples=0), {"trivial": Check("semilattices", always_true)}, benchmark=benchmarker)


def test_benchmark_multiprocess():
    benchmarker = BenchmarkSuite({"trivial": "duration"})
    populations = initialize(max_elements=5, samples=0, graft_samples=0)
    output = run_multiprocess(populations, {"trivial": Check("semilattices", always_true)}, processes=2, benchmark=benchmarker)
    assert output["benchmark"]["cases"] == 24
    assert output["benchmark"]["duration/always_true/count"] == 24


def test_combine_mean_std():
    mean, std = _combine_mean_std([1.0, 3.0], [0.0, 0.0], [1, 1])
    assert mean == 2.0
    assert std == 1.0


def test_run_suite():
    data = run_suite(max_elements=5, checks=["linear_quotients", "mapping_cone"], output="none", graft_samples=0)
    assert list(data["check"]) == ["linear_quotients", "mapping_cone"]
    assert list(data["passed"]) == [23, 23]
    assert list(data["skipped"]) == [1, 1]
    assert (data["failed"] == 0).all()


@pytest.mark.parametrize("name", [name for name, check in CHECKS.items() if check.population != "distributive"])
def test_run_suite_checks(name):
    data = run_suite(max_elements=5, checks=[name], output="none", graft_samples=20)
    assert data["failed"].iloc[0] == 0


@pytest.mark.parametrize("name", [name for name, check in CHECKS.items() if check.population == "distributive"])
def test_run_suite_distributive_checks(name):
    data = run_suite(max_elements=1, checks=[name], output="none", graft_samples=0, distributive_max_irreducibles=3)
    assert data["failed"].iloc[0] == 0
    assert data["passed"].iloc[0] > 0


def test_run_suite_csv(tmp_path):
    output = str(tmp_path / "suite.csv")
    for _ in range(2):
        run_suite(max_elements=3, checks=["colon_formula"], output=output, graft_samples=0)
    data = read_csv(output)
    assert len(data) == 2
    assert list(data["failures"]) == ["", ""]


def test_read_csv_missing(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_csv(tmp_path / "missing.csv")


def test_run_suite_unknown_check():
    with pytest.raises(KeyError):
        run_suite(max_elements=2, checks=["nonexistent"], output="none")


@pytest.mark.exhaustive
def test_run_suite_exhaustive():
    data = run_suite(max_elements=8, output="none")
    assert (data["failed"] == 0).all()


@pytest.mark.parametrize("name", SEMILATTICES)
def test_check_generators(name):
    """No variable divides every generator, even when the common support empties before the last generator."""
    assert check_generators(load_fixture(name), get_field("Q"), get_rng())


@pytest.mark.parametrize("name", DISTRIBUTIVE)
def test_check_closed_form(name):
    assert check_closed_form(load_fixture(name), get_field("Q"), get_rng())

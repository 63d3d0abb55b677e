"""
Contains functions and classes to run and benchmark the property checks of the suite. Use `initialize` to build the populations of semilattices, distributive lattices and simplicial complexes, which can be passed on to `run` and `run_multiprocess` together with a dictionary of checks.
"""
from __future__ import annotations
from typing import Any, Callable, Dict, List, Optional, Tuple
from collections import defaultdict
from dataclasses import dataclass
from functools import wraps
from multiprocessing import Process, Queue, cpu_count
from random import Random
import sys
import timeit
import numpy
from sympy.polys.domains.domain import Domain
from .configuration import get_config, get_field
from .duality.cohen_macaulay import random_complex
from .posets.generate import enumerate_posets, enumerate_semilattices, random_semilattice
from .posets.semilattice import distributive_lattice


POPULATIONS = ["semilattices", "distributive", "complexes"]


@dataclass(frozen=True)
class Check:
    """A property evaluated on every member of one population.

    The function is called as ``function(item, domain, rng)`` and returns True if the property holds, False if it is falsified, and None if it does not apply to the item.
    """

    population: str
    function: Callable[[Any, Domain, Random], Optional[bool]]


populations_type = Dict[str, list]
checks_type = Dict[str, Check]


def initialize(
    max_elements: Optional[int] = None,
    seed: Optional[int] = None,
    samples: Optional[int] = None,
    sample_elements: Optional[int] = None,
    graft_samples: Optional[int] = None,
    graft_vertices: Optional[int] = None,
    distributive_max_irreducibles: Optional[int] = None,
) -> populations_type:
    """Builds the populations of the suite.

    Parameters default to the ``[suite]`` section of the configuration. Every population draws from its own random generator seeded by ``seed``, so changing the size of one population leaves the others unchanged.

    Parameters
    ----------
    max_elements
        All meet-semilattices with up to this many elements, up to isomorphism.
    samples
        Number of additional random meet-semilattices with ``sample_elements`` elements.
    graft_samples
        Number of random simplicial complexes on 1 to ``graft_vertices`` vertices.
    distributive_max_irreducibles
        The distributive lattices of all posets with up to this many elements.

    Examples
    --------
        >>> populations = initialize(max_elements=4, samples=0, graft_samples=2, distributive_max_irreducibles=2)
        >>> {name: len(items) for name, items in populations.items()}
        {'semilattices': 9, 'distributive': 3, 'complexes': 2}
    """
    config = get_config("suite")
    if max_elements is None:
        max_elements = config["max_elements"]
    if seed is None:
        seed = config["seed"]
    if samples is None:
        samples = config["samples"]
    if sample_elements is None:
        sample_elements = config["sample_elements"]
    if graft_samples is None:
        graft_samples = config["graft_samples"]
    if graft_vertices is None:
        graft_vertices = config["graft_vertices"]
    if distributive_max_irreducibles is None:
        distributive_max_irreducibles = config["distributive_max_irreducibles"]

    semilattices = enumerate_semilattices(max_elements)
    rng = Random(f"{seed}/semilattices")
    semilattices += [random_semilattice(sample_elements, rng) for _ in range(samples)]

    distributive = [distributive_lattice(P) for P in enumerate_posets(distributive_max_irreducibles)]

    rng = Random(f"{seed}/complexes")
    complexes = [random_complex(rng.randint(1, graft_vertices), rng) for _ in range(graft_samples)]

    return {"semilattices": semilattices, "distributive": distributive, "complexes": complexes}


def run(
    populations: populations_type,
    checks: checks_type,
    domain: Optional[Domain] = None,
    seed: int = 0,
    benchmark: Optional[BenchmarkSuite] = None,
    offsets: Optional[Dict[str, int]] = None,
    progress: bool = False,
    mp_queue: Optional[Queue] = None,
    mp_process: int = 0,
) -> dict:
    """Evaluates every check on every member of its population.

    Parameters
    ----------
    populations
        Lists of items per population name (see `initialize`).
    checks
        Checks by name.
    domain
        Field of scalars handed to the checks.
    seed
        Seeds the random generator of each check and item, which depends only on ``seed``, the check name and the position of the item.
    benchmark
        Benchmarks the checks if attached.
    offsets
        Position of the first item of each population, used by `run_multiprocess` for the names of failing items.
    progress
        Prints the running check on one line of the standard error.

    Returns
    -------
    dict
        ``{name: {"passed", "failed", "skipped", "failures"}}``, where ``failures`` lists the items as ``population[position]``; under ``"benchmark"`` the benchmark data if attached.

    Examples
    --------
        >>> run(initialize(max_elements=3, graft_samples=0), {"trivial": Check("semilattices", lambda L, domain, rng: True)})
        {'trivial': {'passed': 4, 'failed': 0, 'skipped': 0, 'failures': []}}
    """
    if domain is None:
        domain = get_field()
    if offsets is None:
        offsets = {}
    functions = {name: check.function for name, check in checks.items()}
    if benchmark:
        functions = benchmark._set_checks(functions, seed=seed)

    output = {}
    for name, check in checks.items():
        items = populations.get(check.population, [])
        counts = {"passed": 0, "failed": 0, "skipped": 0, "failures": []}
        for k, item in enumerate(items):
            case = f"{check.population}[{offsets.get(check.population, 0) + k}]"
            if progress:
                print(f"Running {name} on {case}", end="\r", file=sys.stderr)
            result = functions[name](item, domain, Random(f"{seed}/{name}/{case}"))
            if result is None:
                counts["skipped"] += 1
            elif result:
                counts["passed"] += 1
            else:
                counts["failed"] += 1
                counts["failures"].append(case)
        output[name] = counts
    if progress:
        print(file=sys.stderr)

    if benchmark:
        output["benchmark"] = {
            **benchmark.data,
            **benchmark.lists_mean_var(),
        }

    if mp_queue is None:
        return output
    else:
        mp_queue.put((mp_process, output))


def _chunks(items: list, processes: int) -> List[Tuple[int, list]]:
    """Splits ``items`` into ``processes`` contiguous chunks with their offsets."""
    size, extra = divmod(len(items), processes)
    chunks, start = [], 0
    for process in range(processes):
        end = start + size + (1 if process < extra else 0)
        chunks.append((start, items[start:end]))
        start = end
    return chunks


def run_multiprocess(
    populations: populations_type,
    checks: checks_type,
    domain: Optional[Domain] = None,
    seed: int = 0,
    processes: Optional[int] = None,
    benchmark: Optional[BenchmarkSuite] = None,
    progress: bool = False,
) -> dict:
    """Runs the checks using multiple processes.

    Using the standard module `multiprocessing` and its `~multiprocessing.Process` class, every population is split into contiguous chunks, one per process, and each process runs `run` on its chunks. The partial outputs are merged in chunk order, so the result is the same as that of a single `run` regardless of which process finishes first. If no ``processes`` parameter is supplied, the number of available threads is determined via `~multiprocessing.cpu_count`.

    If a `BenchmarkSuite` object is attached to ``benchmark``, `~multiprocessing.Process` copies the object for each process. The mean and standard deviation of the durations are combined over the processes.
    """
    if domain is None:
        domain = get_field()
    if processes is None:
        processes = cpu_count()

    split = {name: _chunks(items, processes) for name, items in populations.items()}

    mp_queue = Queue()
    workers = []
    for process in range(processes):
        workers.append(
            Process(
                target=run,
                args=({name: chunks[process][1] for name, chunks in split.items()}, checks),
                kwargs={
                    "domain": domain,
                    "seed": seed,
                    "benchmark": benchmark,
                    "offsets": {name: chunks[process][0] for name, chunks in split.items()},
                    "progress": progress and process == 0,
                    "mp_queue": mp_queue,
                    "mp_process": process,
                },
            )
        )

    for worker in workers:
        worker.start()

    outputs = []
    for worker in workers:
        outputs.append(mp_queue.get())
    for worker in workers:
        worker.join()
    outputs = [output for _, output in sorted(outputs, key=lambda item: item[0])]

    output = {}
    for name in checks:
        merged = {"passed": 0, "failed": 0, "skipped": 0, "failures": []}
        for partial_output in outputs:
            for key in ("passed", "failed", "skipped"):
                merged[key] += partial_output[name][key]
            merged["failures"] += partial_output[name]["failures"]
        output[name] = merged

    if benchmark:
        output["benchmark"] = _merge_benchmarks([partial_output["benchmark"] for partial_output in outputs])
    return output


def _merge_benchmarks(benchmarks: List[dict]) -> dict:
    combined = {"cases": 0, "seed": benchmarks[0]["seed"]}
    stats = defaultdict(lambda: {"mean": [], "std": [], "count": []})
    for benchmark in benchmarks:
        combined["cases"] += benchmark["cases"]
        for name, value in benchmark.items():
            for kind in ("mean", "std", "count"):
                if name.endswith(f"/{kind}"):
                    stats[name[: -len(kind) - 1]][kind].append(value)
    for name, values in stats.items():
        mean, std = _combine_mean_std(values["mean"], values["std"], values["count"])
        combined[f"{name}/mean"] = mean
        combined[f"{name}/std"] = std
        combined[f"{name}/count"] = sum(values["count"])
    return combined


class BenchmarkSuite(object):
    """Benchmarks the checks of a suite run.

    A benchmark is performed by attaching the current class to `run`. The benchmarker keeps track of the number of evaluated cases in ``self.data``, and wraps the check functions named in ``methods_to_benchmark`` by its decorators, which have the form ``decorator(self, func)``. If no benchmark is attached, no benchmarking is performed.

    There are two types of decorators, list decorators, which append some value to a dictionary of lists ``self.lists``, and value decorators, that save or update some value in ``self.values``.

    Parameters
    ----------
    methods_to_benchmark
        Check names mapped to a decorator name or a list of decorator names.

    Attributes
    ----------
    data
        Run data.
    lists
        Benchmarked data by list decorators.
    values
        Benchmarked data by value decorators.

    Examples
    --------
    To time every case of two checks:

        >>> benchmarker = BenchmarkSuite({"colon_formula": "duration", "dual_routes": "duration"})
        >>> output = run(initialize(max_elements=5), {name: CHECKS[name] for name in ["colon_formula", "dual_routes"]}, benchmark=benchmarker)
        >>> output["benchmark"]
        {'cases': 48, 'seed': 0,
        'duration/check_colon_formula/mean': 0.00051, 'duration/check_colon_formula/std': 0.00032, 'duration/check_colon_formula/count': 24,
        'duration/check_dual_routes/mean': 0.00418, 'duration/check_dual_routes/std': 0.0039, 'duration/check_dual_routes/count': 24}
    """

    list_decorators = ["duration"]
    value_decorators = ["count_calls"]

    def __init__(self, methods_to_benchmark: dict = {}, seed: Optional[int] = None):
        self.methods_to_benchmark = methods_to_benchmark
        self.data = {"cases": 0, "seed": seed}
        self.lists = defaultdict(list)
        self.values = defaultdict(float)

    def _set_checks(self, functions: Dict[str, Callable], seed: Optional[int] = None) -> Dict[str, Callable]:
        """Returns the check functions wrapped by the requested decorators."""
        self.data["seed"] = seed
        decorator_names = ["value_to_list"] + self.list_decorators + self.value_decorators

        wrapped = {}
        for name, function in functions.items():
            decorators = self.methods_to_benchmark.get(name, [])
            if isinstance(decorators, str):
                decorators = [decorators]
            for decorator in decorators:
                if decorator not in decorator_names:
                    raise NameError(f"Decorator {decorator} not defined.")
                function = getattr(self, decorator)(function)
            wrapped[name] = self._count_case(function)
        return wrapped

    def _count_case(self, func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            self.data["cases"] += 1
            return func(*args, **kwargs)

        return wrapper

    def lists_mean_var(self, reset: bool = True) -> dict:
        """Get mean, standard deviation and count of the values in ``self.lists``.

        Parameters
        ----------
        reset
            Resets all in ``self.lists`` to empty lists.
        """
        processed_data = {}
        for decorated_method, data in self.lists.items():
            processed_data[f"{decorated_method}/mean"] = float(numpy.mean(data))
            processed_data[f"{decorated_method}/std"] = float(numpy.std(data))
            processed_data[f"{decorated_method}/count"] = len(data)
        if reset:
            self.lists = defaultdict(list)
        return processed_data

    def value_to_list(self, func):
        """Appends all values in ``self.values`` to lists in ``self.lists``."""

        @wraps(func)
        def wrapper(*args, **kwargs):
            result = func(*args, **kwargs)
            for decorated_method, value in self.values.items():
                self.lists[decorated_method].append(value)
            self.values = defaultdict(float)
            return result

        return wrapper

    def duration(self, func):
        """Logs the duration of ``func`` in ``self.lists``."""

        @wraps(func)
        def wrapper(*args, **kwargs):
            t = timeit.default_timer()
            result = func(*args, **kwargs)
            self.lists[f"duration/{func.__name__}"].append(timeit.default_timer() - t)
            return result

        return wrapper

    def count_calls(self, func):
        """Logs the number of calls to ``func`` in ``self.values``."""

        @wraps(func)
        def wrapper(*args, **kwargs):
            self.values[f"count_calls/{func.__name__}"] += 1
            return func(*args, **kwargs)

        return wrapper


def _combine_mean_std(means: List[float], stds: List[float], counts: List[int]) -> Tuple[float, float]:
    """Combines the means and population standard deviations of several groups of samples."""
    total = sum(counts)
    if total == 0:
        return 0.0, 0.0
    means, stds, counts = numpy.array(means), numpy.array(stds), numpy.array(counts)
    mean = float(numpy.sum(counts * means) / total)
    variance = float(numpy.sum(counts * (stds ** 2 + means ** 2)) / total - mean ** 2)
    return mean, float(numpy.sqrt(max(variance, 0.0)))

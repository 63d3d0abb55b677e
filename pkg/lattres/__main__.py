from lattres.configuration import RunConfig, init_config
from lattres.duality import (
    bipartite_lattice,
    dual_ideal,
    dual_ideal_routes,
    facet_ideal_cm_check,
    graft_check,
    intersect_ideal_coideal,
    minimal_primes,
    poset_ideal_dual,
    coideal_dual,
)
from lattres.exceptions import InvalidInput, LatticeError
from lattres.ideals import interior_ideal, lattice_ideal, rank_range_ideal, subfamily_ideal, ideal_intersection
from lattres.io import dumps, read_bipartite, read_complex, read_semilattice, write_json
from lattres.posets import classify
from lattres.resolutions import (
    betti_oracle,
    betti_table_from_complex,
    has_linear_resolution,
    mapping_cone_resolution,
    meet_distributive_differential,
    minimize,
    regularity_bounds,
    taylor_complex,
    verify_resolution,
)
from lattres.suite import CHECKS, run_suite
from json import JSONDecodeError
import json
import argparse
import sys


def _add_kwargs(parser, args, group_name=None, description=None):
    """
    helper function to add a list of keyword arguments to a parser object
    """
    if group_name:
        parser = parser.add_argument_group(group_name, description)
    for sid, lid, action, help_txt, kwargs in args:
        flags = [sid, lid] if sid else [lid]
        if action == "store_true":
            parser.add_argument(*flags, action=action, help=help_txt, **kwargs)
        else:
            parser.add_argument(*flags, action=action, help=help_txt, metavar="", **kwargs)


def _get_kwargs(parsed_args, arg_group):
    """
    helper function to extract a list of (keyword) arguments to a dictionary
    """
    return {arg[1][2:].replace("-", "_"): parsed_args.get(arg[1][2:].replace("-", "_")) for arg in arg_group}


def _icon(value):
    if value is None:
        return "❔"
    return "✅" if value else "❌"


def _emit(run, data, lines):
    """Prints ``data`` as JSON, or the text ``lines`` with booleans shown by status icons."""
    if run.json:
        print(dumps(data))
        return
    for line in lines:
        if isinstance(line, tuple):
            name, value = line
            if isinstance(value, bool) or value is None:
                print(f"{_icon(value)} {name}")
            else:
                print(f"{name}: {value}")
        else:
            print(line)


def _ideal_of(L, ideal=None, coideal=None):
    """``H_L``, ``H_I``, ``H_J`` or ``H_I & H_J`` depending on the given element lists."""
    if ideal is None and coideal is None:
        return lattice_ideal(L)
    parts = [subfamily_ideal(L, labels) for labels in (ideal, coideal) if labels is not None]
    result = parts[0]
    for part in parts[1:]:
        result = ideal_intersection(result, part)
    return result


def _betti_lines(table):
    return [table.to_text(), ("ranks", table.ranks), ("regularity", table.regularity)]


def cmd_check(run, file):
    L = read_semilattice(file)
    classification = classify(L)
    data = {
        **classification.to_dict(),
        "irreducibles": L.labels(L.irreducibles),
        "order": L.labels(L.order),
        "field": run.field_label,
    }
    flags = [name for name in data if name.startswith("is_")]
    lines = [(name[3:].replace("_", " "), data[name]) for name in flags]
    lines += [("join-irreducibles", " ".join(data["irreducibles"])), ("order", " ".join(data["order"]))]
    _emit(run, data, lines)
    return 0


def cmd_resolve(run, file, closed_form=False, minimal=False, verify=False, ideal=None, coideal=None, output=""):
    L = read_semilattice(file)
    target = _ideal_of(L, ideal, coideal)
    if ideal is not None or coideal is not None:
        complex = minimize(taylor_complex(target, run.domain))
    elif closed_form:
        complex = meet_distributive_differential(L, run.domain, run.caps.get("max_basis"))
    else:
        complex = mapping_cone_resolution(L, run.domain, run.caps.get("max_basis"))
    if minimal:
        complex = minimize(complex)

    data = {"resolution": complex.to_dict()}
    lines = [("ranks", complex.ranks)]
    if verify:
        data["verification"] = verify_resolution(complex, target).to_dict()
        lines.append(("verified", True))
    table = betti_table_from_complex(minimize(complex))
    data["betti"] = table.to_dict()["graded"]
    lines += _betti_lines(table)

    if output:
        write_json(data["resolution"], output)
        lines.append(("written to", output))
    _emit(run, data, lines)
    return 0


def cmd_betti(run, file, ideal=None, coideal=None):
    L = read_semilattice(file)
    table = betti_oracle(_ideal_of(L, ideal, coideal), run.domain)
    data = {"betti": table.to_dict(), "ranks": table.ranks, "regularity": table.regularity, "field": run.field_label}
    lines = _betti_lines(table)
    if ideal is None and coideal is None:
        bounds = regularity_bounds(L)
        data["bounds"] = bounds.to_dict()
        lines += [("regularity bound", bounds.upper), ("meet-irredundant value", bounds.exact)]
    _emit(run, data, lines)
    return 0


def cmd_dual(run, file, poset_ideal=None, coideal=None):
    L = read_semilattice(file)
    if poset_ideal is None and coideal is None:
        ideal = lattice_ideal(L)
        routes = dual_ideal_routes(ideal)
        data = {
            "generators": routes.cover.format(),
            "routes_agree": routes.agree,
            "minimal_primes": minimal_primes(ideal),
        }
        lines = [("generators", " ".join(data["generators"])), ("cover == complement == nonface", routes.agree)]
        _emit(run, data, lines)
        return 0 if routes.agree else 1

    if poset_ideal is not None and coideal is not None:
        report = intersect_ideal_coideal(L, poset_ideal, coideal, run.domain)
        formula, bruteforce = report.formula_dual, report.bruteforce_dual
    elif poset_ideal is not None:
        formula = poset_ideal_dual(L, poset_ideal)
        bruteforce = dual_ideal(subfamily_ideal(L, poset_ideal))
    else:
        formula = coideal_dual(L, coideal)
        bruteforce = dual_ideal(subfamily_ideal(L, coideal))
    matches = formula == bruteforce
    data = {"generators": formula.format(), "bruteforce": bruteforce.format(), "formula_matches_bruteforce": matches}
    lines = [("generators", " ".join(data["generators"])), ("formula == bruteforce", matches)]
    _emit(run, data, lines)
    return 0 if matches else 1


def cmd_intersect(run, file, ideal, coideal):
    L = read_semilattice(file)
    report = intersect_ideal_coideal(L, ideal, coideal, run.domain)
    data = report.to_dict()
    lines = [
        ("generators", " ".join(data["generators"])),
        ("ranks", report.betti.ranks),
        ("regularity", report.regularity),
        ("linear resolution", report.linear),
        ("equals H of I & J", report.equals_meet_family),
        ("formula dual == bruteforce dual", report.dual_matches),
        ("rank bounds", report.bounds_hold),
    ]
    _emit(run, data, lines)
    return 0 if report.dual_matches and report.bounds_hold is not False else 1


def cmd_family(run, file, family, *args):
    """Betti table and linearity of the experimental generator families."""
    L = read_semilattice(file)
    ideal = family(L, *args)
    if ideal.is_zero:
        data = {"generators": [], "betti": [], "field": run.field_label}
        _emit(run, data, [("generators", "none")])
        return 0
    table = betti_oracle(ideal, run.domain)
    linear = len(ideal.degrees) == 1 and has_linear_resolution(ideal, run.domain)
    data = {
        "generators": ideal.format(),
        "betti": table.to_dict()["graded"],
        "ranks": table.ranks,
        "regularity": table.regularity,
        "linear": linear,
        "field": run.field_label,
    }
    _emit(run, data, [("generators", " ".join(data["generators"]))] + _betti_lines(table) + [("linear resolution", linear)])
    return 0


def cmd_graft(run, file):
    complex, _, _ = read_complex(file)
    report = graft_check(complex, run.domain)
    data = report.to_dict()
    lines = [("grafted", report.grafted), ("facets of the dual complex are pure", report.pure), ("Cohen-Macaulay", report.cohen_macaulay)]
    _emit(run, data, lines)
    return 0 if report.ok else 1


def cmd_bipartite(run, file):
    result = bipartite_lattice(read_bipartite(file), run.caps.get("max_elements"))
    data = result.to_dict()
    lines = [
        ("matching", " ".join(f"{l}-{r}" for l, r in result.matching.items())),
        ("lattice size", result.lattice.n),
        ("dual of H_L is the edge ideal", result.dual_matches),
    ]
    _emit(run, data, lines)
    return 0 if result.valid else 1


def cmd_cm_check(run, file):
    complex, left, right = read_complex(file)
    if left is None:
        raise InvalidInput(file, "the complex names no vertex classes <left> and <right>")
    report = facet_ideal_cm_check(complex, left, right, run.domain)
    data = report.to_dict()
    lines = [
        ("Cohen-Macaulay", report.cohen_macaulay),
        ("pure", report.pure),
        ("dual of H_I for a poset ideal I", report.from_poset_ideal),
        ("conditions agree", report.consistent),
    ]
    if report.ideal:
        lines.append(("poset ideal", " ".join(report.ideal)))
    _emit(run, data, lines)
    return 0 if report.consistent else 1


def cmd_suite(run, max_elements=None, processes=None, output=None, checks=None, samples=None):
    kwargs = {} if samples is None else {"samples": samples}
    data = run_suite(
        max_elements=max_elements,
        seed=run.seed,
        checks=checks,
        domain=run.domain,
        processes=processes,
        output=output,
        progress=not run.json and sys.stderr.isatty(),
        **kwargs,
    )
    columns = ["check", "population", "passed", "failed", "skipped", "failures"]
    if run.json:
        records = json.loads(data[columns].to_json(orient="records"))
        print(dumps({"field": run.field_label, "checks": records}))
    else:
        for row in data[columns].itertuples(index=False):
            status = _icon(row.failed == 0)
            line = f"{status} {row.check} ({row.population}): {row.passed} passed, {row.failed} failed, {row.skipped} skipped"
            if row.failures:
                line += f", failing {row.failures}"
            print(line)
    return 0 if (data["failed"] == 0).all() else 1


def cli(args):

    parser = argparse.ArgumentParser(
        prog="lattres",
        description="Resolutions, Betti numbers and Alexander duals of the monomial ideals of finite meet-semilattices.",
        usage="%(prog)s [options] command ...",
    )

    subparsers = parser.add_subparsers(help="sub-command help", dest="sub")

    global_arguments = [
        ["-j", "--json", "store_true", "machine readable output", dict()],
        ["-f", "--field", "store", "field of scalars, Q or a prime - str", dict(type=str, default=None)],
        ["-s", "--seed", "store", "seed of the sampled populations - int", dict(type=int, default=None)],
        ["-cb", "--cap-basis", "store", "cap on the size of resolution bases - int", dict(type=int, default=None)],
        ["-wc", "--write-config", "store_true", "write the configuration file to the working directory", dict()],
    ]
    _add_kwargs(parser, global_arguments, "global", "arguments for every command")

    file_argument = dict(type=str, help="input JSON file")
    family_arguments = [
        ["-I", "--ideal", "store", "elements of a poset ideal - verbose list", dict(type=str, nargs="+", default=None)],
        ["-J", "--coideal", "store", "elements of a poset coideal - verbose list", dict(type=str, nargs="+", default=None)],
    ]

    check_parser = subparsers.add_parser("check", help="classify a meet-semilattice")
    check_parser.add_argument("file", **file_argument)

    resolve_parser = subparsers.add_parser("resolve", help="build the resolution of H_L")
    resolve_parser.add_argument("file", **file_argument)
    resolve_arguments = [
        ["-c", "--closed-form", "store_true", "closed-form differential, meet-distributive input only", dict()],
        ["-m", "--minimize", "store_true", "minimize the resolution", dict()],
        ["-v", "--verify", "store_true", "verify exactness of the resolution", dict()],
        ["-o", "--output", "store", "file for the resolution dump", dict(type=str, default="")],
    ]
    _add_kwargs(resolve_parser, resolve_arguments, "resolution", "arguments for the resolution")
    _add_kwargs(resolve_parser, family_arguments, "family", "resolve H_I, H_J or their intersection instead of H_L")

    betti_parser = subparsers.add_parser("betti", help="Betti table and regularity")
    betti_parser.add_argument("file", **file_argument)
    _add_kwargs(betti_parser, family_arguments, "family", "Betti table of H_I, H_J or their intersection instead of H_L")

    dual_parser = subparsers.add_parser("dual", help="Alexander dual of H_L, H_I or H_J")
    dual_parser.add_argument("file", **file_argument)
    dual_arguments = [
        ["-I", "--poset-ideal", "store", "elements of a poset ideal - verbose list", dict(type=str, nargs="+", default=None)],
        ["-J", "--coideal", "store", "elements of a poset coideal - verbose list", dict(type=str, nargs="+", default=None)],
    ]
    _add_kwargs(dual_parser, dual_arguments, "family", "dual of H_I, H_J or their intersection instead of H_L")

    intersect_parser = subparsers.add_parser("intersect", help="intersection of H_I and H_J")
    intersect_parser.add_argument("file", **file_argument)
    intersect_arguments = [
        ["-I", "--ideal", "store", "elements of a poset ideal - verbose list", dict(type=str, nargs="+", required=True)],
        ["-J", "--coideal", "store", "elements of a poset coideal - verbose list", dict(type=str, nargs="+", required=True)],
    ]
    _add_kwargs(intersect_parser, intersect_arguments)

    rank_parser = subparsers.add_parser("rank-range", help="ideal of the elements with rank between r and s")
    rank_parser.add_argument("file", **file_argument)
    rank_parser.add_argument("r", type=int, help="lowest rank")
    rank_parser.add_argument("s", type=int, help="highest rank")

    interior_parser = subparsers.add_parser("interior", help="ideal of the elements other than bottom and top")
    interior_parser.add_argument("file", **file_argument)

    graft_parser = subparsers.add_parser("graft", help="graft a simplicial complex")
    graft_parser.add_argument("file", **file_argument)

    bipartite_parser = subparsers.add_parser("bipartite", help="distributive lattice of a bipartite graph")
    bipartite_parser.add_argument("file", **file_argument)

    cm_parser = subparsers.add_parser("cm-check", help="Cohen-Macaulay test of a facet ideal on two vertex classes")
    cm_parser.add_argument("file", **file_argument)

    suite_parser = subparsers.add_parser("suite", help="run the property suite")
    suite_arguments = [
        ["-k", "--max-elements", "store", "size of the exhaustive population - int", dict(type=int, default=None)],
        ["-n", "--samples", "store", "number of sampled semilattices - int", dict(type=int, default=None)],
        ["-mp", "--processes", "store", "number of processes - int", dict(type=int, default=None)],
        ["-o", "--output", "store", "output file name, (none) for no output", dict(type=str, default=None)],
        ["-ch", "--checks", "store", f"checks to run - verbose list of {', '.join(CHECKS)}", dict(type=str, nargs="+", default=None)],
    ]
    _add_kwargs(suite_parser, suite_arguments, "suite", "arguments for the suite")

    ###

    parsed_args = vars(parser.parse_args(args))
    global_kwargs = _get_kwargs(parsed_args, global_arguments)

    if global_kwargs["write_config"]:
        init_config(write=True)
        print("✅ Configuration written to the working directory.")
    if parsed_args["sub"] is None:
        if not global_kwargs["write_config"]:
            parser.print_help()
        return 0

    try:
        run = RunConfig(
            command=parsed_args["sub"],
            input=parsed_args.get("file"),
            field=global_kwargs["field"],
            json=global_kwargs["json"],
            seed=global_kwargs["seed"],
            caps={"max_basis": global_kwargs["cap_basis"]},
        )
        file = parsed_args.get("file")
        command = parsed_args["sub"]

        if command == "check":
            return cmd_check(run, file)
        elif command == "resolve":
            kwargs = _get_kwargs(parsed_args, resolve_arguments)
            kwargs.update(_get_kwargs(parsed_args, family_arguments))
            if kwargs["closed_form"] and (kwargs["ideal"] is not None or kwargs["coideal"] is not None):
                resolve_parser.error("--closed-form resolves H_L only and cannot be combined with -I/-J")
            kwargs["minimal"] = kwargs.pop("minimize")
            return cmd_resolve(run, file, **kwargs)
        elif command == "betti":
            return cmd_betti(run, file, **_get_kwargs(parsed_args, family_arguments))
        elif command == "dual":
            return cmd_dual(run, file, **_get_kwargs(parsed_args, dual_arguments))
        elif command == "intersect":
            return cmd_intersect(run, file, **_get_kwargs(parsed_args, intersect_arguments))
        elif command == "rank-range":
            return cmd_family(run, file, rank_range_ideal, parsed_args["r"], parsed_args["s"])
        elif command == "interior":
            return cmd_family(run, file, interior_ideal)
        elif command == "graft":
            return cmd_graft(run, file)
        elif command == "bipartite":
            return cmd_bipartite(run, file)
        elif command == "cm-check":
            return cmd_cm_check(run, file)
        elif command == "suite":
            return cmd_suite(run, **_get_kwargs(parsed_args, suite_arguments))
    except JSONDecodeError as error:
        print(f"❌ {parsed_args.get('file')}: invalid JSON at line {error.lineno}, column {error.colno}: {error.msg}", file=sys.stderr)
    except (LatticeError, ValueError, FileNotFoundError, KeyError) as error:
        print(f"❌ {type(error).__name__}: {error}", file=sys.stderr)
    return 1


def main():
    sys.exit(cli(sys.argv[1:]))


if __name__ == "__main__":

    main()

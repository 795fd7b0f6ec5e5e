import functools

import click

from pinpoint.core.config import settings
from pinpoint.core.exceptions import (
    CapExceeded, DisagreementDetected, DuplicateId, NoRepair, NotEntailed, ParseError,
    PinpointError, PreconditionViolated, ResourceLimit, UnsupportedConstruct,
)
from pinpoint.harness import METHODS, Profile, brute_force_justifications, generate_ontology, run_bench
from pinpoint.models import Ontology
from pinpoint.pinpointing import BlackBoxPinpointer, SatPinpointer, optimal_repairs
from pinpoint.reasoner import classify as classify_ontology
from pinpoint.reasoner import module_for_goal, normalize, saturate_with_tracing
from pinpoint.utils import load_ontology, parse_goal, save_ontology, serialize_ontology
from pinpoint.utils.dimacs import formula_to_dimacs, formula_to_gcnf, write_formula

EXIT_CODES = [
    ((ParseError, DuplicateId, UnsupportedConstruct, PreconditionViolated), 2),
    ((NotEntailed, NoRepair), 3),
    ((ResourceLimit, CapExceeded), 4),
    ((DisagreementDetected,), 5),
]


def exit_code_for(error: PinpointError) -> int:
    for types, code in EXIT_CODES:
        if isinstance(error, types):
            return code
    return 1


def handle_errors(command):
    """Report library errors on stderr and exit with their code"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except PinpointError as e:
            click.echo(f"error: {e}", err=True)
            click.get_current_context().exit(exit_code_for(e))
    return wrapper


def join_ids(ids) -> str:
    return ",".join(ids)


def load_query(file: str, goal: str):
    return load_ontology(file), parse_goal(goal)


ontology_file = click.argument("file", type=click.Path(exists=True, dir_okay=False))
goal_option = click.option("--goal", "-g", required=True, help="Goal inclusion, e.g. '(sub A C)'")


@click.group()
def cli():
    """Justification pinpointing commands"""
    pass


@cli.command("classify")
@ontology_file
@handle_errors
def classify(file):
    """Print every entailed inclusion between distinct concept names"""
    for goal in classify_ontology(load_ontology(file)):
        click.echo(str(goal))


@cli.command("core")
@ontology_file
@goal_option
@handle_errors
def core(file, goal):
    """Print the axioms shared by all justifications"""
    o, g = load_query(file, goal)
    click.echo(join_ids(BlackBoxPinpointer().compute_core(o, g)))


@cli.command("just")
@ontology_file
@goal_option
@handle_errors
def just(file, goal):
    """Print one justification"""
    o, g = load_query(file, goal)
    pinpointer = BlackBoxPinpointer()
    c = pinpointer.compute_core(o, g)
    click.echo(join_ids(pinpointer.single_justification(o, g, c)))


@cli.command("union")
@ontology_file
@goal_option
@click.option("--method", "-m", type=click.Choice(list(METHODS)), default="blackbox", show_default=True)
@click.option("--justifications/--no-justifications", default=False, help="Also print the justifications found")
@handle_errors
def union(file, goal, method, justifications):
    """Print the union of all justifications"""
    o, g = load_query(file, goal)
    if method == "musmem":
        result = SatPinpointer().union(o, g)
        found = []
    elif method == "brute":
        result = brute_force_justifications(o, g)
        found = result.justifications
    else:
        result = BlackBoxPinpointer().union_of_all_justifications(o, g)
        found = result.justifications
    click.echo(join_ids(result.union))
    if justifications:
        for j in found:
            click.echo(f"  {{{join_ids(j)}}}")


@cli.command("repairs")
@ontology_file
@goal_option
@handle_errors
def repairs(file, goal):
    """Print the optimal repairs, one per line"""
    o, g = load_query(file, goal)
    for r in optimal_repairs(o, g).repairs:
        click.echo(join_ids(r))


@cli.command("bench")
@click.argument("directory", type=click.Path(exists=True, file_okay=False))
@click.option("--methods", default=",".join(METHODS), show_default=True, help="Comma-separated methods")
@click.option("--out", "out_path", required=True, type=click.Path(dir_okay=False))
@click.option("--timing/--no-timing", default=False, help="Fill the time_ms column")
@click.option("--workers", type=int, default=None, help="Worker threads (defaults to PINPOINT_BENCH_WORKERS)")
@handle_errors
def bench(directory, methods, out_path, timing, workers):
    """Benchmark every method on every entailed atomic inclusion"""
    chosen = [m.strip() for m in methods.split(",") if m.strip()]
    unknown = [m for m in chosen if m not in METHODS]
    if unknown:
        raise click.BadParameter(f"unknown methods: {', '.join(unknown)}", param_hint="--methods")
    run_settings = settings.model_copy(update={"bench_workers": workers}) if workers else settings
    rows = run_bench(directory, chosen, out_path, timing, run_settings)
    click.echo(f"{len(rows)} rows written to {out_path}", err=True)


@cli.command("gen")
@click.option("--seed", type=int, required=True)
@click.option("--size", type=click.IntRange(min=1), required=True)
@click.option("--profile", type=click.Choice([p.value for p in Profile]), default="el", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None, help="Output file (stdout if omitted)")
@handle_errors
def gen(seed, size, profile, out_path):
    """Generate a random ontology"""
    o = generate_ontology(seed, size, Profile(profile))
    if out_path:
        save_ontology(o, out_path)
    else:
        click.echo(serialize_ontology(o))


@cli.command("trace")
@ontology_file
@goal_option
@handle_errors
def trace(file, goal):
    """Dump the saturation trace for an atomic goal"""
    o, g = load_query(file, goal)
    t = saturate_with_tracing(normalize(o), g)
    text = t.dump()
    if text:
        click.echo(text)


@cli.command("dimacs")
@ontology_file
@goal_option
@click.option("--gcnf", is_flag=True, default=False, help="Group CNF for group-MUS tools")
@click.option("--cone/--no-cone", default=True, help="Keep only clauses relevant to the goal")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
@handle_errors
def dimacs(file, goal, gcnf, cone, out_path):
    """Export the pinpointing formula of an atomic goal"""
    o, g = load_query(file, goal)
    f = SatPinpointer().formula(o, g, cone=cone)
    if out_path:
        write_formula(f, out_path, gcnf)
    else:
        click.echo(formula_to_gcnf(f) if gcnf else formula_to_dimacs(f), nl=False)


@cli.command("module")
@ontology_file
@goal_option
@handle_errors
def module(file, goal):
    """Print the locality-based module of the goal signature"""
    o, g = load_query(file, goal)
    m: Ontology = module_for_goal(o, g)
    if len(m):
        click.echo(serialize_ontology(m))


if __name__ == "__main__":
    cli()

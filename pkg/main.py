"""
Inversion Diameter Toolkit - command-line front end
Exact distances and diameters, constructive transformations, certificates and reductions
"""

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any, Callable, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, Progress, TextColumn, TimeElapsedColumn
from rich.table import Table

from certificates.lower_bounds import classify_forest, lower_bound_report
from certificates.upper_bounds import upper_bound_report
from constructions.factory import TransformFactory
from constructions.transformers import AVAILABLE_METHODS
from graphs.generators import FAMILIES, generate
from graphs.io import (
    parse_labeling,
    parse_orientation,
    parse_realisation,
    parse_sequence,
    read_graph,
    read_text,
    serialize_graph,
    serialize_labeling,
    serialize_orientation,
    serialize_realisation,
    write_text,
)
from graphs.model import EdgeLabeling, Graph, Orientation
from graphs.operations import color_classes, labeling_to_orientation_pair
from reductions.chromatic import chromatic_number
from reductions.storage import save_instance
from reductions.subdivision import audit_subdivision, subdivision_instance
from solvers.diameter import inversion_diameter
from solvers.exact import SolveOptions, inversion_distance, min_dimension, realisation_search
from solvers.oracle import bfs_oracle
from solvers.verify import verify_realisation, verify_sequence
from constructions.coloring import is_oriented_coloring
from utils.census_loader import CensusEntry, CensusLoader
from utils.errors import BudgetExhausted, GraphFormatError, InvariantViolation, PreconditionError
from utils.settings import Settings

logger = logging.getLogger("invdiam")

# Logs, progress and status go to stderr; stdout carries only the command payload
err_console = Console(stderr=True)
out_console = Console(highlight=False, soft_wrap=True)

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# hard memory ceiling for the BFS oracle even under --force
ORACLE_FORCE_GUARDS = {"max_edges": 26, "max_vertices": 24}


class CommandResult(BaseModel):
    """Payload lines, machine-readable data and exit code of one command"""

    exit_code: int = Field(default=EXIT_OK, ge=0, le=3)
    lines: list[str] = Field(default_factory=list)
    data: dict[str, Any] = Field(default_factory=dict)
    message: str = ""


# ============================================================================
# INPUT HELPERS
# ============================================================================


def load_orientations(graph: Graph, first: str, second: str) -> tuple[Orientation, Orientation]:
    return parse_orientation(read_text(first), graph), parse_orientation(read_text(second), graph)


def load_coloring(path: str, graph: Graph) -> list[int]:
    """Whitespace-separated colour per vertex."""
    tokens = read_text(path).split()
    try:
        coloring = [int(tok) for tok in tokens]
    except ValueError:
        raise GraphFormatError(f"colouring file {path} must contain integers") from None
    if len(coloring) != graph.n:
        raise GraphFormatError(f"colouring has {len(coloring)} entries, graph has {graph.n} vertices")
    return coloring


def sequence_lines(sequence) -> list[str]:
    return ["SET " + " ".join(str(v) for v in sorted(X)) for X in sequence]


def labeling_lines(labeling: EdgeLabeling) -> list[str]:
    return [f"LABEL {u} {v} {b}" for (u, v), b in zip(labeling.graph.edges, labeling.values())]


def make_progress() -> Progress:
    return Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        TextColumn("{task.completed}/{task.total}"),
        TimeElapsedColumn(),
        console=err_console,
        transient=True,
        disable=not err_console.is_terminal,
    )


# ============================================================================
# COMMANDS
# ============================================================================


def cmd_distance(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Exact inversion distance with a witness sequence"""
    graph = read_graph(args.graph, args.multigraph)
    O1, O2 = load_orientations(graph, args.o1, args.o2)
    opts = SolveOptions(strict=args.strict, time_budget=args.budget if args.budget is not None else settings.budget, max_t=args.max_t)
    result = inversion_distance(O1, O2, opts)

    if not result.reachable:
        return CommandResult(exit_code=EXIT_NO, lines=["UNREACHABLE"], data={"reachable": False}, message="✗ parallel edges disagree partially")
    if result.value is None:
        return CommandResult(
            exit_code=EXIT_NO,
            lines=[f"DISTANCE > {args.max_t}"],
            data={"distance": None, "exceeds": args.max_t},
            message=f"✗ distance exceeds {args.max_t}",
        )
    lines = [f"DISTANCE {result.value}"] + sequence_lines(result.sequence)
    if args.realisation:
        lines += serialize_realisation(result.witness).splitlines()
    data = {"distance": result.value, "sequence": [sorted(X) for X in result.sequence]}
    return CommandResult(lines=lines, data=data, message=f"✓ distance {result.value}")


def cmd_diameter(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Exact inversion diameter by labeling enumeration (or the BFS oracle)"""
    graph = read_graph(args.graph, args.multigraph)

    if args.oracle:
        simple = graph.simple()
        guards = ORACLE_FORCE_GUARDS if args.force else {
            "max_edges": settings.oracle_max_edges,
            "max_vertices": settings.oracle_max_vertices,
        }
        table = bfs_oracle(simple, **guards)
        value = int(table.max())
        labeling = EdgeLabeling(simple, int(table.argmax()))
        lines = [f"DIAMETER {value}"] + labeling_lines(labeling)
        return _diameter_decision(args, value, lines, {"diameter": value, "labeling": labeling.values(), "oracle": True})

    opts = SolveOptions(
        time_budget=args.budget if args.budget is not None else settings.budget,
        parallel_pi_chunks=args.parallel or settings.parallel,
        dominance=not args.no_dominance,
    )
    simple = graph.simple()
    total = sum(1 << simple.induced(c)[0].m for c in simple.components())
    with make_progress() as progress:
        task = progress.add_task("Enumerating labelings", total=total)
        result = inversion_diameter(
            graph,
            opts,
            max_edges=args.max_edges or settings.max_edges,
            force=args.force,
            threshold=args.max_t,
            progress=lambda k: progress.advance(task, k),
        )
    if result.exceeded_threshold:
        lines = [f"DIAMETER > {args.max_t}"] + labeling_lines(result.labeling)
        return CommandResult(
            exit_code=EXIT_NO,
            lines=lines,
            data={"diameter": None, "exceeds": args.max_t, "labeling": result.labeling.values()},
            message=f"✗ diameter exceeds {args.max_t}",
        )
    lines = [f"DIAMETER {result.value}"] + labeling_lines(result.labeling)
    lines += [f"VECTOR {v} {line}" for v, line in enumerate(serialize_realisation(result.witness).splitlines()[1:])]
    data = {"diameter": result.value, "labeling": result.labeling.values(), "labelings_checked": result.labelings_checked}
    return _diameter_decision(args, result.value, lines, data)


def _diameter_decision(args: argparse.Namespace, value: int, lines: list[str], data: dict) -> CommandResult:
    if args.max_t is not None and value > args.max_t:
        return CommandResult(exit_code=EXIT_NO, lines=lines, data=data, message=f"✗ diameter {value} > {args.max_t}")
    return CommandResult(lines=lines, data=data, message=f"✓ diameter {value}")


def cmd_transform(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Constructive transformation by one of the upper-bound engines"""
    graph = read_graph(args.graph, args.multigraph)
    O1, O2 = load_orientations(graph, args.o1, args.o2)
    kwargs = {}
    if args.coloring:
        if args.method != "coloring":
            raise PreconditionError("--coloring only applies to --method coloring")
        kwargs["classes"] = color_classes(load_coloring(args.coloring, graph))
    engine = TransformFactory.create_transformer(args.method, graph=graph, **kwargs)
    outcome = engine.execute(O1, O2)
    if not outcome.success:
        return CommandResult(exit_code=EXIT_NO, lines=[f"METHOD {outcome.method} FAILED"], data={"method": outcome.method}, message=outcome.message)

    lines = [f"METHOD {outcome.method}", f"BOUND {outcome.bound}", f"LENGTH {len(outcome.sequence)}"]
    lines += sequence_lines(outcome.sequence)
    if args.realisation and outcome.realisation is not None:
        lines += serialize_realisation(outcome.realisation).splitlines()
    data = {
        "method": outcome.method,
        "bound": outcome.bound,
        "sequence": [sorted(X) for X in outcome.sequence],
    }
    return CommandResult(lines=lines, data=data, message=outcome.message)


def cmd_gen(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Generate an instance of a registered family"""
    seed = args.seed if args.seed is not None else settings.seed
    instance = generate(args.family, *args.params, seed=seed)
    graph_text = serialize_graph(instance.graph)
    data = {"name": instance.name, "n": instance.graph.n, "m": instance.graph.m}
    if not args.out:
        lines = graph_text.splitlines()
        if instance.labeling is not None:
            lines += serialize_labeling(instance.labeling).splitlines()
        return CommandResult(lines=lines, data=data, message=f"✓ {instance.name}")

    out = Path(args.out)
    written = [out / "graph.el"]
    write_text(written[0], graph_text)
    if instance.labeling is not None:
        O1, O2 = labeling_to_orientation_pair(instance.labeling)
        for name, text in (
            ("labeling.lb", serialize_labeling(instance.labeling)),
            ("O1.or", serialize_orientation(O1)),
            ("O2.or", serialize_orientation(O2)),
        ):
            write_text(out / name, text)
            written.append(out / name)
    data["files"] = [str(p) for p in written]
    return CommandResult(lines=[f"WROTE {p}" for p in written], data=data, message=f"✓ {instance.name} written to {out}")


def cmd_certify(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Certified lower bounds and constructive upper bounds"""
    graph = read_graph(args.graph, args.multigraph)
    lower = lower_bound_report(graph, solver_check=args.solver_check)
    upper = upper_bound_report(graph)
    if lower.best > upper.best:
        raise InvariantViolation(f"lower bound {lower.best} exceeds upper bound {upper.best}", graph)

    lines = lower.lines() + upper.lines()
    forest = classify_forest(graph)
    if forest is not None:
        lines.append(f"FOREST {forest}")
    lines += [f"LOWER {lower.best}", f"UPPER {upper.best}"]
    data = {
        "lower": lower.best,
        "upper": upper.best,
        "lower_rules": [w.rule for w in lower.witnesses],
        "upper_rule": upper.best_rule.rule,
    }
    return CommandResult(lines=lines, data=data, message=f"✓ {lower.best} <= diameter <= {upper.best}")


def cmd_reduce(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Colouring reduction instance on the once-subdivided graph"""
    graph = read_graph(args.graph)
    inst = subdivision_instance(graph, args.k)
    lines = [
        f"SUBDIVIDED {inst.subdivided.n} {inst.subdivided.m}",
        "PI0 " + "".join(map(str, inst.pi0.values())),
    ]
    data: dict[str, Any] = {"k": args.k, "n": inst.subdivided.n, "m": inst.subdivided.m}
    if args.out:
        save_instance(inst, args.out)
        lines.append(f"WROTE {args.out}")
    if not args.audit:
        return CommandResult(lines=lines, data=data, message=f"✓ instance for k={args.k}")

    opts = SolveOptions(time_budget=args.budget if args.budget is not None else settings.budget)
    report = audit_subdivision(
        graph,
        args.k,
        opts,
        max_edges=settings.max_edges,
        chromatic_max_vertices=settings.chromatic_max_vertices,
    )
    yes = {True: "yes", False: "no"}
    lines += [
        f"CHROMATIC {report.chromatic}",
        f"COLOURABLE {yes[report.colourable]}",
        f"DISTANCE_AT_MOST_K {yes[report.distance_at_most_k]}",
        f"DIAMETER_AT_MOST_K {yes[report.diameter_at_most_k]}",
        f"AGREE {yes[report.agree]}",
    ]
    data.update(asdict(report) | {"agree": report.agree})
    code = EXIT_OK if report.agree else EXIT_NO
    return CommandResult(exit_code=code, lines=lines, data=data, message=("✓" if report.agree else "✗") + " equivalence audit")


def cmd_verify(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Check a certificate against its literal definition"""
    needed = {"sequence": 4, "realisation": 3, "oriented-coloring": 3}[args.kind]
    if len(args.files) != needed:
        raise PreconditionError(f"verify {args.kind} expects {needed} files, got {len(args.files)}")
    graph = read_graph(args.files[0], args.multigraph)
    if args.kind == "sequence":
        O1 = parse_orientation(read_text(args.files[1]), graph)
        sequence = parse_sequence(read_text(args.files[2]), graph.n)
        O2 = parse_orientation(read_text(args.files[3]), graph)
        ok = verify_sequence(O1, sequence, O2)
    elif args.kind == "realisation":
        labeling = parse_labeling(read_text(args.files[1]), graph)
        ok = verify_realisation(graph, labeling, parse_realisation(read_text(args.files[2])))
    else:
        orientation = parse_orientation(read_text(args.files[1]), graph)
        ok = is_oriented_coloring(orientation, load_coloring(args.files[2], graph))
    return CommandResult(
        exit_code=EXIT_OK if ok else EXIT_NO,
        lines=["VALID" if ok else "INVALID"],
        data={"valid": ok},
        message=("✓ " if ok else "✗ ") + f"{args.kind} certificate",
    )


def check_entry(entry: CensusEntry, settings: Settings) -> dict[str, tuple[int, Any]]:
    """Recompute every expected quantity of a census entry: key -> (expected, actual)"""
    instance = entry.instance()
    graph, labeling = instance.graph, instance.labeling
    opts = SolveOptions(time_budget=settings.budget)
    compute: dict[str, Callable[[], Any]] = {
        "diameter": lambda: inversion_diameter(graph, opts, max_edges=settings.max_edges).value,
        "lower": lambda: lower_bound_report(graph).best,
        "upper": lambda: upper_bound_report(graph).best,
        "forest_class": lambda: classify_forest(graph),
        "chromatic": lambda: chromatic_number(graph, settings.chromatic_max_vertices),
        "labeling_distance": lambda: min_dimension(graph, labeling, opts).value,
    }
    outcome = {}
    for key, expected in entry.expected.items():
        if key == "labeling_lower":
            infeasible = realisation_search(graph, labeling, expected - 1, opts) is None
            outcome[key] = (expected, expected if infeasible else f"<{expected}")
        elif key in compute:
            outcome[key] = (expected, compute[key]())
        else:
            outcome[key] = (expected, "unknown key")
    return outcome


def cmd_census(args: argparse.Namespace, settings: Settings) -> CommandResult:
    """Regenerate census entries and check their recorded values"""
    loader = CensusLoader(args.path or settings.census_path)
    entries = loader.get_by_tag(args.tag) if args.tag else list(loader.entries)
    if args.id:
        entries = [e for e in entries if e.id in args.id]
    if not entries:
        raise PreconditionError("no census entries selected")

    table = Table(title="Census")
    table.add_column("Entry", style="cyan")
    table.add_column("Quantity")
    table.add_column("Expected", justify="right")
    table.add_column("Actual", justify="right")
    table.add_column("Status", style="bold")

    lines, failures = [], 0
    with make_progress() as progress:
        task = progress.add_task("Checking census", total=len(entries))
        for entry in entries:
            for key, (expected, actual) in check_entry(entry, settings).items():
                ok = actual == expected
                failures += not ok
                table.add_row(entry.id, key, str(expected), str(actual), "✅ PASS" if ok else "❌ FAIL")
                lines.append(f"CENSUS {entry.id} {key} EXPECTED {expected} ACTUAL {actual} {'PASS' if ok else 'FAIL'}")
            progress.advance(task)

    if not args.json:
        out_console.print(table)
    message = f"✓ {len(entries)} entries checked" if not failures else f"✗ {failures} expectation(s) failed"
    return CommandResult(
        exit_code=EXIT_NO if failures else EXIT_OK,
        lines=[] if not args.json else lines,
        data={"entries": len(entries), "failures": failures, "checks": lines},
        message=message,
    )


COMMANDS: dict[str, Callable[[argparse.Namespace, Settings], CommandResult]] = {
    "distance": cmd_distance,
    "diameter": cmd_diameter,
    "transform": cmd_transform,
    "gen": cmd_gen,
    "certify": cmd_certify,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
    "census": cmd_census,
}


# ============================================================================
# ARGUMENT PARSING
# ============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invdiam", description="Inversion distance and diameter toolkit")
    parser.add_argument("--json", action="store_true", help="Print the result as JSON")
    parser.add_argument("--log-level", default=None, help="Override INVDIAM_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="Edge list or graph6 file")
        p.add_argument("--multigraph", action="store_true", help="Keep parallel edges")

    p = sub.add_parser("distance", help="Exact inversion distance between two orientations")
    graph_input(p)
    p.add_argument("o1")
    p.add_argument("o2")
    p.add_argument("--max-t", type=int, default=None, help="Decide distance <= K")
    p.add_argument("--budget", type=float, default=None, help="Wall-clock budget in seconds")
    p.add_argument("--strict", action="store_true", help="Forbid the zero vector")
    p.add_argument("--realisation", action="store_true", help="Also print the realisation")

    p = sub.add_parser("diameter", help="Exact inversion diameter")
    graph_input(p)
    p.add_argument("--max-t", type=int, default=None, help="Decide diameter <= K")
    p.add_argument("--oracle", action="store_true", help="BFS over the inversion graph")
    p.add_argument("--parallel", type=int, default=None, help="Worker processes")
    p.add_argument("--force", action="store_true", help="Ignore size guards")
    p.add_argument("--max-edges", type=int, default=None, help="Per-component edge guard")
    p.add_argument("--budget", type=float, default=None)
    p.add_argument("--no-dominance", action="store_true", help="Enumerate all 2^m labelings")

    p = sub.add_parser("transform", help="Constructive inversion sequence")
    graph_input(p)
    p.add_argument("o1")
    p.add_argument("o2")
    p.add_argument("--method", default="auto", choices=["auto", *AVAILABLE_METHODS])
    p.add_argument("--coloring", default=None, help="Homogeneous colouring file for --method coloring")
    p.add_argument("--realisation", action="store_true")

    p = sub.add_parser("gen", help="Generate a family instance")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None, help="Output directory")

    p = sub.add_parser("certify", help="Lower and upper bound certificates")
    graph_input(p)
    p.add_argument("--solver-check", action="store_true", help="Confirm labeling witnesses with the exact search")

    p = sub.add_parser("reduce", help="Colouring reduction instance")
    p.add_argument("graph")
    p.add_argument("k", type=int)
    p.add_argument("--out", default=None)
    p.add_argument("--audit", action="store_true", help="Check the three-way equivalence")
    p.add_argument("--budget", type=float, default=None)

    p = sub.add_parser("verify", help="Verify a certificate")
    p.add_argument("kind", choices=["sequence", "realisation", "oriented-coloring"])
    p.add_argument("files", nargs="+", help="sequence: G O1 SEQ O2; realisation: G LABELING R; oriented-coloring: G O COLORING")
    p.add_argument("--multigraph", action="store_true")

    p = sub.add_parser("census", help="Check the regression census")
    p.add_argument("--tag", default=None)
    p.add_argument("--id", action="append", default=None)
    p.add_argument("--path", default=None)

    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False, rich_tracebacks=True)],
        force=True,
    )


def run(args: argparse.Namespace, settings: Optional[Settings] = None) -> CommandResult:
    """Run a parsed command; errors become exit codes."""
    try:
        settings = settings or Settings.from_env()
        return COMMANDS[args.command](args, settings)
    except BudgetExhausted as e:
        logger.error(f"Budget exhausted: {e}")
        return CommandResult(exit_code=EXIT_BUDGET, lines=["UNKNOWN budget exhausted"], message=f"✗ {e}")
    except (GraphFormatError, PreconditionError, ValidationError, ValueError) as e:
        logger.error(str(e))
        return CommandResult(exit_code=EXIT_USAGE, message=f"✗ {e}")
    except InvariantViolation as e:
        logger.error(f"Internal invariant violated: {e}")
        return CommandResult(exit_code=EXIT_USAGE, message=f"✗ internal invariant violated: {e}")


def execute(argv: list[str], settings: Optional[Settings] = None) -> CommandResult:
    """Parse ``argv`` and run the command.

    Raises:
        SystemExit: On argparse usage errors (exit code 2)
    """
    return run(build_parser().parse_args(argv), settings)


def main(argv: Optional[list[str]] = None) -> int:
    """Main CLI entry point"""
    load_dotenv()
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env()
        if args.log_level:
            settings = Settings(**(settings.model_dump() | {"log_level": args.log_level}))
    except ValidationError as e:
        err_console.print(f"✗ invalid settings: {e}", markup=False)
        return EXIT_USAGE
    configure_logging(settings.log_level)

    result = run(args, settings)
    if args.json:
        out_console.print_json(json.dumps(result.model_dump(), default=str))
    else:
        for line in result.lines:
            out_console.print(line, markup=False)
    if result.message:
        err_console.print(result.message, markup=False)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

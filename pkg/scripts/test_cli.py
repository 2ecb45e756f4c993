#!/usr/bin/env python3
"""
Command-line tests: every subcommand through execute() on temporary files
"""

import sys
import tempfile
from pathlib import Path

import numpy as np

from harness import CENSUS_PATH, TestResults, random_pair, run_suite, section

from graphs.generators import complete, cycle, generate, path, pendant_cycle
from graphs.io import serialize_graph, serialize_orientation, serialize_sequence
from graphs.model import Graph, InversionSequence, Orientation
from graphs.operations import apply_sequence
from main import EXIT_BUDGET, EXIT_NO, EXIT_OK, EXIT_USAGE, execute
from reductions import load_instance
from solvers.verify import verify_sequence
from utils.census_loader import CensusLoader
from utils.settings import Settings

SETTINGS = Settings()


class Workspace:
    """Temporary directory with helpers for instance files."""

    def __init__(self, root: str):
        self.root = Path(root)

    def file(self, name: str, text: str) -> str:
        target = self.root / name
        target.write_text(text, encoding="utf-8")
        return str(target)

    def graph(self, name: str, graph: Graph) -> str:
        return self.file(name, serialize_graph(graph))

    def orientation(self, name: str, orientation: Orientation) -> str:
        return self.file(name, serialize_orientation(orientation))


def test_distance_command(results: TestResults):
    """distance prints the exact value and a sequence that checks out"""
    section("distance")
    try:
        with tempfile.TemporaryDirectory() as tmp:
            ws = Workspace(tmp)
            g = cycle(4)
            O1 = Orientation.canonical(g)
            O2 = O1.flipped((1 << g.m) - 1)
            gp, o1, o2 = ws.graph("c4.el", g), ws.orientation("o1.or", O1), ws.orientation("o2.or", O2)

            same = execute(["distance", gp, o1, o1], SETTINGS)
            if same.exit_code != EXIT_OK or same.lines != ["DISTANCE 0"]:
                results.add_fail("distance", f"identical orientations: {same.lines}")
                return
            flipped = execute(["distance", gp, o1, o2, "--realisation"], SETTINGS)
            sequence = InversionSequence.from_sets(flipped.data["sequence"])
            if flipped.lines[0] != "DISTANCE 1" or not verify_sequence(O1, sequence, O2):
                results.add_fail("distance", f"reversed orientation: {flipped.lines}")
                return
            capped = execute(["distance", gp, o1, o2, "--max-t", "0"], SETTINGS)
            if capped.exit_code != EXIT_NO or capped.lines != ["DISTANCE > 0"]:
                results.add_fail("distance", f"--max-t 0: {capped.exit_code} {capped.lines}")
                return
        results.add_pass("distance")
    except Exception as e:
        results.add_fail("distance", str(e))


def test_diameter_command(results: TestResults):
    """diameter of K4 is 3 by enumeration and by the oracle"""
    section("diameter")
    try:
        with tempfile.TemporaryDirectory() as tmp:
            gp = Workspace(tmp).graph("k4.el", complete(4))
            for extra in ([], ["--oracle"], ["--no-dominance"]):
                result = execute(["diameter", gp, *extra], SETTINGS)
                if result.exit_code != EXIT_OK or result.lines[0] != "DIAMETER 3":
                    results.add_fail("diameter", f"{extra}: {result.lines[:1]}")
                    return
                if sum(line.startswith("LABEL ") for line in result.lines) != 6:
                    results.add_fail("diameter", f"{extra}: labeling missing")
                    return
            decided = execute(["diameter", gp, "--max-t", "2"], SETTINGS)
            if decided.exit_code != EXIT_NO or decided.lines[0] != "DIAMETER > 2":
                results.add_fail("diameter", f"--max-t 2: {decided.lines[:1]}")
                return
            guarded = execute(["diameter", gp, "--max-edges", "5"], SETTINGS)
            if guarded.exit_code != EXIT_USAGE:
                results.add_fail("diameter", f"edge guard gave exit {guarded.exit_code}")
                return
        results.add_pass("diameter", "enumeration, oracle, decision and guard")
    except Exception as e:
        results.add_fail("diameter", str(e))


def test_transform_command(results: TestResults):
    """transform picks an engine, prints a checked sequence, and reports failures"""
    section("transform")
    try:
        rng = np.random.default_rng(41)
        with tempfile.TemporaryDirectory() as tmp:
            ws = Workspace(tmp)
            tree = generate("random_tree", 9, seed=4).graph
            O1, O2 = random_pair(tree, rng)
            gp, o1, o2 = ws.graph("tree.el", tree), ws.orientation("a.or", O1), ws.orientation("b.or", O2)
            result = execute(["transform", gp, o1, o2], SETTINGS)
            sequence = InversionSequence.from_sets(result.data["sequence"])
            if result.exit_code != EXIT_OK or result.lines[0] != "METHOD forest" or not verify_sequence(O1, sequence, O2):
                results.add_fail("transform", f"tree: {result.lines[:3]}")
                return
            if len(sequence) > result.data["bound"]:
                results.add_fail("transform", f"{len(sequence)} sets above bound {result.data['bound']}")
                return

            c4 = cycle(4)
            P1, P2 = random_pair(c4, rng)
            cp, p1, p2 = ws.graph("c4.el", c4), ws.orientation("p1.or", P1), ws.orientation("p2.or", P2)
            refused = execute(["transform", cp, p1, p2, "--method", "forest"], SETTINGS)
            if refused.exit_code != EXIT_NO or refused.lines != ["METHOD forest FAILED"]:
                results.add_fail("transform", f"forest engine on C4: {refused.exit_code} {refused.lines}")
                return
            misplaced = execute(["transform", cp, p1, p2, "--coloring", ws.file("col.txt", "0 1 0 1\n")], SETTINGS)
            if misplaced.exit_code != EXIT_USAGE:
                results.add_fail("transform", "--coloring accepted without --method coloring")
                return
            try:
                execute(["transform", cp, p1, p2, "--method", "bogus"], SETTINGS)
            except SystemExit as e:
                if e.code != EXIT_USAGE:
                    results.add_fail("transform", f"unknown method exit {e.code}")
                    return
            else:
                results.add_fail("transform", "unknown method accepted")
                return
        results.add_pass("transform")
    except Exception as e:
        results.add_fail("transform", str(e))


def test_gen_then_distance(results: TestResults):
    """gen --out writes an instance the other commands can read"""
    section("gen")
    try:
        with tempfile.TemporaryDirectory() as tmp:
            out = Path(tmp) / "k22"
            result = execute(["gen", "multipartite", "2", "2", "--out", str(out)], SETTINGS)
            names = sorted(Path(p).name for p in result.data.get("files", []))
            if result.exit_code != EXIT_OK or names != ["O1.or", "O2.or", "graph.el", "labeling.lb"]:
                results.add_fail("gen", f"wrote {names}")
                return
            distance = execute(["distance", str(out / "graph.el"), str(out / "O1.or"), str(out / "O2.or")], SETTINGS)
            if distance.lines[0] != "DISTANCE 2":
                results.add_fail("gen", f"multipartite pair: {distance.lines[0]}")
                return
            printed = execute(["gen", "cycle", "5"], SETTINGS)
            if printed.lines[0] != "5" or len(printed.lines) != 6:
                results.add_fail("gen", f"printed cycle: {printed.lines}")
                return
            bad = execute(["gen", "cycle", "five"], SETTINGS)
            if bad.exit_code != EXIT_USAGE:
                results.add_fail("gen", f"non-integer parameter gave exit {bad.exit_code}")
                return
        results.add_pass("gen")
    except Exception as e:
        results.add_fail("gen", str(e))


def test_certify_command(results: TestResults):
    """certify brackets the pendant cycle at 3 and classifies forests"""
    section("certify")
    try:
        with tempfile.TemporaryDirectory() as tmp:
            ws = Workspace(tmp)
            result = execute(["certify", ws.graph("pc8.el", pendant_cycle(8))], SETTINGS)
            if result.exit_code != EXIT_OK or "LOWER 3" not in result.lines or "UPPER 3" not in result.lines:
                results.add_fail("certify", f"pendant cycle: {result.lines[-2:]}")
                return
            forest = execute(["certify", ws.graph("p5.el", path(5))], SETTINGS)
            if "FOREST 2" not in forest.lines or (forest.data["lower"], forest.data["upper"]) != (2, 2):
                results.add_fail("certify", f"path: {forest.lines}")
                return
        results.add_pass("certify")
    except Exception as e:
        results.add_fail("certify", str(e))


def test_reduce_command(results: TestResults):
    """reduce writes a loadable instance and the audit agrees either way"""
    section("reduce")
    try:
        with tempfile.TemporaryDirectory() as tmp:
            ws = Workspace(tmp)
            out = Path(tmp) / "c5"
            c5 = execute(["reduce", ws.graph("c5.el", cycle(5)), "2", "--out", str(out), "--audit"], SETTINGS)
            if c5.exit_code != EXIT_OK or "COLOURABLE yes" not in c5.lines or "AGREE yes" not in c5.lines:
                results.add_fail("reduce", f"C5: {c5.lines}")
                return
            if load_instance(out).k != 2 or c5.lines[0] != "SUBDIVIDED 10 10":
                results.add_fail("reduce", "stored C5 instance")
                return
            k4 = execute(["reduce", ws.graph("k4.el", complete(4)), "2", "--audit"], SETTINGS)
            if k4.exit_code != EXIT_OK or "COLOURABLE no" not in k4.lines or "DISTANCE_AT_MOST_K no" not in k4.lines:
                results.add_fail("reduce", f"K4: {k4.lines}")
                return
            pendant = execute(["reduce", ws.graph("p4.el", path(4)), "2"], SETTINGS)
            if pendant.exit_code != EXIT_USAGE:
                results.add_fail("reduce", f"path accepted with exit {pendant.exit_code}")
                return
        results.add_pass("reduce", "C5 and K4 audits")
    except Exception as e:
        results.add_fail("reduce", str(e))


def test_verify_command(results: TestResults):
    """verify accepts a correct sequence and rejects a wrong target"""
    section("verify")
    try:
        with tempfile.TemporaryDirectory() as tmp:
            ws = Workspace(tmp)
            g = cycle(5)
            O1 = Orientation.canonical(g)
            sequence = InversionSequence.from_sets([[0, 1], [], [2, 3, 4]])
            O2 = apply_sequence(O1, sequence)
            gp, o1, o2 = ws.graph("c5.el", g), ws.orientation("o1.or", O1), ws.orientation("o2.or", O2)
            seq = ws.file("seq.txt", serialize_sequence(sequence))
            valid = execute(["verify", "sequence", gp, o1, seq, o2], SETTINGS)
            invalid = execute(["verify", "sequence", gp, o1, seq, o1], SETTINGS)
            if (valid.exit_code, valid.lines) != (EXIT_OK, ["VALID"]) or (invalid.exit_code, invalid.lines) != (EXIT_NO, ["INVALID"]):
                results.add_fail("verify", f"{valid.lines} / {invalid.lines}")
                return
            short = execute(["verify", "sequence", gp, o1], SETTINGS)
            if short.exit_code != EXIT_USAGE:
                results.add_fail("verify", "missing files accepted")
                return
        results.add_pass("verify")
    except Exception as e:
        results.add_fail("verify", str(e))


def test_bad_input_exit_codes(results: TestResults):
    """Malformed or missing files exit with 2, an exhausted budget with 3"""
    section("Exit codes")
    try:
        with tempfile.TemporaryDirectory() as tmp:
            ws = Workspace(tmp)
            cases = {
                "out of range vertex": ["diameter", ws.file("bad.el", "3\n0 5\n")],
                "missing file": ["certify", str(Path(tmp) / "absent.el")],
                "truncated edge line": ["diameter", ws.file("short.el", "3\n0\n")],
            }
            for name, argv in cases.items():
                result = execute(argv, SETTINGS)
                if result.exit_code != EXIT_USAGE:
                    results.add_fail("Exit codes", f"{name}: exit {result.exit_code}")
                    return
            k44 = ws.graph("k44.el", generate("complete_bipartite", 4, 4).graph)
            budget = execute(["diameter", k44, "--budget", "0"], SETTINGS)
            if budget.exit_code != EXIT_BUDGET or budget.lines != ["UNKNOWN budget exhausted"]:
                results.add_fail("Exit codes", f"budget: exit {budget.exit_code}")
                return
        results.add_pass("Exit codes")
    except Exception as e:
        results.add_fail("Exit codes", str(e))


def test_census_quick(results: TestResults):
    """Every quick census entry reproduces its recorded values"""
    section("census")
    try:
        result = execute(["--json", "census", "--tag", "quick", "--path", str(CENSUS_PATH)], SETTINGS)
        if result.exit_code != EXIT_OK or result.data["failures"]:
            failed = [line for line in result.data.get("checks", []) if line.endswith("FAIL")]
            results.add_fail("census", f"{result.message} {failed}")
            return
        results.add_pass("census", f"{result.data['entries']} entries")
    except Exception as e:
        results.add_fail("census", str(e))


def test_census_loader(results: TestResults):
    """Lookups, statistics and tolerance of broken census files"""
    section("Census loader")
    try:
        loader = CensusLoader(str(CENSUS_PATH))
        stats = loader.get_statistics()
        if stats["total_entries"] != len(loader.entries) or not loader.entries:
            results.add_fail("Census loader", f"statistics {stats}")
            return
        petersen_entry = loader.get_entry("petersen")
        if petersen_entry is None or petersen_entry.instance().graph.m != 15:
            results.add_fail("Census loader", "petersen entry missing or wrong")
            return
        if loader.get_entry("absent") is not None:
            results.add_fail("Census loader", "unknown id resolved")
            return
        cycles = loader.get_by_family("cycle")
        if not cycles or any(e.family != "cycle" for e in cycles) or stats["family_distribution"]["cycle"] != len(cycles):
            results.add_fail("Census loader", f"{len(cycles)} cycle entries")
            return
        with tempfile.TemporaryDirectory() as tmp:
            ws = Workspace(tmp)
            broken = ws.file(
                "census.yaml",
                "entries:\n  - id: nofamily\n    params: [3]\n  - id: c3\n    family: cycle\n    params: [3]\n    expected: {diameter: 2}\n",
            )
            partial = CensusLoader(broken)
            if [e.id for e in partial.entries] != ["c3"]:
                results.add_fail("Census loader", f"broken file loaded {[e.id for e in partial.entries]}")
                return
            if CensusLoader(str(Path(tmp) / "missing.yaml")).entries:
                results.add_fail("Census loader", "missing file produced entries")
                return
            chosen = execute(["census", "--path", broken, "--id", "c3"], SETTINGS)
            if chosen.exit_code != EXIT_OK or chosen.data["entries"] != 1:
                results.add_fail("Census loader", f"--id selection: {chosen.message}")
                return
        results.add_pass("Census loader", f"{stats['total_entries']} entries")
    except Exception as e:
        results.add_fail("Census loader", str(e))


TESTS = [
    test_distance_command,
    test_diameter_command,
    test_transform_command,
    test_gen_then_distance,
    test_certify_command,
    test_reduce_command,
    test_verify_command,
    test_bad_input_exit_codes,
    test_census_quick,
    test_census_loader,
]


def main():
    return run_suite("Command line", TESTS)


if __name__ == "__main__":
    sys.exit(main())

"""
Shared helpers for the test scripts.

Every ``test_*.py`` script runs standalone (``python scripts/test_x.py``)
and under pytest; both paths record outcomes in a TestResults table.
"""

import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

import numpy as np
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from graphs.model import Graph, Orientation

console = Console()

PROJECT_ROOT = Path(__file__).parent.parent
CENSUS_PATH = PROJECT_ROOT / "data" / "census.yaml"


@dataclass
class Outcome:
    name: str
    status: str
    detail: str = ""


STATUS_STYLE = {"pass": "[green]PASS[/green]", "fail": "[red]FAIL[/red]", "skip": "[yellow]SKIP[/yellow]"}


class TestResults:
    """Outcomes of one suite, in run order, plus tallies of what was verified."""

    __test__ = False

    def __init__(self):
        self.outcomes: list[Outcome] = []
        self.verified: Counter[str] = Counter()

    def _with(self, status: str) -> list[Outcome]:
        return [o for o in self.outcomes if o.status == status]

    @property
    def passed(self) -> list[Outcome]:
        return self._with("pass")

    @property
    def failed(self) -> list[Outcome]:
        return self._with("fail")

    @property
    def skipped(self) -> list[Outcome]:
        return self._with("skip")

    def add_pass(self, test_name, notes=""):
        self.outcomes.append(Outcome(test_name, "pass", notes))

    def add_fail(self, test_name, reason, notes=""):
        self.outcomes.append(Outcome(test_name, "fail", f"{reason} ({notes})" if notes else reason))

    def add_skip(self, test_name, reason):
        self.outcomes.append(Outcome(test_name, "skip", reason))

    def tally(self, kind: str, count: int = 1) -> None:
        """Count verified objects (realisations, certificates, audited instances) by kind."""
        self.verified[kind] += count

    def print_summary(self):
        table = Table(title="Checks")
        table.add_column("Check", style="cyan")
        table.add_column("Status")
        table.add_column("Detail", style="dim")
        for outcome in self.outcomes:
            table.add_row(outcome.name, STATUS_STYLE[outcome.status], outcome.detail)
        console.print(table)

        if self.verified:
            tallies = Table(title="Verified")
            tallies.add_column("Kind", style="cyan")
            tallies.add_column("Count", justify="right")
            for kind, count in sorted(self.verified.items()):
                tallies.add_row(kind, str(count))
            console.print(tallies)

        console.print(
            f"\n[bold green]Passed: {len(self.passed)}[/bold green] | "
            f"[bold red]Failed: {len(self.failed)}[/bold red] | "
            f"[bold yellow]Skipped: {len(self.skipped)}[/bold yellow] | "
            f"verified objects: {sum(self.verified.values())}"
        )


def section(title: str) -> None:
    console.print(f"\n[bold cyan]=== {title} ===[/bold cyan]")


def random_orientation(graph: Graph, rng: np.random.Generator) -> Orientation:
    bits = 0
    for eid, b in enumerate(rng.integers(0, 2, size=graph.m).tolist()):
        if b:
            bits |= 1 << eid
    return Orientation(graph, bits)


def random_pair(graph: Graph, rng: np.random.Generator) -> tuple[Orientation, Orientation]:
    return random_orientation(graph, rng), random_orientation(graph, rng)


def run_suite(title: str, tests: Iterable[Callable[[TestResults], None]]) -> int:
    """Run test functions in order, print the summary, return the exit code."""
    console.print(Panel.fit(f"[bold]{title}[/bold]"))
    results = TestResults()
    for test in tests:
        test(results)
    results.print_summary()
    if results.failed:
        console.print("\n[bold red]Some tests failed[/bold red]")
        return 1
    console.print("\n[bold green]All tests passed[/bold green]")
    return 0

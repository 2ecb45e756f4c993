"""Constructive upper bounds, each tagged by the engine that realises it."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from graphs.model import Graph
from graphs.operations import is_forest, is_star_forest
from certificates.density import mad_exact
from constructions.discharging import SPARSE_DIMENSION, SPARSE_MAD_THRESHOLD
from constructions.elimination import independence_number
from constructions.ordering import STRATEGIES, build_ordering
from constructions.subcubic import SUBCUBIC_DIMENSION
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UpperBound:
    rule: str
    bound: int
    engine: str
    detail: str = ""


@dataclass
class UpperBoundReport:
    """Smallest constructive bound over the rules whose hypothesis holds."""

    bounds: list[UpperBound] = field(default_factory=list)

    @property
    def best(self) -> int:
        return min(b.bound for b in self.bounds)

    @property
    def best_rule(self) -> UpperBound:
        return min(self.bounds, key=lambda b: b.bound)

    def lines(self) -> list[str]:
        return [f"RULE {b.rule} BOUND {b.bound} ENGINE {b.engine}" + (f" {b.detail}" if b.detail else "") for b in self.bounds]


def upper_bound_report(graph: Graph) -> UpperBoundReport:
    """Collect every upper bound whose hypothesis ``graph`` satisfies.

    Parallel edges always flip together, so every rule is evaluated on the
    underlying simple graph.
    """
    simple = graph.simple()
    report = UpperBoundReport()
    add = report.bounds.append

    add(UpperBound("order", max(simple.n - 1, 0), "elim"))
    alpha, independent, exact = independence_number(simple)
    add(UpperBound("independence", max(simple.n - alpha, 0), "elim", f"alpha={alpha} exact={exact}"))

    if simple.m == 0:
        add(UpperBound("edgeless", 0, "forest"))
        return report

    if is_forest(simple):
        if is_star_forest(simple):
            add(UpperBound("star-forest", 1, "forest"))
        else:
            add(UpperBound("forest", 2, "forest"))
    if simple.max_degree <= 2:
        add(UpperBound("max-degree-2", 2, "cycle"))

    mad = mad_exact(simple).value
    if mad <= SPARSE_MAD_THRESHOLD:
        add(UpperBound("sparse", SPARSE_DIMENSION, "sparse3", f"mad={mad}"))
    if simple.max_degree <= 3:
        add(UpperBound("subcubic", SUBCUBIC_DIMENSION, "subcubic"))

    for strategy in STRATEGIES:
        try:
            plan = build_ordering(simple, strategy)
        except PreconditionError as e:
            logger.debug(f"ordering {strategy} skipped: {e}")
            continue
        add(UpperBound(f"ordering-{strategy}", plan.t, "greedy"))

    logger.info(f"upper bound {report.best} ({report.best_rule.rule}) from {len(report.bounds)} rule(s)")
    return report

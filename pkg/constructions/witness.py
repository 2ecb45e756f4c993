"""Verification gates every construction passes its output through."""

from __future__ import annotations

import logging

from graphs.model import EdgeLabeling, Graph, InversionSequence, Orientation, Realisation
from solvers.verify import verify_realisation, verify_sequence
from utils.errors import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)


def checked_sequence(O1: Orientation, sequence: InversionSequence, O2: Orientation, engine: str) -> InversionSequence:
    if not verify_sequence(O1, sequence, O2):
        raise InvariantViolation(f"{engine} produced a sequence that does not reach O2", (O1, O2, sequence))
    logger.debug(f"{engine}: verified sequence of length {len(sequence)}")
    return sequence


def checked_realisation(graph: Graph, labeling: EdgeLabeling, realisation: Realisation, engine: str) -> Realisation:
    if not verify_realisation(graph, labeling, realisation):
        raise InvariantViolation(f"{engine} produced vectors that do not realise the labeling", (graph, labeling, realisation))
    logger.debug(f"{engine}: verified realisation of dimension {realisation.dim}")
    return realisation


def require_uniform_parallel_labels(graph: Graph, labeling: EdgeLabeling) -> None:
    """Parallel edges always flip together, so they must carry one label."""
    if not graph.multigraph:
        return
    for u, v in graph.simple().edges:
        labels = {labeling.value(e) for e in graph.edge_ids(u, v)}
        if len(labels) > 1:
            raise PreconditionError(
                f"parallel edges between {u} and {v} carry different labels",
                hypothesis="orientations connected by inversions",
            )


def simple_view(graph: Graph, labeling: EdgeLabeling) -> tuple[Graph, EdgeLabeling]:
    """Underlying simple graph with the (uniform) label of each merged edge."""
    require_uniform_parallel_labels(graph, labeling)
    simple = graph.simple()
    if simple is graph:
        return graph, labeling
    values = [labeling.value(graph.edge_ids(u, v)[0]) for u, v in simple.edges]
    return simple, EdgeLabeling.from_values(simple, values)

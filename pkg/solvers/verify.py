"""Literal-definition checkers for every certificate the toolkit emits."""

from __future__ import annotations

import logging

from graphs.model import EdgeLabeling, Graph, InversionSequence, Orientation, Realisation
from graphs.operations import apply_sequence, realised_labeling
from utils.errors import GraphMismatchError

logger = logging.getLogger(__name__)


def verify_sequence(O1: Orientation, sequence: InversionSequence, O2: Orientation) -> bool:
    """True iff applying ``sequence`` to ``O1`` yields ``O2``."""
    O1.check_same_graph(O2)
    ok = apply_sequence(O1, sequence).bits == O2.bits
    if not ok:
        logger.debug(f"Sequence of length {len(sequence)} does not transform O1 into O2")
    return ok


def verify_realisation(graph: Graph, labeling: EdgeLabeling, realisation: Realisation) -> bool:
    """True iff ``u . v = pi(uv)`` on every edge (and no zero vector when strict is claimed)."""
    labeling.check_same_graph(graph)
    if realisation.n != graph.n:
        raise GraphMismatchError(f"realisation has {realisation.n} vectors, graph has {graph.n} vertices")
    if realisation.strict and realisation.has_zero():
        return False
    ok = realised_labeling(graph, realisation).bits == labeling.bits
    if not ok:
        logger.debug(f"Realisation of dimension {realisation.dim} does not match the labeling")
    return ok

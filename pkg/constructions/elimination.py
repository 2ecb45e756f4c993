"""Vertex elimination: at most ``n - |I|`` inversions for an independent set ``I``."""

from __future__ import annotations

import logging
from typing import Iterable, Optional

import networkx as nx

from graphs.model import Graph, InversionSequence, Orientation
from graphs.operations import disagreement, invert
from constructions.witness import checked_sequence, require_uniform_parallel_labels
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)

EXACT_INDEPENDENCE_MAX_VERTICES = 40


def greedy_independent_set(G: Graph) -> list[int]:
    """Scan vertices by ascending degree, keeping those with no kept neighbour."""
    chosen: list[int] = []
    blocked = 0
    for v in sorted(range(G.n), key=lambda v: (G.degree(v), v)):
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= G.neighbour_masks[v] | (1 << v)
    return sorted(chosen)


def independence_number(G: Graph) -> tuple[int, list[int], bool]:
    """``(alpha, set, exact)``; exact via a maximum clique of the complement for small graphs."""
    if G.n <= EXACT_INDEPENDENCE_MAX_VERTICES:
        complement = nx.complement(G.simple().to_networkx())
        clique, size = nx.max_weight_clique(complement, weight=None)
        return int(size), sorted(clique), True
    chosen = greedy_independent_set(G)
    logger.info(f"independence_number: n={G.n} above exact limit, greedy set of size {len(chosen)}")
    return len(chosen), chosen, False


def elimination_transform(
    G: Graph,
    O1: Orientation,
    O2: Orientation,
    independent: Optional[Iterable[int]] = None,
) -> InversionSequence:
    """Peel the vertices outside an independent set one at a time.

    Each peeled vertex ``v`` is inverted together with its remaining
    neighbours across still-disagreeing edges, after which every edge
    from ``v`` to the rest agrees for good.

    Args:
        G: Any graph
        O1, O2: Orientations of ``G``
        independent: Stop layer; a greedy independent set when omitted

    Raises:
        PreconditionError: If ``independent`` is not independent, or parallel edges disagree partially
    """
    O1.check_same_graph(O2)
    require_uniform_parallel_labels(G, disagreement(O1, O2))
    stop = set(greedy_independent_set(G) if independent is None else independent)
    for v in stop:
        if G.neighbour_masks[v] & sum(1 << w for w in stop):
            raise PreconditionError(f"vertex {v} has a neighbour in the stop layer", hypothesis="independent set")

    current = O1
    alive = set(range(G.n))
    sets: list[frozenset[int]] = []
    for v in range(G.n):
        if v in stop:
            continue
        X = {v}
        for eid in G.incidence[v]:
            w = G.other(eid, v)
            if w in alive and (current.bits ^ O2.bits) >> eid & 1:
                X.add(w)
        alive.discard(v)
        if len(X) > 1:
            current = invert(current, X)
            sets.append(frozenset(X))
    sequence = InversionSequence(tuple(sets))
    logger.debug(f"elimination_transform: {len(sequence)} sets, stop layer of size {len(stop)}")
    return checked_sequence(O1, sequence, O2, "elimination_transform")

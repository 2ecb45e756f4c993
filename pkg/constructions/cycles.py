"""Cycles and graphs of maximum degree two: at most two inversions."""

from __future__ import annotations

import logging

from graphs.model import Graph, InversionSequence, Orientation
from graphs.operations import disagreement, lift_sequence, restrict_pair
from constructions.forests import forest_transform
from constructions.witness import checked_sequence
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


def _cycle_walk(C: Graph) -> tuple[list[int], list[int]]:
    """Vertices ``c_0..c_{n-1}`` from the smallest vertex, and the edge id of ``c_i c_{i+1}``."""
    start = 0
    walk, edges = [start], []
    prev_edge = -1
    current = start
    for _ in range(C.n):
        eid = next(e for e in C.incidence[current] if e != prev_edge)
        nxt = C.other(eid, current)
        edges.append(eid)
        if nxt == start:
            break
        walk.append(nxt)
        prev_edge, current = eid, nxt
    return walk, edges


def _is_cycle(C: Graph) -> bool:
    return (
        not C.multigraph
        and C.n >= 3
        and C.m == C.n
        and all(d == 2 for d in C.degrees)
        and len(C.components()) == 1
    )


def cycle_transform(C: Graph, O1: Orientation, O2: Orientation) -> InversionSequence:
    """Two inversions turning ``O1`` into ``O2`` on a single cycle.

    Raises:
        PreconditionError: If ``C`` is not a cycle
    """
    O1.check_same_graph(O2)
    if not _is_cycle(C):
        raise PreconditionError("graph is not a single cycle", hypothesis="cycle")
    labeling = disagreement(O1, O2)
    if labeling.bits == 0:
        return InversionSequence()
    walk, edges = _cycle_walk(C)
    n = len(walk)
    if all(labeling.value(e) for e in edges):
        return checked_sequence(O1, InversionSequence((frozenset(walk),)), O2, "cycle_transform")

    # edges[i] joins walk[i] and walk[i+1]; edges[i-1] and edges[i] meet at walk[i]
    for i in range(n):
        if not labeling.value(edges[i - 1]) and not labeling.value(edges[i]):
            x = walk[i]
            sub, vmap, P1, P2 = restrict_pair(O1, O2, [v for v in walk if v != x])
            sequence = lift_sequence(forest_transform(sub, P1, P2), vmap)
            logger.debug(f"cycle_transform: two agreeing edges meet at {x}, path reduction")
            return checked_sequence(O1, sequence, O2, "cycle_transform")

    # no two consecutive agreeing edges: start right after one
    s = next(i for i in range(n) if not labeling.value(edges[i - 1]))
    order = walk[s:] + walk[:s]
    order_edges = edges[s:] + edges[:s]
    paths: list[list[int]] = [[order[0]]]
    for i in range(1, n):
        if labeling.value(order_edges[i - 1]):
            paths[-1].append(order[i])
        else:
            paths.append([order[i]])
    odd = [v for k, p in enumerate(paths) if k % 2 == 0 for v in p]
    even = [v for k, p in enumerate(paths) if k % 2 == 1 for v in p]
    if len(paths) % 2 == 1:
        # the closing agreeing edge joins two odd-indexed paths; undo it in the second set
        even += [order[0], order[-1]]
    sequence = InversionSequence((frozenset(odd), frozenset(even))).without_empty()
    logger.debug(f"cycle_transform: {len(paths)} disagreement paths")
    return checked_sequence(O1, sequence, O2, "cycle_transform")


def max_degree_two_transform(G: Graph, O1: Orientation, O2: Orientation) -> InversionSequence:
    """Componentwise path/cycle transforms merged set by set.

    Raises:
        PreconditionError: If ``G`` has a vertex of degree above two or parallel edges
    """
    O1.check_same_graph(O2)
    if G.max_degree > 2:
        raise PreconditionError(f"maximum degree {G.max_degree}", hypothesis="maximum degree at most 2")
    merged: list[set[int]] = [set(), set()]
    for comp in G.components():
        sub, vmap, P1, P2 = restrict_pair(O1, O2, comp)
        if sub.m == 0:
            continue
        if sub.m == sub.n:
            part = cycle_transform(sub, P1, P2)
        else:
            part = forest_transform(sub, P1, P2)
        for i, X in enumerate(lift_sequence(part, vmap)):
            merged[i].update(X)
    sequence = InversionSequence.from_sets(merged).without_empty()
    return checked_sequence(O1, sequence, O2, "max_degree_two_transform")

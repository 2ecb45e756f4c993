"""Balanced and layered orientations."""

from __future__ import annotations

import logging
from typing import Sequence

import networkx as nx

from graphs.model import Graph, Orientation
from graphs.operations import is_proper_coloring
from utils.errors import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)


def min_indegree_orientation(G: Graph) -> Orientation:
    """Orientation with in- and out-degree at least ``floor(d(v) / 2)`` everywhere.

    Odd-degree vertices are joined to one virtual vertex, which makes every
    degree even; orienting each component along an Euler circuit and
    dropping the virtual arcs costs each vertex at most one arc.
    """
    virtual = G.n
    H = nx.MultiGraph()
    H.add_nodes_from(range(G.n + 1))
    for eid, (u, v) in enumerate(G.edges):
        H.add_edge(u, v, key=eid)
    odd = [v for v in range(G.n) if G.degrees[v] % 2]
    for i, v in enumerate(odd):
        H.add_edge(virtual, v, key=-1 - i)

    bits = 0
    for comp in sorted(nx.connected_components(H), key=min):
        sub = H.subgraph(comp)
        if sub.number_of_edges() == 0:
            continue
        for tail, head, eid in nx.eulerian_circuit(sub, source=min(comp), keys=True):
            if eid < 0:
                continue
            # bit set means the edge points from its larger to its smaller endpoint
            if tail > head:
                bits |= 1 << eid
    orientation = Orientation(G, bits)

    ins, outs = orientation.in_degrees(), orientation.out_degrees()
    for v in range(G.n):
        half = G.degrees[v] // 2
        if ins[v] < half or outs[v] < half:
            raise InvariantViolation(f"vertex {v} has in/out degree {ins[v]}/{outs[v]} below {half}", G)
    logger.debug(f"min_indegree_orientation: {len(odd)} odd vertices paired through the virtual vertex")
    return orientation


def layered_orientation(G: Graph, coloring: Sequence[int]) -> Orientation:
    """Every edge points from the smaller colour to the larger one.

    Raises:
        PreconditionError: If ``coloring`` is not proper
    """
    if len(coloring) != G.n or not is_proper_coloring(G, list(coloring)):
        raise PreconditionError("layered orientation needs a proper colouring", hypothesis="proper colouring")
    return Orientation.from_arcs(G, [(u, v) if coloring[u] < coloring[v] else (v, u) for u, v in G.edges])

"""The inversion operation and conversions between sequences, realisations and labelings."""

from __future__ import annotations

import logging
from typing import Iterable

import networkx as nx

from algebra.f2 import dot
from graphs.model import (
    EdgeLabeling,
    Graph,
    InversionSequence,
    Orientation,
    Realisation,
    vertex_mask,
)

logger = logging.getLogger(__name__)


def flip_mask(graph: Graph, vertices: Iterable[int] | int) -> int:
    """Edge mask of the edges with both endpoints in ``vertices`` (a set or a vertex bitmask)."""
    mask = vertices if isinstance(vertices, int) else vertex_mask(vertices, graph.n)
    result = 0
    for eid, em in enumerate(graph.edge_vertex_masks):
        if em & mask == em:
            result |= 1 << eid
    return result


def invert(orientation: Orientation, X: Iterable[int]) -> Orientation:
    """Reverse every arc with both endpoints in ``X``."""
    return orientation.flipped(flip_mask(orientation.graph, X))


def sequence_flip_mask(graph: Graph, sequence: InversionSequence) -> int:
    """Edges contained in an odd number of the sets."""
    result = 0
    for X in sequence:
        result ^= flip_mask(graph, X)
    return result


def apply_sequence(orientation: Orientation, sequence: InversionSequence) -> Orientation:
    sequence.validate(orientation.graph.n)
    return orientation.flipped(sequence_flip_mask(orientation.graph, sequence))


def disagreement(O1: Orientation, O2: Orientation) -> EdgeLabeling:
    """Labeling with 1 exactly on the edges where the orientations differ."""
    O1.check_same_graph(O2)
    return EdgeLabeling(O1.graph, O1.bits ^ O2.bits)


def labeling_to_orientation_pair(labeling: EdgeLabeling) -> tuple[Orientation, Orientation]:
    """Canonical orientation and its flip on the 1-labelled edges."""
    O1 = Orientation.canonical(labeling.graph)
    return O1, O1.flipped(labeling.bits)


def realisation_to_sequence(realisation: Realisation) -> InversionSequence:
    """``X_i`` is the set of vertices whose ``i``-th coordinate is 1."""
    sets = []
    for i in range(realisation.dim):
        sets.append(frozenset(v for v, x in enumerate(realisation.vectors) if x >> i & 1))
    return InversionSequence(tuple(sets))


def sequence_to_realisation(sequence: InversionSequence, n: int) -> Realisation:
    sequence.validate(n)
    vectors = [0] * n
    for i, X in enumerate(sequence):
        for v in X:
            vectors[v] |= 1 << i
    return Realisation(len(sequence), tuple(vectors))


def realised_labeling(graph: Graph, realisation: Realisation) -> EdgeLabeling:
    """The labeling ``uv -> u.v`` induced by a vector assignment."""
    vecs = realisation.vectors
    bits = 0
    for eid, (u, v) in enumerate(graph.edges):
        if dot(vecs[u], vecs[v]):
            bits |= 1 << eid
    return EdgeLabeling(graph, bits)


# ============================================================================
# Structural predicates
# ============================================================================


def is_forest(graph: Graph) -> bool:
    if graph.multigraph and len(set(graph.edge_key())) != graph.m:
        return False
    return nx.is_forest(graph.to_networkx()) if graph.n else True


def is_star_forest(graph: Graph) -> bool:
    """Forest with no edge between two vertices of degree at least 2."""
    if not is_forest(graph):
        return False
    deg = graph.degrees
    return all(deg[u] < 2 or deg[v] < 2 for u, v in graph.edges)


def is_proper_coloring(graph: Graph, coloring: list[int]) -> bool:
    return len(coloring) == graph.n and all(coloring[u] != coloring[v] for u, v in graph.edges)


def color_classes(coloring: list[int]) -> list[list[int]]:
    """Classes ordered by colour value."""
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


# ============================================================================
# Restriction and lifting
# ============================================================================


def restrict_pair(
    O1: Orientation, O2: Orientation, vertices: Iterable[int]
) -> tuple[Graph, list[int], Orientation, Orientation]:
    """Induced subgraph on ``vertices`` with both orientations restricted.

    Returns:
        ``(subgraph, vmap, O1', O2')`` with ``vmap[new] = old``
    """
    O1.check_same_graph(O2)
    sub, vmap, emap = O1.graph.induced(vertices)
    return sub, vmap, O1.restrict(emap, sub), O2.restrict(emap, sub)


def lift_sequence(sequence: InversionSequence, vmap: list[int]) -> InversionSequence:
    """Rename the vertices of a subgraph sequence back to the host graph."""
    return InversionSequence(tuple(frozenset(vmap[v] for v in X) for X in sequence))


def drop_idle_sets(graph: Graph, sequence: InversionSequence) -> InversionSequence:
    """Remove sets that flip no edge."""
    return InversionSequence(tuple(X for X in sequence if flip_mask(graph, X)))

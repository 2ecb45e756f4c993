"""Forests: at most two inversions, one for star forests."""

from __future__ import annotations

import logging

import networkx as nx

from graphs.model import Graph, InversionSequence, Orientation
from graphs.operations import disagreement, is_forest, is_star_forest
from constructions.witness import checked_sequence
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


def forest_transform(F: Graph, O1: Orientation, O2: Orientation) -> InversionSequence:
    """Two inversions turning ``O1`` into ``O2`` on a forest.

    The components of the disagreeing edges are contracted; the agreeing
    edges between them form a forest, and its two colour classes give the
    two sets.

    Raises:
        PreconditionError: If ``F`` has a cycle (parallel edges included)
    """
    O1.check_same_graph(O2)
    if not is_forest(F):
        raise PreconditionError("graph contains a cycle", hypothesis="acyclic")
    labeling = disagreement(O1, O2)
    if labeling.bits == 0:
        return InversionSequence()

    differ = nx.Graph()
    for e in labeling.ones():
        differ.add_edge(*F.edges[e])
    component_of: dict[int, int] = {}
    components = sorted((sorted(c) for c in nx.connected_components(differ)), key=lambda c: c[0])
    for idx, comp in enumerate(components):
        for v in comp:
            component_of[v] = idx

    contracted = nx.Graph()
    contracted.add_nodes_from(range(len(components)))
    for e in labeling.zeros():
        u, v = F.edges[e]
        if u in component_of and v in component_of:
            contracted.add_edge(component_of[u], component_of[v])

    colour = nx.bipartite.color(contracted)
    X1 = frozenset(v for idx, comp in enumerate(components) if colour[idx] == 1 for v in comp)
    X2 = frozenset(v for idx, comp in enumerate(components) if colour[idx] == 0 for v in comp)
    sequence = InversionSequence((X1, X2)).without_empty()
    logger.debug(f"forest_transform: {len(components)} disagreement components -> {len(sequence)} sets")
    return checked_sequence(O1, sequence, O2, "forest_transform")


def star_forest_transform(G: Graph, O1: Orientation, O2: Orientation) -> InversionSequence:
    """One inversion: each star contributes its centre and its disagreeing leaves.

    Raises:
        PreconditionError: If ``G`` is not a star forest
    """
    O1.check_same_graph(O2)
    if not is_star_forest(G):
        raise PreconditionError("graph is not a star forest", hypothesis="star forest")
    labeling = disagreement(O1, O2)
    X: set[int] = set()
    for comp in G.components():
        if len(comp) < 2:
            continue
        centre = max(comp, key=lambda v: (G.degree(v), -v))
        leaves = [G.other(e, centre) for e in G.incidence[centre] if labeling.value(e)]
        if leaves:
            X.add(centre)
            X.update(leaves)
    sequence = InversionSequence((frozenset(X),)).without_empty()
    return checked_sequence(O1, sequence, O2, "star_forest_transform")

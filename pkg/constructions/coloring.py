"""Colouring-based constructions.

A partition is *homogeneous* for a labeling when it is a proper colouring
and the edges between any two classes carry a single label.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Callable, Optional, Sequence

import networkx as nx

from graphs.model import EdgeLabeling, Graph, InversionSequence, Orientation
from graphs.operations import (
    color_classes,
    disagreement,
    invert,
    is_proper_coloring,
    lift_sequence,
    restrict_pair,
)
from constructions.witness import checked_sequence
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)

PairTransformer = Callable[[Graph, Orientation, Orientation], InversionSequence]


def _class_index(n: int, classes: Sequence[Sequence[int]]) -> list[int]:
    index = [-1] * n
    for c, members in enumerate(classes):
        for v in members:
            if not 0 <= v < n:
                raise PreconditionError(f"class {c} contains vertex {v} outside 0..{n - 1}")
            if index[v] >= 0:
                raise PreconditionError(f"vertex {v} lies in classes {index[v]} and {c}", hypothesis="partition")
            index[v] = c
    missing = [v for v in range(n) if index[v] < 0]
    if missing:
        raise PreconditionError(f"vertices {missing} are in no class", hypothesis="partition")
    return index


def mixed_pairs(graph: Graph, labeling: EdgeLabeling, classes: Sequence[Sequence[int]]) -> list[tuple[int, int]]:
    """Class pairs whose edges carry both labels."""
    index = _class_index(graph.n, classes)
    seen: dict[tuple[int, int], set[int]] = {}
    for eid, (u, v) in enumerate(graph.edges):
        a, b = sorted((index[u], index[v]))
        seen.setdefault((a, b), set()).add(labeling.value(eid))
    return sorted(pair for pair, labels in seen.items() if len(labels) > 1)


def is_homogeneous(graph: Graph, labeling: EdgeLabeling, classes: Sequence[Sequence[int]]) -> bool:
    index = _class_index(graph.n, classes)
    return is_proper_coloring(graph, index) and not mixed_pairs(graph, labeling, classes)


def homogeneous_coloring_transform(
    G: Graph, O1: Orientation, O2: Orientation, classes: Sequence[Sequence[int]]
) -> InversionSequence:
    """At most ``k - 1`` inversions from a homogeneous ``k``-colouring.

    The last class is inverted together with every earlier class it still
    disagrees with; afterwards it agrees everywhere and is dropped.

    Raises:
        PreconditionError: If the partition is not a proper colouring or a class pair is mixed
    """
    O1.check_same_graph(O2)
    index = _class_index(G.n, classes)
    if not is_proper_coloring(G, index):
        bad = next((u, v) for u, v in G.edges if index[u] == index[v])
        raise PreconditionError(f"edge {bad} lies inside class {index[bad[0]]}", hypothesis="proper colouring")
    mixed = mixed_pairs(G, disagreement(O1, O2), classes)
    if mixed:
        a, b = mixed[0]
        raise PreconditionError(f"classes {a} and {b} are joined by agreeing and disagreeing edges", hypothesis="homogeneous colouring")

    current = O1
    sets: list[frozenset[int]] = []
    for k in range(len(classes) - 1, 0, -1):
        diff = current.bits ^ O2.bits
        partners = set()
        for v in classes[k]:
            for eid in G.incidence[v]:
                if diff >> eid & 1:
                    partners.add(index[G.other(eid, v)])
        partners = {c for c in partners if c < k}
        if not partners:
            continue
        X = frozenset(classes[k]).union(*(classes[c] for c in partners))
        current = invert(current, X)
        sets.append(X)
    sequence = InversionSequence(tuple(sets))
    logger.debug(f"homogeneous_coloring_transform: {len(classes)} classes -> {len(sequence)} sets")
    return checked_sequence(O1, sequence, O2, "homogeneous_coloring_transform")


def homogeneous_refinement(
    G: Graph, labeling: EdgeLabeling, classes: Optional[Sequence[Sequence[int]]] = None
) -> list[list[int]]:
    """Split a proper colouring until every class pair is homogeneous.

    A mixed pair ``(S, T)`` is resolved by splitting ``S`` by the set of
    ``T``-vertices each member reaches through 1-edges, and ``T`` likewise.
    Starts from a largest-first greedy colouring when ``classes`` is omitted.
    """
    if classes is None:
        colouring = nx.greedy_color(G.simple().to_networkx(), strategy="largest_first")
        classes = color_classes([colouring[v] for v in range(G.n)])
    current = [sorted(c) for c in classes if c]
    if not is_proper_coloring(G, _class_index(G.n, current)):
        raise PreconditionError("starting partition is not a proper colouring", hypothesis="proper colouring")

    one_nbrs = [set() for _ in range(G.n)]
    for e in labeling.ones():
        u, v = G.edges[e]
        one_nbrs[u].add(v)
        one_nbrs[v].add(u)

    rounds = 0
    while True:
        mixed = mixed_pairs(G, labeling, current)
        if not mixed:
            break
        rounds += 1
        a, b = mixed[0]
        S, T = set(current[a]), set(current[b])
        split: list[list[int]] = []
        for members, other in ((current[a], T), (current[b], S)):
            groups: dict[frozenset[int], list[int]] = {}
            for v in members:
                groups.setdefault(frozenset(one_nbrs[v] & other), []).append(v)
            split.extend(sorted(groups.values(), key=lambda g: g[0]))
        current = [c for i, c in enumerate(current) if i not in (a, b)] + split
        current.sort(key=lambda c: c[0])
    logger.debug(f"homogeneous_refinement: {len(current)} classes after {rounds} splits")
    return current


def product_classes(c1: Sequence[int], c2: Sequence[int]) -> list[int]:
    """Common refinement of two colourings, renumbered densely by first occurrence."""
    if len(c1) != len(c2):
        raise PreconditionError("colourings of different lengths")
    dense: dict[tuple[int, int], int] = {}
    return [dense.setdefault((a, b), len(dense)) for a, b in zip(c1, c2)]


def is_oriented_coloring(orientation: Orientation, coloring: Sequence[int]) -> bool:
    """Proper, and all arcs between two classes point the same way."""
    graph = orientation.graph
    if not is_proper_coloring(graph, list(coloring)):
        return False
    direction: dict[tuple[int, int], tuple[int, int]] = {}
    for tail, head in orientation.arcs():
        a, b = coloring[tail], coloring[head]
        key = (min(a, b), max(a, b))
        if direction.setdefault(key, (a, b)) != (a, b):
            return False
    return True


def greedy_oriented_coloring(orientation: Orientation) -> list[int]:
    """Greedy oriented colouring in vertex-id order.

    A vertex may not reuse the colour of a neighbour, nor that of a vertex
    reached through a common neighbour with opposite arc directions, nor a
    colour whose recorded direction with a neighbour's colour it would break.
    A fresh colour is always admissible.

    Raises:
        PreconditionError: If two parallel edges are oriented oppositely
    """
    graph = orientation.graph
    out_nbrs = [set() for _ in range(graph.n)]
    in_nbrs = [set() for _ in range(graph.n)]
    for tail, head in orientation.arcs():
        if tail in out_nbrs[head]:
            raise PreconditionError(f"arcs {tail}->{head} and {head}->{tail} both present", hypothesis="oriented graph")
        out_nbrs[tail].add(head)
        in_nbrs[head].add(tail)

    coloring = [-1] * graph.n
    direction: dict[tuple[int, int], tuple[int, int]] = {}
    colours_used = 0
    for v in range(graph.n):
        forbidden = set()
        for w in out_nbrs[v] | in_nbrs[v]:
            if coloring[w] >= 0:
                forbidden.add(coloring[w])
        for z in out_nbrs[v]:
            forbidden.update(coloring[y] for y in out_nbrs[z] if coloring[y] >= 0)
        for z in in_nbrs[v]:
            forbidden.update(coloring[y] for y in in_nbrs[z] if coloring[y] >= 0)
        chosen = colours_used
        for c in range(colours_used):
            if c in forbidden:
                continue
            ok = all(direction.get(_key(c, coloring[w]), (c, coloring[w])) == (c, coloring[w]) for w in out_nbrs[v] if coloring[w] >= 0)
            ok = ok and all(direction.get(_key(c, coloring[w]), (coloring[w], c)) == (coloring[w], c) for w in in_nbrs[v] if coloring[w] >= 0)
            if ok:
                chosen = c
                break
        coloring[v] = chosen
        colours_used = max(colours_used, chosen + 1)
        for w in out_nbrs[v]:
            if coloring[w] >= 0:
                direction[_key(chosen, coloring[w])] = (chosen, coloring[w])
        for w in in_nbrs[v]:
            if coloring[w] >= 0:
                direction[_key(chosen, coloring[w])] = (coloring[w], chosen)
    return coloring


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def pairwise_combine(
    G: Graph,
    O1: Orientation,
    O2: Orientation,
    coloring: Sequence[int],
    pair_transformer: PairTransformer,
) -> InversionSequence:
    """Concatenate transforms of the subgraphs induced by every pair of colour classes.

    Raises:
        PreconditionError: If ``coloring`` is not proper (failures of
            ``pair_transformer`` propagate unchanged)
    """
    O1.check_same_graph(O2)
    if not is_proper_coloring(G, list(coloring)):
        raise PreconditionError("colouring is not proper", hypothesis="proper colouring")
    classes = color_classes(list(coloring))
    sequence = InversionSequence()
    for a, b in combinations(range(len(classes)), 2):
        sub, vmap, P1, P2 = restrict_pair(O1, O2, classes[a] + classes[b])
        if P1.bits == P2.bits:
            continue
        part = pair_transformer(sub, P1, P2)
        sequence = sequence + lift_sequence(part, vmap)
    logger.debug(f"pairwise_combine: {len(classes)} classes -> {len(sequence)} sets")
    return checked_sequence(O1, sequence, O2, "pairwise_combine")

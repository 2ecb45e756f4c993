"""Brute-force metric of the inversion graph.

Nodes are orientations encoded as edge masks relative to the canonical one;
the moves from any node are the flip masks of all ``2^n`` vertex subsets, so
``d(O1, O2)`` depends only on ``O1 XOR O2`` and a single BFS from the zero mask
gives every distance.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from graphs.model import Graph, Orientation
from utils.errors import SizeGuardError

logger = logging.getLogger(__name__)

ORACLE_MAX_EDGES = 20
ORACLE_MAX_VERTICES = 16
BLOCK_ENTRIES = 1 << 22


def flip_moves(graph: Graph) -> np.ndarray:
    """Distinct nonzero flip masks over all vertex subsets."""
    subsets = np.arange(1 << graph.n, dtype=np.int64)
    masks = np.zeros_like(subsets)
    for eid, (u, v) in enumerate(graph.edges):
        inside = ((subsets >> u) & 1) & ((subsets >> v) & 1)
        masks |= inside << eid
    moves = np.unique(masks)
    return moves[moves != 0]


def bfs_oracle(
    graph: Graph,
    max_edges: int = ORACLE_MAX_EDGES,
    max_vertices: int = ORACLE_MAX_VERTICES,
) -> np.ndarray:
    """Distance table: ``table[O1.bits ^ O2.bits]`` is the inversion distance (-1 if unreachable).

    Raises:
        SizeGuardError: If the graph exceeds the edge or vertex guard
    """
    if graph.m > max_edges:
        raise SizeGuardError("BFS oracle edge count", limit=max_edges, actual=graph.m)
    if graph.n > max_vertices:
        raise SizeGuardError("BFS oracle vertex count", limit=max_vertices, actual=graph.n)

    moves = flip_moves(graph)
    dist = np.full(1 << graph.m, -1, dtype=np.int16)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    block = max(1, BLOCK_ENTRIES // max(len(moves), 1))
    while frontier.size:
        level += 1
        found = []
        for start in range(0, frontier.size, block):
            reached = (frontier[start : start + block, None] ^ moves[None, :]).ravel()
            fresh = np.unique(reached[dist[reached] < 0])
            dist[fresh] = level
            found.append(fresh)
        frontier = np.concatenate(found) if found else np.array([], dtype=np.int64)
    logger.debug(f"bfs_oracle n={graph.n} m={graph.m}: {len(moves)} moves, eccentricity {level - 1}")
    return dist


def bfs_oracle_diameter(graph: Graph, **guards: int) -> int:
    """Largest finite distance in the inversion graph."""
    return int(bfs_oracle(graph, **guards).max())


def oracle_distance(O1: Orientation, O2: Orientation, table: Optional[np.ndarray] = None) -> Optional[int]:
    """Distance between two orientations, ``None`` if no sequence connects them."""
    O1.check_same_graph(O2)
    table = bfs_oracle(O1.graph) if table is None else table
    d = int(table[O1.bits ^ O2.bits])
    return d if d >= 0 else None

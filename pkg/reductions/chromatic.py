"""Exact chromatic number by DSATUR branch and bound."""

from __future__ import annotations

import logging

import networkx as nx

from graphs.model import Graph
from utils.errors import SizeGuardError

logger = logging.getLogger(__name__)

CHROMATIC_MAX_VERTICES = 20


def optimal_coloring(G: Graph, max_vertices: int = CHROMATIC_MAX_VERTICES) -> list[int]:
    """A proper colouring with the fewest colours.

    A maximum clique is precoloured and gives the lower bound; the networkx
    DSATUR colouring gives the first upper bound. Branching picks the
    uncoloured vertex of highest saturation, then degree, then lowest id.

    Raises:
        SizeGuardError: If ``G`` has more than ``max_vertices`` vertices
    """
    if G.n > max_vertices:
        raise SizeGuardError("chromatic number vertex count", limit=max_vertices, actual=G.n)
    if G.n == 0:
        return []
    H = G.simple().to_networkx()
    greedy = nx.greedy_color(H, strategy="DSATUR")
    best = [greedy[v] for v in range(G.n)]
    best_k = max(best) + 1
    clique, _ = nx.max_weight_clique(H, weight=None)
    lower = len(clique)
    if lower == best_k:
        return best

    adj = [sorted(H.neighbors(v)) for v in range(G.n)]
    colour = [-1] * G.n
    for c, v in enumerate(sorted(clique)):
        colour[v] = c
    nodes = 0

    def search(coloured: int, used: int) -> bool:
        nonlocal best, best_k, nodes
        nodes += 1
        if coloured == G.n:
            best, best_k = colour[:], used
            return best_k == lower
        v = max(
            (u for u in range(G.n) if colour[u] < 0),
            key=lambda u: (len({colour[w] for w in adj[u] if colour[w] >= 0}), len(adj[u]), -u),
        )
        forbidden = {colour[w] for w in adj[v]}
        for c in range(used + 1):
            if c in forbidden or max(used, c + 1) >= best_k:
                continue
            colour[v] = c
            if search(coloured + 1, max(used, c + 1)):
                return True
            colour[v] = -1
        return False

    search(lower, lower)
    logger.debug(f"chromatic search: {nodes} nodes, clique {lower}, result {best_k}")
    return best


def chromatic_number(G: Graph, max_vertices: int = CHROMATIC_MAX_VERTICES) -> int:
    coloring = optimal_coloring(G, max_vertices)
    return max(coloring) + 1 if coloring else 0

"""Maximum average degree and degeneracy, in exact arithmetic."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import networkx as nx

from graphs.model import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MadResult:
    """``Mad(G)`` together with a subgraph attaining it."""

    value: Fraction
    subgraph: tuple[int, ...]


@dataclass(frozen=True)
class DegeneracyResult:
    """Degeneracy ``d`` and an ordering in which every vertex has at most ``d`` earlier neighbours."""

    value: int
    ordering: tuple[int, ...]


def _edges_inside(graph: Graph, vertices: set[int]) -> int:
    return sum(1 for u, v in graph.edges if u in vertices and v in vertices)


def _denser_subgraph(graph: Graph, guess: Fraction) -> set[int] | None:
    """A vertex set of edge density above ``guess``, or ``None``.

    Source arcs carry ``q * deg(v)``, sink arcs ``2p`` and each edge ``q`` in
    both directions; a source side ``S`` cuts ``2qm - 2q|E(S)| + 2p|S|``.
    """
    p, q = guess.numerator, guess.denominator
    D = nx.DiGraph()
    D.add_node("s")
    D.add_node("t")
    for v in range(graph.n):
        D.add_edge("s", v, capacity=q * graph.degrees[v])
        D.add_edge(v, "t", capacity=2 * p)
    for u, v in graph.edges:
        for a, b in ((u, v), (v, u)):
            if D.has_edge(a, b):
                D[a][b]["capacity"] += q
            else:
                D.add_edge(a, b, capacity=q)
    cut, (source_side, _) = nx.minimum_cut(D, "s", "t")
    S = set(source_side) - {"s"}
    if cut >= 2 * q * graph.m or not S:
        return None
    return S


def mad_exact(graph: Graph) -> MadResult:
    """Maximum average degree by parametric min-cut over rational density guesses.

    Two distinct densities with denominators at most ``n`` differ by at
    least ``1/n^2``, so the bisection stops once the bracket is narrower.
    """
    if graph.m == 0:
        return MadResult(Fraction(0), tuple(range(min(graph.n, 1))))
    best = set(range(graph.n))
    lo = Fraction(graph.m, graph.n)
    hi = Fraction(graph.m)
    gap = Fraction(1, graph.n * graph.n)
    steps = 0
    while hi - lo >= gap:
        guess = (lo + hi) / 2
        S = _denser_subgraph(graph, guess)
        steps += 1
        if S is None:
            hi = guess
        else:
            best = S
            lo = Fraction(_edges_inside(graph, S), len(S))
    value = 2 * Fraction(_edges_inside(graph, best), len(best))
    logger.debug(f"mad_exact n={graph.n} m={graph.m}: {value} after {steps} cuts")
    return MadResult(value, tuple(sorted(best)))


def mad_lower_bound(graph: Graph) -> int:
    """``ceil(Mad / 2)``; the diameter is an integer at least ``Mad / 2``."""
    return ceil(mad_exact(graph).value / 2)


def degeneracy(graph: Graph) -> DegeneracyResult:
    """Repeated minimum-degree removal; the ordering is the reversed removal order."""
    deg = list(graph.degrees)
    alive = [True] * graph.n
    removal = []
    value = 0
    for _ in range(graph.n):
        v = min((u for u in range(graph.n) if alive[u]), key=lambda u: (deg[u], u))
        value = max(value, deg[v])
        alive[v] = False
        removal.append(v)
        for eid in graph.incidence[v]:
            w = graph.other(eid, v)
            if alive[w]:
                deg[w] -= 1
    return DegeneracyResult(value, tuple(reversed(removal)))

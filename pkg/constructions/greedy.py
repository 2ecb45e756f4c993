"""Greedy vector assignment along a vertex ordering.

Each vertex takes a point of the affine space cut out by its earlier
neighbours, avoiding the span of the already-assigned neighbours of every
later neighbour. This keeps, for every unassigned vertex, the vectors of its
assigned neighbours linearly independent.
"""

from __future__ import annotations

import logging

from algebra.f2 import gray_points, in_span_bits, rank_bits, solve_affine_bits
from graphs.model import EdgeLabeling, Graph, Realisation
from constructions.ordering import VertexOrdering, build_ordering, check_t_strong
from constructions.witness import checked_realisation, require_uniform_parallel_labels
from utils.errors import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)


def greedy_vectors(graph: Graph, labeling: EdgeLabeling, ordering: VertexOrdering, t: int) -> list[int]:
    """Assign vectors of ``F2^t`` in ``ordering``; first admissible point in Gray-code order.

    Raises:
        InvariantViolation: If a step finds dependent constraints or no admissible point
    """
    pos = ordering.position
    vectors = [0] * graph.n
    for u in ordering.perm:
        lower, rhs = [], []
        for w in graph.adjacency[u]:
            if pos[w] < pos[u]:
                lower.append(vectors[w])
                rhs.append(labeling.value(graph.edge_ids(u, w)[0]))
        if rank_bits(lower) != len(lower):
            raise InvariantViolation(f"earlier neighbours of {u} have dependent vectors", (graph, labeling, ordering, t))
        solved = solve_affine_bits(lower, rhs, t)
        if solved is None:
            raise InvariantViolation(f"no vector satisfies the constraints of vertex {u}", (graph, labeling, ordering, t))
        spans = []
        for v in graph.adjacency[u]:
            if pos[v] > pos[u]:
                spans.append([vectors[w] for w in graph.adjacency[v] if pos[w] < pos[u]])
        particular, basis = solved
        choice = next((x for x in gray_points(particular, basis) if not any(in_span_bits(s, x) for s in spans)), None)
        if choice is None:
            raise InvariantViolation(f"every candidate for vertex {u} breaks independence", (graph, labeling, ordering, t))
        vectors[u] = choice
    return vectors


def greedy_realisation(G: Graph, labeling: EdgeLabeling, ordering: VertexOrdering, t: int) -> Realisation:
    """Verified ``t``-dimensional realisation from a t-strong ordering.

    Raises:
        PreconditionError: If ``ordering`` is not t-strong
    """
    labeling.check_same_graph(G)
    require_uniform_parallel_labels(G, labeling)
    report = check_t_strong(G, ordering, t)
    if not report:
        raise PreconditionError(f"ordering is not {t}-strong at vertices {list(report.failing)}", hypothesis="t-strong ordering")
    vectors = greedy_vectors(G, labeling, ordering, t)
    return checked_realisation(G, labeling, Realisation(t, tuple(vectors)), "greedy_realisation")


def extend_labeling(G: Graph, labeling: EdgeLabeling, H: Graph) -> EdgeLabeling:
    """Labeling of a supergraph ``H`` on the same vertices; added edges get 0."""
    values = []
    for u, v in H.edges:
        ids = G.edge_ids(u, v)
        values.append(labeling.value(ids[0]) if ids else 0)
    return EdgeLabeling.from_values(H, values)


def best_greedy_realisation(G: Graph, labeling: EdgeLabeling, strategies=None) -> tuple[Realisation, str]:
    """Greedy realisation along the applicable strategy with the smallest dimension.

    A completed supergraph (tree-decomposition strategy) is realised instead
    of ``G`` and its vectors reused.
    """
    labeling.check_same_graph(G)
    plans = []
    for strategy in strategies or ("identity", "bipartite", "degeneracy", "treedec"):
        try:
            plans.append(build_ordering(G, strategy))
        except PreconditionError as e:
            logger.debug(f"strategy {strategy} skipped: {e}")
    plan = min(plans, key=lambda p: p.t)
    if plan.graph is G:
        realisation = greedy_realisation(G, labeling, plan.ordering, plan.t)
    else:
        require_uniform_parallel_labels(G, labeling)
        realisation = greedy_realisation(plan.graph, extend_labeling(G, labeling, plan.graph), plan.ordering, plan.t)
    logger.info(f"best_greedy_realisation: {plan.strategy} ordering, dimension {plan.t}")
    return checked_realisation(G, labeling, realisation, "best_greedy_realisation"), plan.strategy

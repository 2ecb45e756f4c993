"""Subcubic graphs: good orderings and four-dimensional realisations.

A vertex is *bad* in an ordering when it has two earlier incident 0-edges
and a later incident 1-edge; a *good* ordering has no bad vertex.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from graphs.model import EdgeLabeling, Graph, Realisation
from constructions.greedy import greedy_vectors
from constructions.ordering import VertexOrdering
from constructions.witness import checked_realisation, simple_view
from utils.errors import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)

SUBCUBIC_DIMENSION = 4


def is_good_ordering(G: Graph, labeling: EdgeLabeling, ordering: VertexOrdering) -> bool:
    pos = ordering.position
    for v in range(G.n):
        lower_zero = 0
        upper_one = False
        for eid in G.incidence[v]:
            w = G.other(eid, v)
            if pos[w] < pos[v] and not labeling.value(eid):
                lower_zero += 1
            elif pos[w] > pos[v] and labeling.value(eid):
                upper_one = True
        if lower_zero >= 2 and upper_one:
            return False
    return True


@dataclass
class _LabelledMultigraph:
    """Mutable multigraph with fresh edge ids, keyed by the original vertex ids."""

    vertices: set[int]
    edges: dict[int, tuple[int, int, int]]
    next_id: int = field(default=0)

    @staticmethod
    def from_graph(G: Graph, labeling: EdgeLabeling) -> "_LabelledMultigraph":
        edges = {eid: (u, v, labeling.value(eid)) for eid, (u, v) in enumerate(G.edges)}
        return _LabelledMultigraph(set(range(G.n)), edges, G.m)

    def incident(self, v: int) -> list[tuple[int, int, int]]:
        """``(eid, other endpoint, label)`` for each edge at ``v``, by edge id."""
        return [(eid, b if a == v else a, lab) for eid, (a, b, lab) in sorted(self.edges.items()) if v in (a, b)]

    def degree(self, v: int) -> int:
        return sum(1 for a, b, _ in self.edges.values() if v in (a, b))

    def without(self, removed: set[int], added: list[tuple[int, int]]) -> "_LabelledMultigraph":
        """Copy with ``removed`` deleted and 0-edges ``added``."""
        edges = {eid: e for eid, e in self.edges.items() if e[0] not in removed and e[1] not in removed}
        next_id = self.next_id
        for a, b in added:
            edges[next_id] = (a, b, 0)
            next_id += 1
        return _LabelledMultigraph(self.vertices - removed, edges, next_id)


def _critical_edge(H: _LabelledMultigraph) -> tuple[int, int] | None:
    for eid, (u, v, lab) in sorted(H.edges.items()):
        if lab != 1 or H.degree(u) != 3 or H.degree(v) != 3:
            continue
        others = [e for e in H.incident(u) + H.incident(v) if e[0] != eid]
        if any(w in (u, v) for _, w, _ in others):
            continue
        if all(lab2 == 0 for _, _, lab2 in others):
            return u, v
    return None


def _good_order(H: _LabelledMultigraph) -> list[int]:
    crit = _critical_edge(H)
    if crit is None:
        zero_side = []
        for v in sorted(H.vertices):
            labels = [lab for _, _, lab in H.incident(v)]
            if len(labels) == 3 and sum(labels) == 1:
                zero_side.append(v)
        rest = [v for v in sorted(H.vertices) if v not in set(zero_side)]
        return rest + zero_side

    u, v = crit
    tu = [w for _, w, _ in H.incident(u) if w != v]
    tv = [w for _, w, _ in H.incident(v) if w != u]
    u_double, v_double = tu[0] == tu[1], tv[0] == tv[1]

    if u_double and v_double:
        order = _good_order(H.without({u, v}, [(tu[0], tv[0]), (tu[0], tv[0])]))
        i, j = order.index(tu[0]), order.index(tv[0])
        if i < j:
            return order[: i + 1] + [v, u] + order[i + 1 :]
        return order[: j + 1] + [u, v] + order[j + 1 :]

    for single, double, ts, ws in ((u, v, tu, tv), (v, u, tv, tu)):
        if ws[0] == ws[1] and ws[0] in ts:
            x = ws[0]
            order = _good_order(H.without({u, v, x}, []))
            return order + [single, double, x]

    for single, double, ts, ws in ((u, v, tu, tv), (v, u, tv, tu)):
        if ws[0] == ws[1]:
            w = ws[0]
            order = _good_order(H.without({u, v}, [(ts[0], w), (ts[1], w)]))
            i, j, k = order.index(ts[0]), order.index(ts[1]), order.index(w)
            if i > j:
                i, j = j, i
            if k < j:
                spliced = [single, w, double]
            else:
                spliced = [double, single, w]
            return order[:k] + spliced + order[k + 1 :]

    order = _good_order(H.without({u, v}, [(tu[0], tu[1]), (tv[0], tv[1])]))
    side_u = sorted(tu, key=order.index)
    side_v = sorted(tv, key=order.index)
    a, ta = u, side_u
    b, tb = v, side_v
    if order.index(ta[1]) > order.index(tb[1]):
        a, ta, b, tb = b, tb, a, ta
    j, l = order.index(ta[1]), order.index(tb[1])
    if j < l:
        result = order[:j] + [a] + order[j:l] + [b] + order[l:]
    else:
        result = order[:l] + [a, b] + order[l:]
    return result


def good_ordering(G: Graph, labeling: EdgeLabeling) -> VertexOrdering:
    """A good ordering of a subcubic multigraph, by recursive surgery on critical edges.

    A critical edge is a 1-edge between two degree-3 vertices, without a
    parallel copy, whose other incident edges are all 0-edges. Its endpoints
    are removed, replaced by prescribed 0-edges, and spliced back into the
    ordering of the smaller instance.

    Raises:
        PreconditionError: If a vertex has degree above three
    """
    labeling.check_same_graph(G)
    if G.max_degree > 3:
        raise PreconditionError(f"maximum degree {G.max_degree}", hypothesis="maximum degree at most 3")
    ordering = VertexOrdering(tuple(_good_order(_LabelledMultigraph.from_graph(G, labeling))))
    if not is_good_ordering(G, labeling, ordering):
        raise InvariantViolation("surgery produced an ordering with a bad vertex", (G, labeling))
    return ordering


def subcubic_realisation(G: Graph, labeling: EdgeLabeling) -> Realisation:
    """Four-dimensional realisation for maximum degree at most three.

    Vertices whose remaining edges are all 0-edges are stripped and given the
    zero vector; the rest is assigned greedily along a good ordering.

    Raises:
        PreconditionError: If a vertex has degree above three
    """
    labeling.check_same_graph(G)
    if G.max_degree > 3:
        raise PreconditionError(f"maximum degree {G.max_degree}", hypothesis="maximum degree at most 3")
    S, pi = simple_view(G, labeling)

    alive = set(range(S.n))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if all(not pi.value(e) for e in S.incidence[v] if S.other(e, v) in alive):
                alive.discard(v)
                changed = True

    vectors = [0] * G.n
    if alive:
        core, vmap, emap = S.induced(alive)
        core_pi = pi.restrict(emap, core)
        ordering = good_ordering(core, core_pi)
        for new, x in enumerate(greedy_vectors(core, core_pi, ordering, SUBCUBIC_DIMENSION)):
            vectors[vmap[new]] = x
    logger.debug(f"subcubic_realisation: {G.n - len(alive)} vertices stripped, {len(alive)} ordered")
    return checked_realisation(G, labeling, Realisation(SUBCUBIC_DIMENSION, tuple(vectors)), "subcubic_realisation")

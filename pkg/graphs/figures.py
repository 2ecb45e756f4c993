"""Literal labelled instances used as regression anchors.

Each constant lists ``(u, v, label)`` triples in the order the edges are drawn.
"""

from __future__ import annotations

import logging

from graphs.model import EdgeLabeling, Graph

logger = logging.getLogger(__name__)

# Maximal planar graph on 9 vertices; no 4-dimensional realisation of these labels.
# Vertex 0 is the outer vertex joined to everything else.
PLANAR5_EDGES: tuple[tuple[int, int, int], ...] = (
    (7, 1, 0),
    (1, 2, 1),
    (2, 3, 0),
    (7, 6, 1),
    (6, 1, 0),
    (1, 8, 0),
    (8, 2, 0),
    (2, 4, 0),
    (4, 3, 1),
    (6, 8, 0),
    (8, 4, 0),
    (6, 5, 1),
    (8, 5, 1),
    (4, 5, 0),
    (0, 7, 1),
    (0, 1, 0),
    (0, 2, 0),
    (0, 3, 0),
    (0, 6, 0),  # outer arc, left
    (0, 5, 0),  # outer arc, top
    (0, 4, 0),  # outer arc, right
)
PLANAR5_VERTICES = 9


def fig_planar5() -> tuple[Graph, EdgeLabeling]:
    graph = Graph(PLANAR5_VERTICES, tuple((u, v) for u, v, _ in PLANAR5_EDGES))
    return graph, EdgeLabeling.from_values(graph, [b for _, _, b in PLANAR5_EDGES])


def fig_5regular() -> tuple[Graph, EdgeLabeling]:
    """Two copies of K5 (u0..u4 = 0..4, v0..v4 = 5..9) joined by the matching u_i v_i.

    The labeling is the path pattern on the first K5 (label 1 on u_i u_{i+1})
    extended by zeros; it needs dimension 4.
    """
    edges, labels = [], []
    for i in range(5):
        edges.append((i, 5 + i))
        labels.append(0)
    for side in (0, 5):
        for i in range(5):
            for j in range(i + 1, 5):
                edges.append((side + i, side + j))
                labels.append(1 if side == 0 and j == i + 1 else 0)
    graph = Graph(10, tuple(edges))
    return graph, EdgeLabeling.from_values(graph, labels)


class _LabelledBuilder:
    """Grows a graph vertex by vertex while recording labels."""

    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []
        self.labels: list[int] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int, label: int) -> None:
        self.edges.append((u, v))
        self.labels.append(label)

    def attach(self, graph: Graph, labeling: EdgeLabeling) -> list[int]:
        """Add a disjoint copy; returns the new ids of its vertices."""
        ids = [self.vertex() for _ in range(graph.n)]
        for eid, (u, v) in enumerate(graph.edges):
            self.edge(ids[u], ids[v], labeling.value(eid))
        return ids

    def build(self) -> tuple[Graph, EdgeLabeling]:
        graph = Graph(self.n, tuple(self.edges))
        return graph, EdgeLabeling.from_values(graph, self.labels)


def _gadget_distinct(b: _LabelledBuilder, x: int, y: int) -> None:
    """Forces x != y in dimension 3."""
    p = b.vertex()
    b.edge(x, p, 0)
    b.edge(y, p, 1)


def _gadget_sum(b: _LabelledBuilder, x: int, y: int) -> None:
    """For nonzero x, y in dimension 3, forces x + y != (1,1,1)."""
    u, w, w2 = b.vertex(), b.vertex(), b.vertex()
    b.edge(x, u, 0)
    b.edge(y, u, 0)
    b.edge(x, w, 0)
    b.edge(w, u, 1)
    b.edge(y, w2, 0)
    b.edge(u, w2, 1)


def _gadget_not_all_ones(b: _LabelledBuilder, x: int) -> None:
    """Forces x != (1,1,1) in dimension 3."""
    v, top, w = b.vertex(), b.vertex(), b.vertex()
    b.edge(x, v, 1)
    b.edge(x, top, 0)
    b.edge(x, w, 0)
    b.edge(v, top, 1)
    b.edge(v, w, 0)
    _gadget_sum(b, v, w)


def tw2_gadget() -> tuple[Graph, EdgeLabeling]:
    """Treewidth-2 graph (36 vertices) whose labeling has no 3-dimensional realisation.

    Vertices a, b, c, d are 0..3; the base carries a-b, b-c, c-d labelled 1 and
    the chords a-c, b-d labelled 0.
    """
    b = _LabelledBuilder()
    a, bb, c, d = (b.vertex() for _ in range(4))
    b.edge(a, bb, 1)
    b.edge(bb, c, 1)
    b.edge(c, d, 1)
    b.edge(a, c, 0)
    b.edge(bb, d, 0)
    _gadget_sum(b, a, c)
    _gadget_distinct(b, a, c)
    _gadget_distinct(b, bb, d)
    _gadget_sum(b, bb, d)
    for x in (a, bb, c, d):
        _gadget_not_all_ones(b, x)
    return b.build()


def tw_lower(t: int) -> tuple[Graph, EdgeLabeling]:
    """Treewidth-t graph whose labeling has no (t+1)-dimensional realisation.

    ``t = 2`` is :func:`tw2_gadget`. For larger ``t``: hubs ``v_1..v_t``, a
    vertex ``w_x`` per ``x`` in F2^t with ``pi(v_i w_x) = x_i``, separators
    ``a_{i,x}`` (0 to ``v_i``, 1 to ``w_x``), and under every hub and every
    ``w_x`` a copy of the ``t - 1`` instance joined by 0-edges.
    """
    if t < 2:
        raise ValueError(f"tw_lower requires t >= 2, got {t}")
    if t == 2:
        return tw2_gadget()
    inner_graph, inner_labels = tw_lower(t - 1)
    b = _LabelledBuilder()
    hubs = [b.vertex() for _ in range(t)]
    ws = [b.vertex() for _ in range(1 << t)]
    for x, w in enumerate(ws):
        for i, v in enumerate(hubs):
            b.edge(v, w, x >> i & 1)
    for i, v in enumerate(hubs):
        for x, w in enumerate(ws):
            a = b.vertex()
            b.edge(a, v, 0)
            b.edge(a, w, 1)
    for anchor in hubs + ws:
        for z in b.attach(inner_graph, inner_labels):
            b.edge(anchor, z, 0)
    logger.info(f"tw_lower({t}): {b.n} vertices, {len(b.edges)} edges")
    return b.build()

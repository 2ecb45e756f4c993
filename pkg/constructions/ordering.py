"""Vertex orderings, the t-strong test and the ordering strategies behind the greedy bound."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import ceil, log2
from typing import Literal, Optional, Sequence

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_degree, treewidth_min_fill_in

from graphs.model import Graph
from certificates.density import degeneracy
from utils.errors import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)

Strategy = Literal["identity", "bipartite", "degeneracy", "treedec"]
STRATEGIES: tuple[str, ...] = ("identity", "bipartite", "degeneracy", "treedec")


@dataclass(frozen=True)
class VertexOrdering:
    """A total order on ``0..n-1``; ``perm[i]`` is the ``i``-th vertex."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(v) for v in self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise PreconditionError("ordering is not a permutation of 0..n-1")

    @staticmethod
    def identity(n: int) -> "VertexOrdering":
        return VertexOrdering(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.perm)
        for i, v in enumerate(self.perm):
            pos[v] = i
        return tuple(pos)

    def __iter__(self):
        return iter(self.perm)


@dataclass(frozen=True)
class TreeDecomposition:
    """Tree (or forest) over bag nodes ``0..k-1`` with ``bags[x]`` the vertex set of node ``x``."""

    tree: Graph
    bags: tuple[frozenset[int], ...]
    width: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        if len(self.bags) != self.tree.n:
            raise PreconditionError(f"{len(self.bags)} bags for {self.tree.n} tree nodes")
        width = max((len(b) for b in self.bags), default=0) - 1
        object.__setattr__(self, "width", width)

    @staticmethod
    def from_networkx(decomposition: nx.Graph) -> "TreeDecomposition":
        """Convert a networkx decomposition (nodes are frozenset bags)."""
        nodes = sorted(decomposition.nodes(), key=lambda b: sorted(b))
        index = {b: i for i, b in enumerate(nodes)}
        edges = [(index[a], index[b]) for a, b in decomposition.edges()]
        return TreeDecomposition(Graph(len(nodes), tuple(edges)), tuple(nodes))

    def validate(self, graph: Graph) -> None:
        """Check the three decomposition axioms against ``graph``.

        Raises:
            PreconditionError: On the first violated axiom
        """
        if self.tree.n and not nx.is_forest(self.tree.to_networkx()):
            raise PreconditionError("decomposition tree has a cycle", hypothesis="tree decomposition")
        holders: list[list[int]] = [[] for _ in range(graph.n)]
        for x, bag in enumerate(self.bags):
            for v in bag:
                if not 0 <= v < graph.n:
                    raise PreconditionError(f"bag {x} contains unknown vertex {v}")
                holders[v].append(x)
        for v, nodes in enumerate(holders):
            if not nodes:
                raise PreconditionError(f"vertex {v} lies in no bag", hypothesis="tree decomposition")
            sub, _, _ = self.tree.induced(nodes)
            if len(sub.components()) != 1:
                raise PreconditionError(f"bags containing {v} are not connected", hypothesis="tree decomposition")
        for u, v in graph.edges:
            if not any(u in bag and v in bag for bag in self.bags):
                raise PreconditionError(f"edge ({u}, {v}) lies in no bag", hypothesis="tree decomposition")


@dataclass(frozen=True)
class StrongnessReport:
    """Outcome of the t-strong test with each vertex's slack ``t - cost``."""

    ok: bool
    t: int
    slack: tuple[float, ...]
    failing: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def _maximal(masks: Sequence[int]) -> list[int]:
    distinct = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    return [m for i, m in enumerate(distinct) if not any(m & o == m for o in distinct[:i])]


def _powerset_union_size(masks: Sequence[int]) -> int:
    """``|P(A_1) u ... u P(A_k)|``.

    Inclusion-exclusion peeled one set at a time:
    ``f(A_1, R) = 2^|A_1| + f(R) - f(A_1 & R)``, pruning non-maximal sets.
    """
    sets = _maximal(masks)
    if not sets:
        return 0
    head, rest = sets[0], sets[1:]
    if not rest:
        return 1 << head.bit_count()
    return (1 << head.bit_count()) + _powerset_union_size(rest) - _powerset_union_size([head & m for m in rest])


def check_t_strong(G: Graph, ordering: VertexOrdering, t: int) -> StrongnessReport:
    """Exact test of the t-strong condition.

    A vertex ``u`` with later neighbours needs
    ``|N_<(u)| + log2 |U_u| < t``, where ``U_u`` collects the subsets of
    ``N_{<u}(v)`` over later neighbours ``v``; a vertex without later
    neighbours needs ``|N_<(u)| <= t``. Compared as integers:
    ``2^|N_<(u)| * |U_u| < 2^t``.
    """
    if ordering.n != G.n:
        raise PreconditionError(f"ordering of {ordering.n} vertices for a graph on {G.n}")
    pos = ordering.position
    nbrs = G.neighbour_masks
    before = [0] * G.n
    mask = 0
    for v in ordering.perm:
        before[v] = mask
        mask |= 1 << v

    slack: list[float] = [0.0] * G.n
    failing = []
    for u in range(G.n):
        lower = nbrs[u] & before[u]
        size = lower.bit_count()
        later = [v for v in G.adjacency[u] if pos[v] > pos[u]]
        if not later:
            slack[u] = float(t - size)
            if size > t:
                failing.append(u)
            continue
        union = _powerset_union_size([nbrs[v] & before[u] for v in later])
        cost = size + log2(union)
        slack[u] = t - cost
        if (union << size) >= (1 << t):
            failing.append(u)
    return StrongnessReport(not failing, t, tuple(slack), tuple(failing))


@dataclass(frozen=True)
class OrderingPlan:
    """An ordering with the dimension it guarantees on ``graph``.

    For the tree-decomposition strategy ``graph`` is the input with every
    bag completed to a clique.
    """

    strategy: str
    ordering: VertexOrdering
    t: int
    graph: Graph


def _clog2(x: int) -> int:
    return ceil(log2(x)) if x > 1 else 0


def _bipartition(G: Graph, aux: Optional[Sequence[int]]) -> list[int]:
    if aux is not None:
        side = [int(s) for s in aux]
        if len(side) != G.n or any(side[u] == side[v] for u, v in G.edges):
            raise PreconditionError("supplied 2-colouring is not proper", hypothesis="bipartite")
        return side
    H = G.simple().to_networkx()
    if not nx.is_bipartite(H):
        raise PreconditionError("graph has an odd cycle", hypothesis="bipartite")
    colour = nx.bipartite.color(H)
    return [colour[v] for v in range(G.n)]


def heuristic_tree_decomposition(G: Graph) -> TreeDecomposition:
    """Narrower of the networkx min-degree and min-fill-in decompositions."""
    H = G.simple().to_networkx()
    best = None
    for heuristic in (treewidth_min_fill_in, treewidth_min_degree):
        width, decomposition = heuristic(H)
        if best is None or width < best[0]:
            best = (width, decomposition)
    decomposition = nx.Graph(best[1])
    covered = set().union(*decomposition.nodes()) if decomposition.number_of_nodes() else set()
    anchor = next(iter(decomposition.nodes()), None)
    for v in range(G.n):
        if v not in covered:
            bag = frozenset((v,))
            decomposition.add_node(bag)
            if anchor is not None:
                decomposition.add_edge(anchor, bag)
            anchor = anchor if anchor is not None else bag
    return TreeDecomposition.from_networkx(decomposition)


def _treedec_order(G: Graph, td: TreeDecomposition) -> tuple[list[int], Graph]:
    """Vertices by depth of their topmost bag, and ``G`` with every bag completed."""
    depth = [-1] * td.tree.n
    for root in range(td.tree.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in td.tree.adjacency[x]:
                if depth[y] < 0:
                    depth[y] = depth[x] + 1
                    queue.append(y)
    top: dict[int, tuple[int, int]] = {}
    for x, bag in enumerate(td.bags):
        for v in bag:
            if v not in top or (depth[x], x) < top[v]:
                top[v] = (depth[x], x)
    perm = sorted(range(G.n), key=lambda v: (*top[v], v))

    simple = G.simple()
    present = {(u, v) if u < v else (v, u) for u, v in simple.edges}
    extra = []
    for bag in td.bags:
        for u, v in combinations(sorted(bag), 2):
            if (u, v) not in present:
                present.add((u, v))
                extra.append((u, v))
    completed = Graph(G.n, simple.edges + tuple(extra))
    return perm, completed


def build_ordering(G: Graph, strategy: Strategy = "identity", aux=None) -> OrderingPlan:
    """Ordering for ``strategy`` together with the dimension it is t-strong for.

    Args:
        G: Input graph
        strategy: ``identity`` (``2D - 1``), ``bipartite`` (``D + ceil(log D) - 1``),
            ``degeneracy`` (``2d - 1 + ceil(log D)``) or ``treedec`` (``2 * width``)
        aux: A 2-colouring for ``bipartite`` or a ``TreeDecomposition`` for ``treedec``

    Raises:
        PreconditionError: If the strategy does not apply (non-bipartite input,
            invalid decomposition)
        InvariantViolation: If the ordering fails its advertised t-strong test
    """
    delta = G.simple().max_degree
    graph = G
    if G.n == 0:
        perm, t = [], 0
    elif strategy == "identity":
        perm = list(range(G.n))
        t = 2 * delta - 1 if delta else 0
    elif strategy == "bipartite":
        side = _bipartition(G, aux)
        perm = [v for v in range(G.n) if side[v] == 0] + [v for v in range(G.n) if side[v] != 0]
        t = delta + _clog2(delta) - 1 if delta >= 2 else (2 * delta - 1 if delta else 0)
    elif strategy == "degeneracy":
        result = degeneracy(G.simple())
        perm = list(result.ordering)
        d = result.value
        t = 2 * d - 1 + _clog2(delta) if delta >= 2 else delta
    elif strategy == "treedec":
        td = aux if aux is not None else heuristic_tree_decomposition(G)
        td.validate(G)
        perm, graph = _treedec_order(G, td)
        t = 2 * td.width if G.m else 0
    else:
        raise ValueError(f"Unsupported ordering strategy: {strategy}. Choose one of {', '.join(STRATEGIES)}")

    ordering = VertexOrdering(tuple(perm))
    report = check_t_strong(graph, ordering, t)
    if not report:
        raise InvariantViolation(f"{strategy} ordering is not {t}-strong at vertices {list(report.failing)}", G)
    logger.info(f"build_ordering: {strategy} ordering is {t}-strong (n={G.n}, max degree {delta})")
    return OrderingPlan(strategy, ordering, t, graph)

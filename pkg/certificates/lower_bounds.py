"""Lower-bound certificates.

Each rule produces a witness that can be re-checked on its own: a subgraph, a
cycle, or a labeling that no low-dimensional realisation satisfies. Witnesses
carry a ``basis`` tag: ``argument`` when the bound follows from a counting or
structural argument, ``solver`` once the exact search has confirmed it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import ceil
from typing import Literal, Optional

import networkx as nx

from algebra.f2 import gram_of_vectors
from graphs.generators import complete_multipartite, multipartite_labeling, subdivided_complete
from graphs.model import EdgeLabeling, Graph, Orientation, Realisation
from graphs.operations import is_forest, is_star_forest
from certificates.density import mad_exact
from solvers.exact import realisation_search
from utils.errors import InvariantViolation, PreconditionError, SizeGuardError

logger = logging.getLogger(__name__)

PIGEONHOLE_MAX_CLIQUE = 12
EXACT_CLIQUE_MAX_VERTICES = 40
SOLVER_CHECK_MAX_EDGES = 24

Basis = Literal["argument", "solver"]


# ============================================================================
# Witness records
# ============================================================================


@dataclass(frozen=True)
class LowerBoundWitness:
    """One certified lower bound."""

    rule: str
    bound: int
    vertices: tuple[int, ...] = ()
    labeling: Optional[EdgeLabeling] = None
    basis: Basis = "argument"

    def describe(self) -> str:
        parts = []
        if self.vertices:
            parts.append("vertices=" + ",".join(map(str, self.vertices)))
        if self.labeling is not None:
            parts.append("labeling=" + "".join(map(str, self.labeling.values())))
        parts.append(f"basis={self.basis}")
        return " ".join(parts)


@dataclass
class LowerBoundReport:
    """Best lower bound over all witnesses that apply."""

    witnesses: list[LowerBoundWitness] = field(default_factory=list)

    @property
    def best(self) -> int:
        return max((w.bound for w in self.witnesses), default=0)

    def add(self, witness: Optional[LowerBoundWitness]) -> None:
        if witness is not None:
            self.witnesses.append(witness)

    def lines(self) -> list[str]:
        """Machine-readable ``RULE name BOUND k WITNESS ...`` lines."""
        return [f"RULE {w.rule} BOUND {w.bound} WITNESS {w.describe()}" for w in self.witnesses]


@dataclass(frozen=True)
class EvenCycleCertificate:
    """Even cycle through vertices of degree at least 3 and its hard labeling."""

    cycle: tuple[int, ...]
    labeling: EdgeLabeling
    bound: int = 3


@dataclass(frozen=True)
class MultipartiteCertificate:
    r: int
    t: int
    graph: Graph
    labeling: EdgeLabeling

    @property
    def bound(self) -> int:
        return (self.r - 1) * self.t


@dataclass(frozen=True)
class PigeonholeCertificate:
    """Once-subdivided clique with two orientations at distance at least ``bound``."""

    graph: Graph
    O1: Orientation
    O2: Orientation
    bound: int
    originals: int


# ============================================================================
# Forests and distance one
# ============================================================================


def classify_forest(graph: Graph) -> Optional[int]:
    """Exact diameter of a forest: 0 edgeless, 1 star forest, 2 otherwise; ``None`` if not a forest."""
    simple = graph.simple()
    if not is_forest(simple):
        return None
    if simple.m == 0:
        return 0
    return 1 if is_star_forest(simple) else 2


def not_star_forest_witness(graph: Graph) -> Optional[tuple[int, ...]]:
    """A path on four vertices or a triangle, present exactly when the graph is not a star forest."""
    simple = graph.simple()
    adj = simple.adjacency
    for b, c in simple.edges:
        for a in adj[b]:
            if a == c:
                continue
            for d in adj[c]:
                if d not in (a, b):
                    return (a, b, c, d)
    for b, c in simple.edges:
        common = set(adj[b]) & set(adj[c])
        if common:
            return (b, c, min(common))
    return None


# ============================================================================
# Even cycles through vertices of degree >= 3
# ============================================================================


def _maximal_path_cycle(core: nx.Graph) -> list[int]:
    """Even cycle in a graph of minimum degree 3 from a non-extendable path.

    ``y`` ends the path and has two neighbours ``a < b`` on it besides its
    predecessor. The cycles ``P[a..b] + y``, ``P[b..y]`` and ``P[a..y]`` satisfy
    ``|C1| + |C2| = |C3| + 2``, so one of them is even.
    """
    start = min(core.nodes)
    path = [start]
    on_path = {start}
    while True:
        y = path[-1]
        fresh = sorted(w for w in core.neighbors(y) if w not in on_path)
        if not fresh:
            break
        path.append(fresh[0])
        on_path.add(fresh[0])
    position = {v: i for i, v in enumerate(path)}
    last = len(path) - 1
    y = path[last]
    back = sorted(position[w] for w in core.neighbors(y) if position[w] < last - 1)
    if len(back) < 2:
        raise InvariantViolation("maximal path end has fewer than three neighbours on the path", sorted(core.nodes))
    a, b = back[-2], back[-1]
    candidates = [path[a : b + 1] + [y], path[b:], path[a:]]
    for cycle in candidates:
        if len(cycle) % 2 == 0:
            return cycle
    raise InvariantViolation("no even cycle among the three path cycles", sorted(core.nodes))


def _walk_cycle(edges: set[tuple[int, int]]) -> list[int]:
    """Vertex order of a single cycle given by its edge set."""
    nbrs: dict[int, list[int]] = {}
    for u, v in edges:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    start = min(nbrs)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = next(w for w in sorted(nbrs[cur]) if w != prev)
        if nxt == start:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != len(edges):
        raise InvariantViolation("symmetric difference of two cycles is not a cycle", sorted(edges))
    return order


def _dfs_even_cycle(H: nx.Graph) -> Optional[list[int]]:
    """Even cycle search over DFS fundamental cycles.

    A graph with no even cycle has pairwise edge-disjoint odd fundamental
    cycles; two odd ones sharing a tree path add up to an even cycle.
    """
    parent: dict[int, Optional[int]] = {}
    depth: dict[int, int] = {}
    seen_cycles: list[set[tuple[int, int]]] = []

    def key(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    for root in sorted(H.nodes):
        if root in parent:
            continue
        parent[root], depth[root] = None, 0
        stack = [(root, iter(sorted(H.neighbors(root))))]
        while stack:
            u, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                continue
            if w not in parent:
                parent[w], depth[w] = u, depth[u] + 1
                stack.append((w, iter(sorted(H.neighbors(w)))))
                continue
            if w == parent[u] or depth[w] >= depth[u]:
                continue
            # back edge u -> ancestor w
            cycle = [u]
            while cycle[-1] != w:
                cycle.append(parent[cycle[-1]])
            if len(cycle) % 2 == 0:
                return cycle
            edges = {key(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])}
            for other in seen_cycles:
                if edges & other:
                    return _walk_cycle(edges ^ other)
            seen_cycles.append(edges)
    return None


def even_cycle_labeling(graph: Graph, cycle: tuple[int, ...]) -> EdgeLabeling:
    """0 on the cycle except its closing edge, 1 everywhere else."""
    path_pairs = {(a, b) if a < b else (b, a) for a, b in zip(cycle, cycle[1:])}
    values = []
    for u, v in graph.edges:
        values.append(0 if ((u, v) if u < v else (v, u)) in path_pairs else 1)
    return EdgeLabeling.from_values(graph, values)


def even_cycle_deg3_bound(graph: Graph) -> Optional[EvenCycleCertificate]:
    """Diameter >= 3 from an even cycle whose vertices all have degree >= 3."""
    simple = graph.simple()
    heavy = [v for v in range(simple.n) if simple.degrees[v] >= 3]
    H = simple.to_networkx().subgraph(heavy).copy()
    core = nx.k_core(H, 3) if H.number_of_edges() else nx.Graph()
    if core.number_of_nodes():
        cycle = _maximal_path_cycle(core)
        logger.debug(f"even cycle of length {len(cycle)} from a maximal path in the 3-core")
    else:
        cycle = _dfs_even_cycle(H)
        if cycle is None:
            return None
        logger.debug(f"even cycle of length {len(cycle)} from the DFS search")
    cycle_t = tuple(cycle)
    return EvenCycleCertificate(cycle_t, even_cycle_labeling(graph, cycle_t))


def check_even_cycle(graph: Graph, certificate: EvenCycleCertificate) -> bool:
    """Even length, consecutive vertices adjacent, every vertex of degree >= 3."""
    simple = graph.simple()
    cycle = certificate.cycle
    if len(cycle) < 4 or len(cycle) % 2 or len(set(cycle)) != len(cycle):
        return False
    if any(not simple.has_edge(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1])):
        return False
    return all(simple.degrees[v] >= 3 for v in cycle)


# ============================================================================
# Multipartite, clique and pigeonhole constructions
# ============================================================================


def multipartite_hard_labeling(r: int, t: int) -> MultipartiteCertificate:
    """Labeling of ``K_r[K̄_t]`` needing dimension ``(r - 1) t``."""
    if r < 1 or t < 1:
        raise PreconditionError(f"multipartite needs r, t >= 1, got ({r}, {t})", hypothesis="r, t >= 1")
    graph = complete_multipartite(r, t)
    return MultipartiteCertificate(r, t, graph, multipartite_labeling(graph, r, t))


def multipartite_rank(certificate: MultipartiteCertificate, realisation: Realisation) -> int:
    """Rank of the Gram matrix of a realisation of the multipartite labeling.

    Raises:
        InvariantViolation: If the rank falls below ``(r - 1) t``
    """
    rank = gram_of_vectors(realisation.vectors, realisation.dim).rank()
    if rank < certificate.bound:
        raise InvariantViolation(
            f"Gram rank {rank} below {certificate.bound} for K_{certificate.r}[{certificate.t}]",
            (certificate, realisation),
        )
    return rank


def largest_clique(graph: Graph) -> list[int]:
    """Maximum clique for small graphs, a greedy clique beyond."""
    G = graph.simple().to_networkx()
    if graph.n == 0:
        return []
    if graph.n <= EXACT_CLIQUE_MAX_VERTICES:
        clique, _ = nx.max_weight_clique(G, weight=None)
        return sorted(clique)
    clique: list[int] = []
    for v in sorted(G.nodes, key=lambda v: (-G.degree(v), v)):
        if all(G.has_edge(v, c) for c in clique):
            clique.append(v)
    return sorted(clique)


def clique_labeling(graph: Graph, clique: list[int]) -> EdgeLabeling:
    """Path pattern on the clique, 0 elsewhere."""
    position = {v: i for i, v in enumerate(clique)}
    values = []
    for u, v in graph.edges:
        inside = u in position and v in position
        values.append(1 if inside and abs(position[u] - position[v]) == 1 else 0)
    return EdgeLabeling.from_values(graph, values)


def pigeonhole_bound(ell: int) -> PigeonholeCertificate:
    """Subdivided ``K_{2^(ell-1)+1}``: in-degree 1 against in-degree 2 at every subdivision vertex.

    Raises:
        SizeGuardError: If the clique would exceed ``PIGEONHOLE_MAX_CLIQUE`` vertices
    """
    if ell < 1:
        raise PreconditionError(f"pigeonhole bound needs ell >= 1, got {ell}", hypothesis="ell >= 1")
    N = (1 << (ell - 1)) + 1
    if N > PIGEONHOLE_MAX_CLIQUE:
        raise SizeGuardError("pigeonhole clique order", limit=PIGEONHOLE_MAX_CLIQUE, actual=N)
    graph = subdivided_complete(N)
    # subdivision vertices carry the largest ids, so the canonical orientation points into them
    O2 = Orientation.canonical(graph)
    bits = 0
    for eid in range(1, graph.m, 2):
        bits |= 1 << eid
    O1 = Orientation(graph, bits)
    return PigeonholeCertificate(graph, O1, O2, ell, N)


# ============================================================================
# Report
# ============================================================================


def _solver_confirms(graph: Graph, labeling: EdgeLabeling, bound: int) -> bool:
    return realisation_search(graph, labeling, bound - 1) is None


def lower_bound_report(graph: Graph, solver_check: bool = False) -> LowerBoundReport:
    """Every lower bound the toolkit can certify for ``graph``.

    Args:
        graph: Input graph
        solver_check: Confirm labeling witnesses with the exact search when the graph is small
    """
    report = LowerBoundReport()
    simple = graph.simple()
    if simple.m == 0:
        return report

    u, v = simple.edges[0]
    report.add(LowerBoundWitness("edge", 1, (u, v)))

    obstruction = not_star_forest_witness(simple)
    if obstruction is not None:
        report.add(LowerBoundWitness("p4-or-triangle", 2, obstruction))

    clique = largest_clique(simple)
    if len(clique) >= 3:
        report.add(LowerBoundWitness("clique", len(clique) - 1, tuple(clique), clique_labeling(graph, clique)))

    mad = mad_exact(simple)
    report.add(LowerBoundWitness("mad", ceil(mad.value / 2), mad.subgraph))

    certificate = even_cycle_deg3_bound(graph)
    if certificate is not None:
        report.add(LowerBoundWitness("even-cycle", 3, certificate.cycle, certificate.labeling))

    if solver_check and graph.m <= SOLVER_CHECK_MAX_EDGES:
        checked = []
        for w in report.witnesses:
            if w.labeling is not None and _solver_confirms(graph, w.labeling, w.bound):
                w = LowerBoundWitness(w.rule, w.bound, w.vertices, w.labeling, "solver")
            checked.append(w)
        report.witnesses = checked
    logger.info(f"lower bound {report.best} from {len(report.witnesses)} rule(s)")
    return report

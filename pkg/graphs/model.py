"""Core value types: graphs, orientations, labelings, sequences and realisations.

All types are frozen dataclasses. Per-edge data (orientation bits, labels) is
packed into a single int keyed by edge id, so a multigraph needs no special
casing anywhere downstream.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import networkx as nx

from algebra.f2 import F2Vector, check_dim
from utils.errors import GraphMismatchError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Undirected (multi)graph on vertices ``0..n-1`` with edge ids ``0..m-1``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    multigraph: bool = False

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise PreconditionError(f"negative vertex count {self.n}")
        seen = set()
        for eid, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise PreconditionError(f"edge {eid} ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise PreconditionError(f"edge {eid} is a loop at {u}", hypothesis="no loops")
            key = (u, v) if u < v else (v, u)
            if not self.multigraph and key in seen:
                raise PreconditionError(f"duplicate edge {key}", hypothesis="simple graph")
            seen.add(key)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]], multigraph: bool = False) -> "Graph":
        return Graph(n, tuple(edges), multigraph)

    @staticmethod
    def from_networkx(G: nx.Graph) -> "Graph":
        """Relabel nodes to ``0..n-1`` in sorted order; edge ids follow networkx edge order."""
        nodes = sorted(G.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in G.edges()]
        return Graph(len(nodes), tuple(edges), G.is_multigraph())

    def to_networkx(self) -> nx.Graph:
        """networkx view; a MultiGraph keyed by edge id when ``multigraph`` is set."""
        G = nx.MultiGraph() if self.multigraph else nx.Graph()
        G.add_nodes_from(range(self.n))
        for eid, (u, v) in enumerate(self.edges):
            if self.multigraph:
                G.add_edge(u, v, key=eid, eid=eid)
            else:
                G.add_edge(u, v, eid=eid)
        return G

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Distinct neighbours of each vertex, sorted."""
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_vertex_masks(self) -> tuple[int, ...]:
        return tuple((1 << u) | (1 << v) for u, v in self.edges)

    @cached_property
    def incidence_masks(self) -> tuple[int, ...]:
        masks = []
        for inc in self.incidence:
            mask = 0
            for eid in inc:
                mask |= 1 << eid
            masks.append(mask)
        return tuple(masks)

    @cached_property
    def neighbour_masks(self) -> tuple[int, ...]:
        masks = []
        for adj in self.adjacency:
            mask = 0
            for w in adj:
                mask |= 1 << w
            masks.append(mask)
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degrees counting parallel edges."""
        return tuple(len(inc) for inc in self.incidence)

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], tuple[int, ...]]:
        index: dict[tuple[int, int], list[int]] = {}
        for eid, (u, v) in enumerate(self.edges):
            key = (u, v) if u < v else (v, u)
            index.setdefault(key, []).append(eid)
        return {k: tuple(v) for k, v in index.items()}

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def edge_ids(self, u: int, v: int) -> tuple[int, ...]:
        """Ids of all edges joining ``u`` and ``v`` (several in a multigraph)."""
        key = (u, v) if u < v else (v, u)
        return self._pair_index.get(key, ())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.edge_ids(u, v))

    def other(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        comps = [sorted(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=lambda c: c[0])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int], list[int]]:
        """Induced subgraph relabelled to ``0..k-1``.

        Returns:
            ``(subgraph, vmap, emap)`` where ``vmap[new] = old`` vertex and
            ``emap[new] = old`` edge id
        """
        vmap = sorted(set(vertices))
        index = {old: new for new, old in enumerate(vmap)}
        edges, emap = [], []
        for eid, (u, v) in enumerate(self.edges):
            if u in index and v in index:
                edges.append((index[u], index[v]))
                emap.append(eid)
        return Graph(len(vmap), tuple(edges), self.multigraph), vmap, emap

    def edge_key(self) -> tuple[tuple[int, int], ...]:
        """Edge multiset with normalised endpoints, independent of edge order."""
        return tuple(sorted((u, v) if u < v else (v, u) for u, v in self.edges))

    def simple(self) -> "Graph":
        """Underlying simple graph (parallel edges merged)."""
        if not self.multigraph:
            return self
        return Graph(self.n, tuple(sorted(self._pair_index)), False)

    def __repr__(self) -> str:
        kind = "MultiGraph" if self.multigraph else "Graph"
        return f"{kind}(n={self.n}, m={self.m})"


def vertex_mask(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise PreconditionError(f"vertex {v} outside 0..{n - 1}")
        mask |= 1 << v
    return mask


def _same_graph(a: Graph, b: Graph) -> None:
    if a is not b and a != b:
        raise GraphMismatchError(f"objects reference different graphs ({a!r} vs {b!r})")


@dataclass(frozen=True)
class Orientation:
    """One direction bit per edge: 0 is lower endpoint -> higher endpoint."""

    graph: Graph
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.graph.m:
            raise PreconditionError(f"orientation bits exceed {self.graph.m} edges")

    @staticmethod
    def canonical(graph: Graph) -> "Orientation":
        return Orientation(graph, 0)

    @staticmethod
    def from_arcs(graph: Graph, arcs: Sequence[tuple[int, int]]) -> "Orientation":
        """Match arcs to edges; parallel arcs fill parallel edge ids in order."""
        if len(arcs) != graph.m:
            raise GraphMismatchError(f"{len(arcs)} arcs for a graph with {graph.m} edges")
        used: dict[tuple[int, int], int] = {}
        bits = 0
        for tail, head in arcs:
            ids = graph.edge_ids(tail, head)
            key = (tail, head) if tail < head else (head, tail)
            k = used.get(key, 0)
            if k >= len(ids):
                raise GraphMismatchError(f"arc {tail}->{head} has no matching edge")
            used[key] = k + 1
            if tail > head:
                bits |= 1 << ids[k]
        return Orientation(graph, bits)

    def arc(self, eid: int) -> tuple[int, int]:
        """``(tail, head)`` of edge ``eid``."""
        u, v = self.graph.edges[eid]
        lo, hi = (u, v) if u < v else (v, u)
        return (hi, lo) if self.bits >> eid & 1 else (lo, hi)

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc(e) for e in range(self.graph.m)]

    def in_degrees(self) -> list[int]:
        deg = [0] * self.graph.n
        for e in range(self.graph.m):
            deg[self.arc(e)[1]] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * self.graph.n
        for e in range(self.graph.m):
            deg[self.arc(e)[0]] += 1
        return deg

    def flipped(self, edge_mask: int) -> "Orientation":
        return Orientation(self.graph, self.bits ^ edge_mask)

    def restrict(self, emap: Sequence[int], subgraph: Graph) -> "Orientation":
        """Orientation of an induced subgraph; vertex ids must keep their relative order."""
        bits = 0
        for new, old in enumerate(emap):
            if self.bits >> old & 1:
                bits |= 1 << new
        return Orientation(subgraph, bits)

    def check_same_graph(self, other: "Orientation") -> None:
        _same_graph(self.graph, other.graph)


@dataclass(frozen=True)
class EdgeLabeling:
    """A map E(G) -> F2; bit ``e`` is the label of edge ``e``."""

    graph: Graph
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.graph.m:
            raise PreconditionError(f"labeling bits exceed {self.graph.m} edges")

    @staticmethod
    def constant(graph: Graph, value: int) -> "EdgeLabeling":
        return EdgeLabeling(graph, (1 << graph.m) - 1 if value else 0)

    @staticmethod
    def from_values(graph: Graph, values: Sequence[int]) -> "EdgeLabeling":
        if len(values) != graph.m:
            raise GraphMismatchError(f"{len(values)} labels for {graph.m} edges")
        bits = 0
        for eid, value in enumerate(values):
            if value & 1:
                bits |= 1 << eid
        return EdgeLabeling(graph, bits)

    def value(self, eid: int) -> int:
        return self.bits >> eid & 1

    def values(self) -> list[int]:
        return [self.bits >> e & 1 for e in range(self.graph.m)]

    def ones(self) -> list[int]:
        """Edge ids with label 1 (the disagreeing edges)."""
        return [e for e in range(self.graph.m) if self.bits >> e & 1]

    def zeros(self) -> list[int]:
        return [e for e in range(self.graph.m) if not self.bits >> e & 1]

    def restrict(self, emap: Sequence[int], subgraph: Graph) -> "EdgeLabeling":
        """Labeling of a subgraph whose edge ``i`` is edge ``emap[i]`` here."""
        return EdgeLabeling.from_values(subgraph, [self.value(e) for e in emap])

    def check_same_graph(self, graph: Graph) -> None:
        _same_graph(self.graph, graph)


@dataclass(frozen=True)
class InversionSequence:
    """Ordered vertex subsets ``X_1..X_t``."""

    sets: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(frozenset(s) for s in self.sets))

    @staticmethod
    def from_sets(sets: Iterable[Iterable[int]]) -> "InversionSequence":
        return InversionSequence(tuple(frozenset(s) for s in sets))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.sets)

    def __getitem__(self, i: int) -> frozenset[int]:
        return self.sets[i]

    def __add__(self, other: "InversionSequence") -> "InversionSequence":
        return InversionSequence(self.sets + other.sets)

    def validate(self, n: int) -> None:
        for i, s in enumerate(self.sets):
            for v in s:
                if not 0 <= v < n:
                    raise PreconditionError(f"set {i + 1} contains vertex {v} outside 0..{n - 1}")

    def without_empty(self) -> "InversionSequence":
        return InversionSequence(tuple(s for s in self.sets if s))

    def masks(self, n: int) -> list[int]:
        return [vertex_mask(s, n) for s in self.sets]


@dataclass(frozen=True)
class Realisation:
    """Per-vertex vectors of F2^dim; ``strict`` claims that no vector is zero."""

    dim: int
    vectors: tuple[int, ...] = field(default=())
    strict: bool = False

    def __post_init__(self):
        check_dim(self.dim)
        object.__setattr__(self, "vectors", tuple(int(x) for x in self.vectors))
        for v, x in enumerate(self.vectors):
            if x < 0 or x >> self.dim:
                raise PreconditionError(f"vector of vertex {v} exceeds dimension {self.dim}")
            if self.strict and x == 0:
                raise PreconditionError(f"strict realisation assigns zero to vertex {v}", hypothesis="strict")

    @property
    def n(self) -> int:
        return len(self.vectors)

    def vector(self, v: int) -> F2Vector:
        return F2Vector(self.dim, self.vectors[v])

    def padded(self, extra: int = 1) -> "Realisation":
        """Same vectors in a larger space (new coordinates zero)."""
        return Realisation(self.dim + extra, self.vectors, self.strict)

    def has_zero(self) -> bool:
        return any(x == 0 for x in self.vectors)

    def restricted(self, vmap: Sequence[int]) -> "Realisation":
        return Realisation(self.dim, tuple(self.vectors[v] for v in vmap), self.strict)

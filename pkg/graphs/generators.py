"""Instance families, each registered by name in ``FAMILIES``.

Every builder returns a ``GeneratedInstance``; families that come with a
specific hard labeling attach it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

import networkx as nx
import numpy as np

from graphs.figures import fig_5regular, fig_planar5, tw2_gadget, tw_lower
from graphs.model import EdgeLabeling, Graph
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratedInstance:
    """A generated graph with its optional attached labeling."""

    name: str
    graph: Graph
    labeling: Optional[EdgeLabeling] = None


# ============================================================================
# Deterministic families
# ============================================================================


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def complete(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def multipartite_vertex(i: int, j: int, t: int) -> int:
    return i * t + j


def complete_multipartite(r: int, t: int) -> Graph:
    """K_r[K̄_t]: ``r`` parts of ``t`` vertices, vertex (i, j) has id ``i*t + j``."""
    if r < 1 or t < 1:
        raise PreconditionError(f"multipartite needs r, t >= 1, got ({r}, {t})")
    edges = []
    for i in range(r):
        for i2 in range(i + 1, r):
            for j in range(t):
                for j2 in range(t):
                    edges.append((multipartite_vertex(i, j, t), multipartite_vertex(i2, j2, t)))
    return Graph(r * t, tuple(edges))


def multipartite_labeling(graph: Graph, r: int, t: int) -> EdgeLabeling:
    """Label 1 exactly between (i, j) and (i+1, j)."""
    values = []
    for u, v in graph.edges:
        (i, j), (i2, j2) = divmod(u, t), divmod(v, t)
        values.append(1 if abs(i - i2) == 1 and j == j2 else 0)
    return EdgeLabeling.from_values(graph, values)


def subdivide_once(graph: Graph) -> Graph:
    """Edge ``e = (a, b)`` becomes ``a - x_e - b`` with ``x_e = n + e``; edge ids ``2e`` and ``2e + 1``."""
    edges = []
    for eid, (a, b) in enumerate(graph.edges):
        x = graph.n + eid
        edges.append((a, x))
        edges.append((x, b))
    return Graph(graph.n + graph.m, tuple(edges))


def subdivided_complete(N: int) -> Graph:
    return subdivide_once(complete(N))


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def wheel(k: int) -> Graph:
    """Hub 0 joined to the cycle ``1..k``."""
    if k < 3:
        raise PreconditionError(f"wheel needs k >= 3, got {k}")
    rim = tuple((i, i % k + 1) for i in range(1, k + 1))
    return Graph(k + 1, tuple((0, i) for i in range(1, k + 1)) + rim)


def prism(k: int) -> Graph:
    return Graph.from_networkx(nx.circular_ladder_graph(k))


def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


def pendant_cycle(g: int) -> Graph:
    """Cycle ``0..g-1`` with a pendant vertex ``g + i`` on every cycle vertex ``i``.

    Any ``g >= 3`` is accepted; the diameter-3 tightness holds for even ``g >= 8``.
    """
    if g < 3:
        raise PreconditionError(f"pendant_cycle needs g >= 3, got {g}")
    if g % 2:
        logger.warning(f"pendant_cycle({g}): odd girth, the tightness claim concerns even g")
    edges = [(i, (i + 1) % g) for i in range(g)]
    edges += [(i, g + i) for i in range(g)]
    return Graph(2 * g, tuple(edges))


# ============================================================================
# Seeded random families
# ============================================================================


def random_tree(n: int, seed: int = 0) -> Graph:
    rng = np.random.default_rng(seed)
    if n <= 1:
        return Graph(max(n, 0))
    if n == 2:
        return Graph(2, ((0, 1),))
    prufer = rng.integers(0, n, size=n - 2).tolist()
    return Graph.from_networkx(nx.from_prufer_sequence(prufer))


def random_forest(n: int, trees: int, seed: int = 0) -> Graph:
    """Random forest: a random tree with ``trees - 1`` random edges removed."""
    rng = np.random.default_rng(seed)
    tree = random_tree(n, int(rng.integers(0, 2**31)))
    keep = sorted(rng.permutation(tree.m)[: max(tree.m - (trees - 1), 0)].tolist())
    return Graph(n, tuple(tree.edges[e] for e in keep))


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_regular(d: int, n: int, seed: int = 0) -> Graph:
    return Graph.from_networkx(nx.random_regular_graph(d, n, seed=seed))


def random_bipartite(a: int, b: int, p: float, seed: int = 0) -> Graph:
    """Sides ``0..a-1`` and ``a..a+b-1``."""
    return Graph.from_networkx(nx.bipartite.random_graph(a, b, p, seed=seed))


def random_bounded_degree(n: int, max_degree: int, p: float, seed: int = 0) -> Graph:
    """G(n, p) with edges dropped (in random order) where they would exceed ``max_degree``."""
    rng = np.random.default_rng(seed)
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    order = rng.permutation(len(candidates)).tolist()
    deg = [0] * n
    edges = []
    for k in order:
        u, v = candidates[k]
        if deg[u] < max_degree and deg[v] < max_degree:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, tuple(sorted(edges)))


def random_subdivided_cubic(n: int, s: int, seed: int = 0) -> Graph:
    """Random cubic graph on ``n`` vertices, each edge subdivided between ``s`` and ``s + 2`` times."""
    rng = np.random.default_rng(seed)
    cubic = random_regular(3, n, int(rng.integers(0, 2**31)))
    edges = []
    next_id = cubic.n
    for a, b in cubic.edges:
        k = int(rng.integers(s, s + 3))
        chain = [a] + list(range(next_id, next_id + k)) + [b]
        next_id += k
        edges.extend(zip(chain, chain[1:]))
    return Graph(next_id, tuple(edges))


# ============================================================================
# Registry
# ============================================================================


@dataclass(frozen=True)
class Family:
    """Registry entry: a builder plus the names and types of its parameters."""

    builder: Callable[..., GeneratedInstance]
    params: tuple[tuple[str, type], ...]
    description: str
    seeded: bool = False


def _plain(name: str, fn: Callable[..., Graph]) -> Callable[..., GeneratedInstance]:
    def build(*args: Any) -> GeneratedInstance:
        label = f"{name}({', '.join(str(a) for a in args)})"
        return GeneratedInstance(label, fn(*args))

    return build


def _figure(name: str, fn: Callable[..., tuple[Graph, EdgeLabeling]]) -> Callable[..., GeneratedInstance]:
    def build(*args: Any) -> GeneratedInstance:
        graph, labeling = fn(*args)
        label = f"{name}({', '.join(str(a) for a in args)})"
        return GeneratedInstance(label, graph, labeling)

    return build


def _multipartite(r: int, t: int) -> GeneratedInstance:
    graph = complete_multipartite(r, t)
    return GeneratedInstance(f"multipartite({r}, {t})", graph, multipartite_labeling(graph, r, t))


def _graph6(token: str) -> GeneratedInstance:
    from graphs.io import parse_graph6

    return GeneratedInstance(f"graph6({token})", parse_graph6(token))


def _subdivide_once(source: Graph | str) -> GeneratedInstance:
    if isinstance(source, str):
        from graphs.io import read_graph

        source = read_graph(Path(source))
    return GeneratedInstance("subdivide_once", subdivide_once(source))


FAMILIES: dict[str, Family] = {
    "path": Family(_plain("path", path), (("n", int),), "path on n vertices"),
    "cycle": Family(_plain("cycle", cycle), (("n", int),), "cycle on n vertices"),
    "star": Family(_plain("star", star), (("k", int),), "star K_{1,k}, centre 0"),
    "complete": Family(_plain("complete", complete), (("n", int),), "complete graph K_n"),
    "multipartite": Family(_multipartite, (("r", int), ("t", int)), "K_r[K̄_t] with its hard labeling"),
    "complete_multipartite": Family(_multipartite, (("r", int), ("t", int)), "alias of multipartite"),
    "subdivided_complete": Family(_plain("subdivided_complete", subdivided_complete), (("N", int),), "K_N with every edge subdivided once"),
    "complete_bipartite": Family(_plain("complete_bipartite", complete_bipartite), (("a", int), ("b", int)), "complete bipartite K_{a,b}"),
    "wheel": Family(_plain("wheel", wheel), (("k", int),), "hub joined to a k-cycle"),
    "prism": Family(_plain("prism", prism), (("k", int),), "circular ladder on 2k vertices"),
    "petersen": Family(_plain("petersen", petersen), (), "Petersen graph"),
    "graph6": Family(_graph6, (("token", str),), "graph given as a graph6 string"),
    "pendant_cycle": Family(_plain("pendant_cycle", pendant_cycle), (("g", int),), "C_g with a pendant vertex on every cycle vertex"),
    "fig_planar5": Family(_figure("fig_planar5", fig_planar5), (), "planar graph with a labeling needing dimension 5"),
    "fig_5regular": Family(_figure("fig_5regular", fig_5regular), (), "5-regular graph (two K5 and a matching)"),
    "tw2_gadget": Family(_figure("tw2_gadget", tw2_gadget), (), "treewidth-2 graph with a labeling needing dimension 4"),
    "tw_lower": Family(_figure("tw_lower", tw_lower), (("t", int),), "treewidth-t graph with a labeling needing dimension t+2"),
    "subdivide_once": Family(_subdivide_once, (("graph", str),), "subdivide every edge of a graph file once"),
    "random_tree": Family(_plain("random_tree", random_tree), (("n", int),), "uniform random labelled tree", seeded=True),
    "random_forest": Family(_plain("random_forest", random_forest), (("n", int), ("trees", int)), "random forest", seeded=True),
    "random_graph": Family(_plain("random_graph", random_graph), (("n", int), ("p", float)), "Erdős–Rényi G(n, p)", seeded=True),
    "random_regular": Family(_plain("random_regular", random_regular), (("d", int), ("n", int)), "random d-regular graph", seeded=True),
    "random_bipartite": Family(_plain("random_bipartite", random_bipartite), (("a", int), ("b", int), ("p", float)), "random bipartite graph", seeded=True),
    "random_bounded_degree": Family(_plain("random_bounded_degree", random_bounded_degree), (("n", int), ("max_degree", int), ("p", float)), "G(n, p) capped at a maximum degree", seeded=True),
    "random_subdivided_cubic": Family(_plain("random_subdivided_cubic", random_subdivided_cubic), (("n", int), ("s", int)), "random cubic graph, edges subdivided >= s times", seeded=True),
}


def generate(family: str, *params: Any, seed: int = 0) -> GeneratedInstance:
    """Build an instance of a registered family.

    Args:
        family: Family name (see ``FAMILIES``)
        *params: Positional parameters; strings are converted to the declared types
        seed: Seed for random families

    Returns:
        GeneratedInstance

    Raises:
        ValueError: If the family is unknown or the parameters do not match
    """
    family_entry = FAMILIES.get(family)
    if family_entry is None:
        raise ValueError(f"Unsupported family: {family}. Choose one of: {', '.join(sorted(FAMILIES))}")
    if len(params) != len(family_entry.params):
        names = " ".join(name for name, _ in family_entry.params)
        raise ValueError(f"Family {family} expects parameters: {names or '(none)'}")
    converted = []
    for value, (name, kind) in zip(params, family_entry.params):
        try:
            converted.append(kind(value) if isinstance(value, str) and kind is not str else value)
        except ValueError:
            raise ValueError(f"Parameter {name} of {family} must be {kind.__name__}, got '{value}'") from None
    if family_entry.seeded:
        converted.append(seed)
    instance = family_entry.builder(*converted)
    logger.info(f"Generated {instance.name}: n={instance.graph.n}, m={instance.graph.m}")
    return instance

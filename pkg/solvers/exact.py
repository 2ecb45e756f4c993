"""Exact realisation search and inversion distance.

Two orientations are at distance at most ``t`` exactly when their
disagreement labeling ``pi`` admits vectors of F2^t with ``u . v = pi(uv)`` on
every edge. ``RealisationSearch`` decides that by backtracking: every
unassigned vertex keeps an echelon basis of the linear constraints coming
from its assigned neighbours, so a candidate assignment is rejected as soon
as some neighbour's system becomes inconsistent.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Iterator, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from algebra.f2 import MAX_DIM, check_dim, gray_points, solve_affine_bits
from graphs.model import EdgeLabeling, Graph, InversionSequence, Orientation, Realisation
from graphs.operations import disagreement, realisation_to_sequence
from solvers.verify import verify_realisation, verify_sequence
from utils.errors import BudgetExhausted, InvariantViolation

logger = logging.getLogger(__name__)

BUDGET_CHECK_INTERVAL = 1024


class SolveOptions(BaseModel):
    """Knobs shared by every exact search."""

    model_config = ConfigDict(frozen=True)

    strict: bool = False
    vertex_order: Literal["dynamic", "static"] = "dynamic"
    time_budget: Optional[float] = Field(default=None, ge=0)
    parallel_pi_chunks: int = Field(default=1, ge=1)
    max_t: Optional[int] = Field(default=None, ge=0, le=MAX_DIM)
    dominance: bool = True

    def deadline(self) -> Optional[float]:
        if self.time_budget is None:
            return None
        return time.monotonic() + self.time_budget


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a minimum-dimension search.

    ``value`` is ``None`` when no dimension up to ``max_t`` works (then
    ``proven_infeasible == max_t``) or when the labeling is unreachable
    (parallel edges with different labels, ``reachable=False``).
    """

    value: Optional[int]
    witness: Optional[Realisation]
    proven_infeasible: Optional[int]
    reachable: bool = True

    @property
    def sequence(self) -> Optional[InversionSequence]:
        return realisation_to_sequence(self.witness) if self.witness is not None else None


class RealisationSearch:
    """Backtracking decision procedure on a fixed graph; labels vary per call."""

    def __init__(
        self,
        graph: Graph,
        strict: bool = False,
        deadline: Optional[float] = None,
        vertex_order: str = "dynamic",
    ):
        self.graph = graph
        self.n = graph.n
        self.strict = strict
        self.deadline = deadline
        self.vertex_order = vertex_order
        self.nodes = 0

        nbrs: list[list[tuple[int, int]]] = [[] for _ in range(graph.n)]
        self.parallel: list[tuple[int, ...]] = []
        for (u, v), eids in graph._pair_index.items():
            nbrs[u].append((v, eids[0]))
            nbrs[v].append((u, eids[0]))
            if len(eids) > 1:
                self.parallel.append(eids)
        self.nbrs = [tuple(sorted(x)) for x in nbrs]

    # ------------------------------------------------------------------

    def consistent(self, labels: int) -> bool:
        """Parallel edges must carry equal labels."""
        for eids in self.parallel:
            b = labels >> eids[0] & 1
            if any((labels >> e & 1) != b for e in eids[1:]):
                return False
        return True

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % BUDGET_CHECK_INTERVAL == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted(f"search budget exhausted after {self.nodes} nodes")

    def solve(self, labels: int, t: int) -> Optional[list[int]]:
        """Vectors realising ``labels`` in F2^t, or ``None`` if none exist.

        Raises:
            BudgetExhausted: If the deadline passes during the search
        """
        check_dim(t)
        n = self.n
        if not self.consistent(labels):
            return None
        if t == 0:
            if self.strict:
                return None if n else []
            return [0] * n if self._all_labels(labels, 0) else None
        if self.strict and t == 1:
            return [1] * n if self._all_labels(labels, 1) else None

        alive = [True] * n
        deg = [len(self.nbrs[v]) for v in range(n)]
        required = [False] * n
        records = self._peel(labels, alive, deg, required)

        vectors = [0] * n
        core = [v for v in range(n) if alive[v]]
        for comp in self._core_components(core, alive):
            if len(comp) == 1:
                v = comp[0]
                vectors[v] = 1 if (self.strict or required[v]) else 0
                continue
            assigned = self._search_component(comp, labels, t, required)
            if assigned is None:
                return None
            for v, x in assigned.items():
                vectors[v] = x

        for v, w, b in reversed(records):
            vectors[v] = self._extend_leaf(vectors[w], b, t, nonzero=self.strict or b == 1)
        return vectors

    def _all_labels(self, labels: int, value: int) -> bool:
        full = (1 << self.graph.m) - 1
        return labels == (full if value else 0)

    def _peel(self, labels: int, alive: list[bool], deg: list[int], required: list[bool]) -> list[tuple[int, int, int]]:
        """Remove degree-1 vertices whose extension is always possible.

        Non-strict: a leaf on a 0-edge takes the zero vector; a leaf on a
        1-edge needs its neighbour to be nonzero. Strict (t >= 2): every leaf
        extends to a nonzero vector.
        """
        records = []
        stack = [v for v in range(self.n) if deg[v] == 1]
        while stack:
            v = stack.pop()
            if not alive[v] or deg[v] != 1 or required[v]:
                continue
            for w, e in self.nbrs[v]:
                if alive[w]:
                    break
            b = labels >> e & 1
            records.append((v, w, b))
            if b and not self.strict:
                required[w] = True
            alive[v] = False
            deg[w] -= 1
            if deg[w] == 1:
                stack.append(w)
        return records

    def _core_components(self, core: list[int], alive: list[bool]) -> Iterator[list[int]]:
        seen = set()
        for root in core:
            if root in seen:
                continue
            seen.add(root)
            comp, queue = [root], [root]
            while queue:
                v = queue.pop()
                for w, _ in self.nbrs[v]:
                    if alive[w] and w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            yield sorted(comp)

    @staticmethod
    def _extend_leaf(w_vec: int, b: int, t: int, nonzero: bool) -> int:
        if not b and not nonzero:
            return 0
        solved = solve_affine_bits([w_vec], [b], t)
        if solved is not None:
            for x in gray_points(*solved):
                if x or not nonzero:
                    return x
        raise InvariantViolation(f"leaf extension failed for neighbour vector {w_vec:#x}, label {b}")

    # ------------------------------------------------------------------

    def _search_component(self, comp: list[int], labels: int, t: int, required: list[bool]) -> Optional[dict[int, int]]:
        strict = self.strict
        nbrs = self.nbrs
        assigned: dict[int, int] = {}
        count = dict.fromkeys(comp, 0)
        basis: dict[int, dict[int, tuple[int, int]]] = {v: {} for v in comp}
        trail: list[tuple[int, int]] = []
        unassigned = set(comp)
        static_order = self._static_order(comp) if self.vertex_order == "static" else None
        frames: list[list] = []

        def insert(w: int, row: int, rhs: int) -> bool:
            rows = basis[w]
            while row:
                top = row.bit_length() - 1
                hit = rows.get(top)
                if hit is None:
                    rows[top] = (row, rhs)
                    trail.append((w, top))
                    return True
                row ^= hit[0]
                rhs ^= hit[1]
            return rhs == 0

        def unique_point(rows: dict[int, tuple[int, int]]) -> int:
            x = 0
            for p in range(t):
                r, b = rows[p]
                if ((r & ((1 << p) - 1) & x).bit_count() & 1) ^ b:
                    x |= 1 << p
            return x

        def assign(v: int, x: int) -> bool:
            assigned[v] = x
            for w, _ in nbrs[v]:
                if w in unassigned:
                    count[w] += 1
            for w, e in nbrs[v]:
                if w not in unassigned:
                    continue
                if not insert(w, x, labels >> e & 1):
                    return False
                if (strict or required[w]) and len(basis[w]) == t and unique_point(basis[w]) == 0:
                    return False
            return True

        def unassign(v: int, mark: int) -> None:
            del assigned[v]
            for w, _ in nbrs[v]:
                if w in unassigned:
                    count[w] -= 1
            while len(trail) > mark:
                w, p = trail.pop()
                del basis[w][p]

        def candidates(v: int, first: bool) -> Iterator[int]:
            nonzero = strict or required[v]
            if first:
                # coordinates can be permuted freely, so weight alone matters
                return iter([(1 << k) - 1 for k in range(1 if nonzero else 0, t + 1)])
            rows = list(basis[v].values())
            solved = solve_affine_bits([r for r, _ in rows], [b for _, b in rows], t)
            if solved is None:
                return iter(())
            particular, null = solved
            points = gray_points(particular, null)
            return (x for x in points if x) if nonzero else points

        def select() -> int:
            if static_order is not None:
                for v in static_order:
                    if v in unassigned:
                        return v
            return max(unassigned, key=lambda v: (count[v], -v))

        while True:
            if not unassigned:
                return dict(assigned)
            v = select()
            unassigned.discard(v)
            frames.append([v, candidates(v, not frames), len(trail)])
            while frames:
                v, it, mark = frames[-1]
                if v in assigned:
                    unassign(v, mark)
                x = next(it, None)
                if x is None:
                    frames.pop()
                    unassigned.add(v)
                    continue
                self._tick()
                if assign(v, x):
                    break
            else:
                return None

    def _static_order(self, comp: list[int]) -> list[int]:
        """Breadth-first order from the smallest vertex."""
        members = set(comp)
        order, seen = [comp[0]], {comp[0]}
        i = 0
        while i < len(order):
            for w, _ in self.nbrs[order[i]]:
                if w in members and w not in seen:
                    seen.add(w)
                    order.append(w)
            i += 1
        return order


# ============================================================================
# Public operations
# ============================================================================


def realisation_search(
    graph: Graph,
    labeling: EdgeLabeling,
    t: int,
    opts: Optional[SolveOptions] = None,
    deadline: Optional[float] = None,
) -> Optional[Realisation]:
    """A ``t``-dimensional realisation of ``labeling`` or ``None`` when none exists.

    Raises:
        DimensionCapError: If ``t > 64``
        BudgetExhausted: If the time budget runs out (the answer is unknown)
    """
    opts = opts or SolveOptions()
    labeling.check_same_graph(graph)
    check_dim(t)
    if deadline is None:
        deadline = opts.deadline()
    search = RealisationSearch(graph, opts.strict, deadline, opts.vertex_order)
    vectors = search.solve(labeling.bits, t)
    logger.debug(f"realisation_search t={t} n={graph.n} m={graph.m}: {'found' if vectors is not None else 'none'} ({search.nodes} nodes)")
    if vectors is None:
        return None
    realisation = Realisation(t, tuple(vectors), opts.strict)
    if not verify_realisation(graph, labeling, realisation):
        raise InvariantViolation("search returned a vector family that does not realise the labeling", (graph, labeling, t))
    return realisation


def distance_one(graph: Graph, labeling: EdgeLabeling) -> Optional[Realisation]:
    """Linear-time test for a single inversion.

    The only candidate set is the set of endpoints of disagreeing edges; it
    works iff no agreeing edge has both endpoints in it.
    """
    X = 0
    for e in labeling.ones():
        X |= graph.edge_vertex_masks[e]
    for e in labeling.zeros():
        em = graph.edge_vertex_masks[e]
        if em & X == em:
            return None
    return Realisation(1, tuple(X >> v & 1 for v in range(graph.n)))


def min_dimension(
    graph: Graph,
    labeling: EdgeLabeling,
    opts: Optional[SolveOptions] = None,
    deadline: Optional[float] = None,
    search: Optional[RealisationSearch] = None,
) -> DistanceResult:
    """Least ``t`` admitting a realisation (the inversion distance of the labeling)."""
    opts = opts or SolveOptions()
    labeling.check_same_graph(graph)
    if deadline is None:
        deadline = opts.deadline()
    search = search or RealisationSearch(graph, opts.strict, deadline, opts.vertex_order)
    if not search.consistent(labeling.bits):
        logger.info("Parallel edges carry different labels: orientations are not connected by inversions")
        return DistanceResult(None, None, None, reachable=False)

    if opts.strict:
        start, cap = 0, min(graph.n + 1, MAX_DIM)
    else:
        if labeling.bits == 0:
            return DistanceResult(0, Realisation(0, (0,) * graph.n), None)
        one = distance_one(graph, labeling)
        if one is not None:
            return DistanceResult(1, one, 0)
        start, cap = 2, max(graph.n - 1, 1)
    limit = cap if opts.max_t is None else min(cap, opts.max_t)

    for t in range(start, limit + 1):
        vectors = search.solve(labeling.bits, t)
        if vectors is not None:
            realisation = Realisation(t, tuple(vectors), opts.strict)
            if not verify_realisation(graph, labeling, realisation):
                raise InvariantViolation("search produced an invalid realisation", (graph, labeling, t))
            logger.info(f"min_dimension: t*={t} (n={graph.n}, m={graph.m}, {search.nodes} nodes)")
            return DistanceResult(t, realisation, t - 1 if t > 0 else None)

    if opts.max_t is not None and opts.max_t < cap:
        return DistanceResult(None, None, opts.max_t)
    raise InvariantViolation(f"no realisation up to dimension {cap}, contradicting the n - 1 upper bound", (graph, labeling))


def inversion_distance(O1: Orientation, O2: Orientation, opts: Optional[SolveOptions] = None) -> DistanceResult:
    """Distance in the inversion graph, with a verified witness."""
    O1.check_same_graph(O2)
    result = min_dimension(O1.graph, disagreement(O1, O2), opts)
    if result.witness is not None and not verify_sequence(O1, result.sequence, O2):
        raise InvariantViolation("witness sequence does not transform O1 into O2", (O1, O2))
    return result

"""Colouring reduction through the once-subdivided graph.

For ``G`` of minimum degree at least 2 the instance ``(O1, O2)`` on the
subdivision has ``d(O1, O2) <= k`` exactly when ``chi(G) <= 2^k - 1``, and
then every pair of orientations of the subdivision is within ``k``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from algebra.f2 import solve_affine_bits
from graphs.generators import subdivide_once
from graphs.model import EdgeLabeling, Graph, Orientation, Realisation
from graphs.operations import is_proper_coloring
from reductions.chromatic import CHROMATIC_MAX_VERTICES, chromatic_number
from reductions.orientation import min_indegree_orientation
from solvers.diameter import DEFAULT_MAX_EDGES, inversion_diameter
from solvers.exact import SolveOptions, realisation_search
from solvers.verify import verify_realisation
from utils.errors import InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionInstance:
    """Base graph, its subdivision and the orientation pair encoding ``chi <= 2^k - 1``.

    Edge ``e = (a, b)`` of the base graph becomes ``a - x_e - b`` with
    ``x_e = n + e``; the two halves have ids ``2e`` and ``2e + 1``.
    """

    base_graph: Graph
    k: int
    subdivided: Graph
    base_orientation: Orientation
    pi0: EdgeLabeling
    O1: Orientation
    O2: Orientation

    def subdivision_vertex(self, eid: int) -> int:
        return self.base_graph.n + eid


def subdivision_instance(G: Graph, k: int) -> ReductionInstance:
    """Build the reduction instance for ``G`` and ``k``.

    The half towards the tail of the balanced base orientation is labelled
    0, the half towards the head 1, so every original vertex keeps at least
    one incident 1-edge.

    Raises:
        PreconditionError: If ``G`` has a vertex of degree below 2, parallel edges, or ``k < 2``
    """
    if k < 2:
        raise PreconditionError(f"reduction needs k >= 2, got {k}", hypothesis="k >= 2")
    if G.n == 0 or G.min_degree < 2:
        raise PreconditionError(f"minimum degree {G.min_degree} below 2", hypothesis="minimum degree >= 2")
    if G.multigraph and len(set(G.edge_key())) != G.m:
        raise PreconditionError("base graph has parallel edges", hypothesis="simple graph")

    base_orientation = min_indegree_orientation(G)
    subdivided = subdivide_once(G)
    values = [0] * subdivided.m
    for eid in range(G.m):
        tail, _ = base_orientation.arc(eid)
        a, _ = G.edges[eid]
        # half 2e touches a, half 2e + 1 touches b
        if tail == a:
            values[2 * eid + 1] = 1
        else:
            values[2 * eid] = 1
    pi0 = EdgeLabeling.from_values(subdivided, values)
    O1 = Orientation.canonical(subdivided)
    O2 = O1.flipped(pi0.bits)
    logger.info(f"subdivision_instance: base n={G.n} m={G.m}, k={k}, subdivision n={subdivided.n} m={subdivided.m}")
    return ReductionInstance(G, k, subdivided, base_orientation, pi0, O1, O2)


def colors_to_vectors(coloring: Sequence[int], k: int) -> list[int]:
    """Colour ``c`` becomes the nonzero vector with packed value ``c + 1``.

    Raises:
        PreconditionError: If more than ``2^k - 1`` colours are used
    """
    used = max(coloring, default=-1) + 1
    if used > (1 << k) - 1:
        raise PreconditionError(f"{used} colours do not fit the {(1 << k) - 1} nonzero vectors of F2^{k}", hypothesis="chi <= 2^k - 1")
    return [c + 1 for c in coloring]


def coloring_to_subdivision_realisation(
    inst: ReductionInstance,
    phi: Sequence[int],
    target: Optional[EdgeLabeling] = None,
) -> Realisation:
    """Realise ``target`` (default ``pi0``) on the subdivision from a colouring into ``F2^k \\ {0}``.

    Original vertices keep ``phi``; each ``x_uv`` solves ``u.w = pi(u x_uv)``,
    ``v.w = pi(x_uv v)``, which is consistent because ``phi(u)`` and
    ``phi(v)`` are distinct and nonzero.

    Raises:
        PreconditionError: If ``phi`` is not a proper colouring by nonzero vectors of ``F2^k``
    """
    G, k = inst.base_graph, inst.k
    target = inst.pi0 if target is None else target
    target.check_same_graph(inst.subdivided)
    if len(phi) != G.n:
        raise PreconditionError(f"colouring has {len(phi)} entries for {G.n} vertices")
    if any(not 0 < x < (1 << k) for x in phi):
        raise PreconditionError(f"colouring uses a vector outside F2^{k} \\ {{0}}", hypothesis="nonzero vectors")
    if not is_proper_coloring(G, list(phi)):
        raise PreconditionError("colouring is not proper", hypothesis="proper colouring")

    vectors = list(phi) + [0] * G.m
    for eid, (a, b) in enumerate(G.edges):
        solution = solve_affine_bits([phi[a], phi[b]], [target.value(2 * eid), target.value(2 * eid + 1)], k)
        if solution is None:
            raise InvariantViolation(f"no vector for the subdivision vertex of edge {a}-{b}", (inst, phi))
        vectors[inst.subdivision_vertex(eid)] = solution[0]
    realisation = Realisation(k, tuple(vectors))
    if not verify_realisation(inst.subdivided, target, realisation):
        raise InvariantViolation("colouring realisation does not match the target labeling", (inst, phi))
    return realisation


@dataclass(frozen=True)
class AuditReport:
    """The three quantities the reduction relates, computed independently."""

    k: int
    chromatic: int
    distance_at_most_k: bool
    diameter_at_most_k: bool

    @property
    def colourable(self) -> bool:
        return self.chromatic <= (1 << self.k) - 1

    @property
    def agree(self) -> bool:
        return self.distance_at_most_k == self.diameter_at_most_k == self.colourable


def audit_subdivision(
    G: Graph,
    k: int,
    opts: Optional[SolveOptions] = None,
    max_edges: int = DEFAULT_MAX_EDGES,
    chromatic_max_vertices: int = CHROMATIC_MAX_VERTICES,
) -> AuditReport:
    """Exact distance, diameter test and chromatic number for one instance.

    Raises:
        SizeGuardError: If the subdivision exceeds the diameter edge guard
        BudgetExhausted: If the time budget runs out
    """
    opts = opts or SolveOptions()
    inst = subdivision_instance(G, k)
    chi = chromatic_number(G, chromatic_max_vertices)
    witness = realisation_search(inst.subdivided, inst.pi0, k, opts)
    diameter = inversion_diameter(inst.subdivided, opts, max_edges=max_edges, threshold=k)
    report = AuditReport(k, chi, witness is not None, not diameter.exceeded_threshold)
    if report.agree:
        logger.info(f"audit k={k}: chi={chi}, distance<=k {report.distance_at_most_k}, all three agree")
    else:
        logger.error(f"audit k={k} disagrees: {report}")
    return report

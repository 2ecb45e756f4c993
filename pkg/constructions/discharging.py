"""Strict three-dimensional realisations for sparse graphs (``Mad <= 2 + 8/11``).

Reducible configurations are peeled off one at a time onto a stack; the
stack is then unwound, each configuration being extended by a small
backtracking search once all of its outside neighbours carry vectors.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from algebra.f2 import dot
from graphs.model import EdgeLabeling, Graph, Realisation
from certificates.density import mad_exact
from constructions.witness import checked_realisation, simple_view
from solvers.exact import RealisationSearch
from utils.errors import DischargingContradiction, InvariantViolation, PreconditionError

logger = logging.getLogger(__name__)

SPARSE_MAD_THRESHOLD = Fraction(30, 11)
SPARSE_DIMENSION = 3
MAX_ALL_THIN_DEGREE = 6
NONZERO = tuple(range(1, 1 << SPARSE_DIMENSION))


@dataclass(frozen=True)
class Reduction:
    """One peeled configuration: its vertices in extension order and avoidance hints."""

    rule: str
    vertices: tuple[int, ...]
    avoid: tuple[tuple[int, int], ...] = field(default=())


class _Peeler:
    """Finds reducible configurations in the shrinking graph."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.alive = set(range(graph.n))
        self.nbrs = [set(a) for a in graph.adjacency]

    def deg(self, v: int) -> int:
        return len(self.nbrs[v])

    def remove(self, vertices) -> None:
        for v in vertices:
            self.alive.discard(v)
            for w in self.nbrs[v]:
                self.nbrs[w].discard(v)
        for v in vertices:
            self.nbrs[v] = set()

    def other(self, thin: int, v: int) -> int:
        """Neighbour of the 2-vertex ``thin`` distinct from ``v``."""
        return next(w for w in self.nbrs[thin] if w != v)

    def thin_nbrs(self, v: int) -> list[int]:
        return sorted(w for w in self.nbrs[v] if self.deg(w) == 2)

    def is_deficient(self, v: int) -> bool:
        return self.deg(v) == 3 and len(self.thin_nbrs(v)) == 1

    def find(self) -> Optional[Reduction]:
        order = sorted(self.alive)
        for v in order:
            if self.deg(v) == 0:
                return Reduction("isolated", (v,))
        for v in order:
            if self.deg(v) == 1:
                return Reduction("leaf", (v,))
        for v in order:
            if self.deg(v) == 2:
                for w in self.thin_nbrs(v):
                    return Reduction("thin-pair", (v, w), ((v, self.other(w, v)),))
        for v in order:
            if self.deg(v) == 3:
                thin = self.thin_nbrs(v)
                if len(thin) >= 2:
                    u1, u2 = thin[:2]
                    return Reduction("cubic-two-thin", (v, u1, u2), ((v, self.other(u1, v)), (v, self.other(u2, v))))
        for y in order:
            found = self._deficient_triple(y)
            if found is not None:
                return found
        for v in order:
            d = self.deg(v)
            if 3 <= d <= MAX_ALL_THIN_DEGREE and len(self.thin_nbrs(v)) == d:
                thin = self.thin_nbrs(v)
                return Reduction("all-thin", (v, *thin), tuple((v, self.other(u, v)) for u in thin))
        return None

    def _deficient_triple(self, y: int) -> Optional[Reduction]:
        if not self.is_deficient(y):
            return None
        partners = sorted(w for w in self.nbrs[y] if self.is_deficient(w))
        for i, x in enumerate(partners):
            for z in partners[i + 1 :]:
                xp, yp, zp = self.thin_nbrs(x)[0], self.thin_nbrs(y)[0], self.thin_nbrs(z)[0]
                six = {x, y, z, xp, yp, zp}
                if len(six) != 6:
                    continue
                (p,) = self.nbrs[x] - {y, xp}
                (q,) = self.nbrs[z] - {y, zp}
                if p in six or q in six:
                    continue
                avoid = ((x, self.other(xp, x)), (z, self.other(zp, z)), (y, self.other(yp, y)))
                return Reduction("deficient-triple", (x, z, y, xp, zp, yp), avoid)
        return None


def _extend(graph: Graph, labeling: EdgeLabeling, vectors: list[int], reduction: Reduction) -> bool:
    """Backtracking over the configuration's vertices.

    Zero marks an unassigned vertex; neighbours peeled earlier are still
    unassigned and constrain this configuration only when they are extended.
    """
    members = reduction.vertices
    avoid = {}
    for v, w in reduction.avoid:
        avoid.setdefault(v, []).append(w)

    def candidates(v: int) -> list[int]:
        fixed = [(w, labeling.value(graph.edge_ids(v, w)[0])) for w in graph.adjacency[v] if vectors[w]]
        ok = [x for x in NONZERO if all(dot(x, vectors[w]) == b for w, b in fixed)]
        shunned = {vectors[w] for w in avoid.get(v, ()) if vectors[w]}
        return [x for x in ok if x not in shunned] + [x for x in ok if x in shunned]

    def place(i: int) -> bool:
        if i == len(members):
            return True
        v = members[i]
        for x in candidates(v):
            vectors[v] = x
            if place(i + 1):
                return True
        vectors[v] = 0
        return False

    return place(0)


def peel_sparse(S: Graph) -> tuple[list[Reduction], list[int]]:
    """Peel reducible configurations off ``S``; returns the stack and the vertices left over."""
    peeler = _Peeler(S)
    stack: list[Reduction] = []
    while peeler.alive:
        found = peeler.find()
        if found is None:
            break
        stack.append(found)
        peeler.remove(found.vertices)
    return stack, sorted(peeler.alive)


def sparse3_realisation(G: Graph, labeling: EdgeLabeling, check_density: bool = True) -> Realisation:
    """Strict three-dimensional realisation of a sparse graph.

    Peels isolated vertices, leaves, adjacent 2-vertices, 3-vertices with two
    2-neighbours, chains of three deficient 3-vertices and vertices of degree
    at most six whose neighbours all have degree two. A stalled peel is only
    legitimate at ``Mad = 2 + 8/11`` exactly; the kernel is then solved by
    the exact strict search before unwinding.

    Raises:
        PreconditionError: If ``Mad(G) > 2 + 8/11``
        DischargingContradiction: If the peeling stalls below the threshold, or
            the boundary kernel has no strict realisation
    """
    labeling.check_same_graph(G)
    S, pi = simple_view(G, labeling)
    mad: Optional[Fraction] = None
    if check_density:
        mad = mad_exact(S).value
        if mad > SPARSE_MAD_THRESHOLD:
            raise PreconditionError(f"Mad = {mad}", hypothesis="Mad <= 30/11")

    stack, kernel = peel_sparse(S)
    vectors = [0] * S.n
    if kernel:
        if mad is None:
            mad = mad_exact(S).value
        if mad > SPARSE_MAD_THRESHOLD:
            raise PreconditionError(f"Mad = {mad}", hypothesis="Mad <= 30/11")
        if mad < SPARSE_MAD_THRESHOLD:
            raise DischargingContradiction(
                f"no reducible configuration on a kernel of {len(kernel)} vertices at Mad = {mad}",
                (G, labeling, kernel),
            )
        logger.warning(f"sparse3_realisation: kernel of {len(kernel)} vertices at the density threshold, solving it exactly")
        sub, vmap, emap = S.induced(kernel)
        solved = RealisationSearch(sub, strict=True).solve(pi.restrict(emap, sub).bits, SPARSE_DIMENSION)
        if solved is None:
            raise DischargingContradiction(f"kernel of {len(kernel)} vertices has no strict 3-dimensional realisation", (G, labeling, kernel))
        for new, x in enumerate(solved):
            vectors[vmap[new]] = x

    for reduction in reversed(stack):
        if not _extend(S, pi, vectors, reduction):
            raise InvariantViolation(f"{reduction.rule} configuration at {reduction.vertices} did not extend", (G, labeling))
    logger.debug(f"sparse3_realisation: {len(stack)} reductions, kernel {len(kernel)}")
    realisation = Realisation(SPARSE_DIMENSION, tuple(vectors), strict=True)
    return checked_realisation(G, labeling, realisation, "sparse3_realisation")

"""Oriented colourings read off an inversion sequence applied to a layered orientation."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from graphs.model import Graph, InversionSequence, Orientation
from graphs.operations import apply_sequence, is_proper_coloring
from constructions.coloring import is_oriented_coloring
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrientedColouring:
    """Classes as ``(colour, membership set)`` pairs and their dense numbering."""

    pairs: tuple[tuple[int, frozenset[int]], ...]
    coloring: tuple[int, ...]

    @property
    def classes(self) -> int:
        return len(set(self.coloring))


def oriented_colouring_from_sequence(
    G: Graph,
    O0: Orientation,
    phi: Sequence[int],
    sequence: InversionSequence,
) -> OrientedColouring:
    """``psi(v) = (phi(v), {i : v in X_i})`` is an oriented colouring of the result.

    An arc between classes ``(c, A)`` and ``(c2, A2)`` starts pointing up the
    layers and is reversed ``|A & A2|`` times, the same for every such arc.

    Raises:
        PreconditionError: If ``phi`` is not proper, ``O0`` is not layered by ``phi``,
            or the resulting colouring fails the homogeneity audit
    """
    O0.check_same_graph(Orientation.canonical(G))
    if len(phi) != G.n or not is_proper_coloring(G, list(phi)):
        raise PreconditionError("phi is not a proper colouring", hypothesis="proper colouring")
    for tail, head in O0.arcs():
        if phi[tail] >= phi[head]:
            raise PreconditionError(f"arc {tail}->{head} goes down the layers", hypothesis="layered orientation")
    sequence.validate(G.n)

    memberships = [frozenset(i for i, X in enumerate(sequence) if v in X) for v in range(G.n)]
    pairs: dict[tuple[int, frozenset[int]], int] = {}
    coloring = tuple(pairs.setdefault((phi[v], memberships[v]), len(pairs)) for v in range(G.n))
    target = apply_sequence(O0, sequence)
    if not is_oriented_coloring(target, coloring):
        raise PreconditionError("derived colouring is not homogeneous on the transformed orientation")
    limit = len(set(phi)) * (1 << len(sequence))
    logger.debug(f"oriented colouring with {len(pairs)} classes (at most {limit})")
    return OrientedColouring(tuple(pairs), coloring)

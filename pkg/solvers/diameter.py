"""Inversion diameter by exhaustive labeling enumeration.

The running maximum acts as a filter: a labeling is first tested at the
current maximum and only escalated when that single test fails.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from certificates.density import mad_lower_bound
from graphs.model import EdgeLabeling, Graph, Realisation
from solvers.exact import RealisationSearch, SolveOptions
from solvers.verify import verify_realisation
from utils.errors import InvariantViolation, PreconditionError, SizeGuardError

logger = logging.getLogger(__name__)

DEFAULT_MAX_EDGES = 25
PROGRESS_STEP = 4096


@dataclass(frozen=True)
class DiameterResult:
    """Diameter with an extremal labeling and its optimal realisation."""

    value: int
    labeling: EdgeLabeling
    witness: Realisation
    labelings_checked: int
    exceeded_threshold: bool = False


@dataclass(frozen=True)
class _ChunkOutcome:
    best: int
    mask: int
    vectors: tuple[int, ...]
    checked: int


def diameter_cap(graph: Graph) -> int:
    """Proven upper bound used to stop the enumeration early."""
    cap = max(graph.n - 1, 0)
    delta = graph.max_degree
    if delta >= 1:
        cap = min(cap, 2 * delta - 1)
    if delta <= 2:
        cap = min(cap, 2)
    elif delta == 3:
        cap = min(cap, 4)
    return cap


def is_dominant(mask: int, incidence_masks: tuple[int, ...]) -> bool:
    """Every non-isolated vertex sees at least one 1-edge."""
    return all(mask & im for im in incidence_masks if im)


def _diameter_chunk(
    graph: Graph,
    start: int,
    stop: int,
    opts: SolveOptions,
    deadline: Optional[float],
    cap: int,
    threshold: Optional[int],
    progress: Optional[Callable[[int], None]] = None,
) -> _ChunkOutcome:
    """Running-maximum scan over masks ``start..stop-1`` of a connected graph."""
    search = RealisationSearch(graph, opts.strict, deadline, opts.vertex_order)
    incidence = graph.incidence_masks
    best, best_mask, best_vectors = -1, 0, ()
    checked = 0
    for mask in range(start, stop):
        if progress is not None and (mask - start) % PROGRESS_STEP == PROGRESS_STEP - 1:
            progress(PROGRESS_STEP)
        if opts.dominance and not is_dominant(mask, incidence):
            continue
        checked += 1
        if best >= 0 and search.solve(mask, best) is not None:
            continue
        t = max(best + 1, 0)
        while True:
            if t > cap:
                raise InvariantViolation(f"labeling {mask:#x} exceeds the proven diameter cap {cap}", graph)
            vectors = search.solve(mask, t)
            if vectors is not None:
                break
            t += 1
        best, best_mask, best_vectors = t, mask, tuple(vectors)
        logger.debug(f"new maximum {best} at labeling {mask:#x}")
        if best >= cap or (threshold is not None and best > threshold):
            break
    return _ChunkOutcome(best, best_mask, best_vectors, checked)


def _chunk_worker(args: tuple) -> _ChunkOutcome:
    return _diameter_chunk(*args)


def _component_diameter(
    graph: Graph,
    opts: SolveOptions,
    deadline: Optional[float],
    threshold: Optional[int],
    progress: Optional[Callable[[int], None]],
) -> _ChunkOutcome:
    total = 1 << graph.m
    cap = diameter_cap(graph)
    chunks = opts.parallel_pi_chunks
    if chunks <= 1 or total < 2 * PROGRESS_STEP:
        return _diameter_chunk(graph, 0, total, opts, deadline, cap, threshold, progress)

    parts = chunks * 4
    bounds = [total * i // parts for i in range(parts + 1)]
    jobs = [(graph, bounds[i], bounds[i + 1], opts, deadline, cap, threshold) for i in range(parts)]
    logger.info(f"Splitting {total} labelings into {parts} chunks over {chunks} workers")
    outcomes = []
    with ProcessPoolExecutor(max_workers=chunks) as pool:
        for outcome, (lo, hi) in zip(pool.map(_chunk_worker, jobs), zip(bounds, bounds[1:])):
            outcomes.append(outcome)
            if progress is not None:
                progress(hi - lo)
    best = max(o.best for o in outcomes)
    # earliest chunk reaching the maximum, so the witness matches a serial run
    winner = next(o for o in outcomes if o.best == best)
    return _ChunkOutcome(best, winner.mask, winner.vectors, sum(o.checked for o in outcomes))


def inversion_diameter(
    graph: Graph,
    opts: Optional[SolveOptions] = None,
    max_edges: int = DEFAULT_MAX_EDGES,
    force: bool = False,
    threshold: Optional[int] = None,
    progress: Optional[Callable[[int], None]] = None,
) -> DiameterResult:
    """Maximum inversion distance over all labelings of ``graph``.

    Args:
        graph: Input graph (parallel edges always flip together, so the
            underlying simple graph is used)
        opts: Search options (``dominance``, ``parallel_pi_chunks``, budget)
        max_edges: Per-component edge guard
        force: Ignore the edge guard
        threshold: Stop as soon as the diameter is known to exceed this value
        progress: Callback receiving the number of labelings scanned

    Raises:
        SizeGuardError: If a component has more than ``max_edges`` edges
        BudgetExhausted: If the time budget runs out
    """
    opts = opts or SolveOptions()
    if opts.strict:
        raise PreconditionError("the diameter is defined for unrestricted realisations", hypothesis="strict=False")
    deadline = opts.deadline()
    simple = graph.simple()

    best: Optional[tuple[int, list[int], list[int], _ChunkOutcome]] = None
    checked = 0
    for comp in simple.components():
        sub, vmap, emap = simple.induced(comp)
        if sub.m == 0:
            continue
        if sub.m > max_edges and not force:
            raise SizeGuardError(
                f"component with {sub.m} edges needs 2^{sub.m} labelings",
                limit=max_edges,
                actual=sub.m,
            )
        logger.info(f"Enumerating component n={sub.n} m={sub.m} (cap {diameter_cap(sub)})")
        outcome = _component_diameter(sub, opts, deadline, threshold, progress)
        checked += outcome.checked
        if best is None or outcome.best > best[0]:
            best = (outcome.best, vmap, emap, outcome)
        if threshold is not None and outcome.best > threshold:
            break

    if best is None:
        return DiameterResult(0, EdgeLabeling.constant(graph, 0), Realisation(0, (0,) * graph.n), 1)

    value, vmap, emap, outcome = best
    simple_bits = 0
    for new, old in enumerate(emap):
        if outcome.mask >> new & 1:
            simple_bits |= 1 << old
    vectors = [0] * graph.n
    for new, old in enumerate(vmap):
        vectors[old] = outcome.vectors[new]
    witness = Realisation(value, tuple(vectors))

    labeling = _lift_labeling(graph, simple, simple_bits)
    if not verify_realisation(graph, labeling, witness):
        raise InvariantViolation("diameter witness does not realise the extremal labeling", graph)
    if value > max(graph.n - 1, 0):
        raise InvariantViolation(f"diameter {value} exceeds n - 1 = {graph.n - 1}", graph)
    exceeded = threshold is not None and value > threshold
    if not exceeded:
        floor = mad_lower_bound(simple)
        if value < floor:
            raise InvariantViolation(f"diameter {value} is below ceil(Mad / 2) = {floor}", graph)
    logger.info(f"inversion_diameter = {value} ({checked} labelings checked)")
    return DiameterResult(value, labeling, witness, checked, exceeded)


def _lift_labeling(graph: Graph, simple: Graph, simple_bits: int) -> EdgeLabeling:
    """Give every parallel edge the label of its merged edge."""
    if graph is simple:
        return EdgeLabeling(graph, simple_bits)
    index = {pair: i for i, pair in enumerate(simple.edges)}
    bits = 0
    for eid, (u, v) in enumerate(graph.edges):
        key = (u, v) if u < v else (v, u)
        if simple_bits >> index[key] & 1:
            bits |= 1 << eid
    return EdgeLabeling(graph, bits)

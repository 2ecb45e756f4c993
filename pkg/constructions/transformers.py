"""Transformation engines - one adapter per constructive bound"""

import logging
from typing import Optional, Sequence

from graphs.model import Graph, InversionSequence, Orientation, Realisation
from graphs.operations import disagreement, is_forest, is_star_forest
from certificates.density import mad_exact
from constructions.coloring import homogeneous_coloring_transform, homogeneous_refinement
from constructions.cycles import max_degree_two_transform
from constructions.discharging import SPARSE_MAD_THRESHOLD, sparse3_realisation
from constructions.elimination import elimination_transform, greedy_independent_set
from constructions.forests import forest_transform, star_forest_transform
from constructions.greedy import best_greedy_realisation
from constructions.ordering import STRATEGIES, build_ordering
from constructions.subcubic import subcubic_realisation
from constructions.transformer_base import TransformerBase
from utils.errors import PreconditionError

logger = logging.getLogger(__name__)


class ForestTransformer(TransformerBase):
    """Two inversions on forests, one on star forests"""

    name = "forest"
    description = "Contract disagreement components and 2-colour the agreeing forest between them."

    def applicable(self, graph: Graph) -> Optional[str]:
        return None if is_forest(graph) else "graph contains a cycle"

    def bound(self, graph: Graph) -> int:
        if graph.m == 0:
            return 0
        return 1 if is_star_forest(graph) else 2

    def transform(self, O1: Orientation, O2: Orientation) -> tuple[InversionSequence, Optional[Realisation]]:
        if is_star_forest(O1.graph):
            return star_forest_transform(O1.graph, O1, O2), None
        return forest_transform(O1.graph, O1, O2), None


class CycleTransformer(TransformerBase):
    """Two inversions when every vertex has degree at most two"""

    name = "cycle"
    description = "Paths and cycles handled componentwise, merged set by set."

    def applicable(self, graph: Graph) -> Optional[str]:
        if graph.max_degree > 2:
            return f"maximum degree {graph.max_degree} exceeds 2"
        if graph.multigraph and len(set(graph.edge_key())) != graph.m:
            return "parallel edges"
        return None

    def bound(self, graph: Graph) -> int:
        return min(2, graph.m)

    def transform(self, O1: Orientation, O2: Orientation) -> tuple[InversionSequence, Optional[Realisation]]:
        return max_degree_two_transform(O1.graph, O1, O2), None


class Sparse3Transformer(TransformerBase):
    """Strict 3-dimensional realisation below maximum average degree 2 + 8/11"""

    name = "sparse3"
    description = "Peel reducible configurations, then extend vectors of F2^3 back."

    def applicable(self, graph: Graph) -> Optional[str]:
        mad = mad_exact(graph.simple()).value
        return None if mad <= SPARSE_MAD_THRESHOLD else f"Mad = {mad} exceeds 30/11"

    def bound(self, graph: Graph) -> int:
        return 3

    def transform(self, O1: Orientation, O2: Orientation) -> tuple[InversionSequence, Optional[Realisation]]:
        realisation = sparse3_realisation(O1.graph, disagreement(O1, O2))
        return self.sequence_from_realisation(O1, O2, realisation, self.name), realisation


class SubcubicTransformer(TransformerBase):
    """4-dimensional realisation along a good ordering"""

    name = "subcubic"
    description = "Strip all-zero vertices, order by critical-edge surgery, assign greedily in F2^4."

    def applicable(self, graph: Graph) -> Optional[str]:
        return None if graph.max_degree <= 3 else f"maximum degree {graph.max_degree} exceeds 3"

    def bound(self, graph: Graph) -> int:
        return 4

    def transform(self, O1: Orientation, O2: Orientation) -> tuple[InversionSequence, Optional[Realisation]]:
        realisation = subcubic_realisation(O1.graph, disagreement(O1, O2))
        return self.sequence_from_realisation(O1, O2, realisation, self.name), realisation


class GreedyTransformer(TransformerBase):
    """Greedy assignment along the best t-strong ordering"""

    name = "greedy"
    description = "Identity, bipartite, degeneracy or tree-decomposition ordering, smallest guarantee wins."

    def __init__(self, strategies: Optional[Sequence[str]] = None):
        self.strategies = tuple(strategies or STRATEGIES)

    def applicable(self, graph: Graph) -> Optional[str]:
        return None

    def bound(self, graph: Graph) -> int:
        bounds = []
        for strategy in self.strategies:
            try:
                bounds.append(build_ordering(graph, strategy).t)
            except PreconditionError:
                continue
        return min(bounds)

    def transform(self, O1: Orientation, O2: Orientation) -> tuple[InversionSequence, Optional[Realisation]]:
        realisation, strategy = best_greedy_realisation(O1.graph, disagreement(O1, O2), self.strategies)
        logger.info(f"greedy transform used the {strategy} ordering")
        return self.sequence_from_realisation(O1, O2, realisation, self.name), realisation


class EliminationTransformer(TransformerBase):
    """One inversion per vertex outside a greedy independent set"""

    name = "elim"
    description = "Peel vertices in id order, stopping at an independent set."

    def applicable(self, graph: Graph) -> Optional[str]:
        return None

    def bound(self, graph: Graph) -> int:
        return graph.n - len(greedy_independent_set(graph)) if graph.n else 0

    def transform(self, O1: Orientation, O2: Orientation) -> tuple[InversionSequence, Optional[Realisation]]:
        return elimination_transform(O1.graph, O1, O2), None


class ColoringTransformer(TransformerBase):
    """k - 1 inversions from a homogeneous k-colouring"""

    name = "coloring"
    description = "Invert the last colour class with the classes it disagrees with, then drop it."

    def __init__(self, classes: Optional[Sequence[Sequence[int]]] = None):
        self.classes = [list(c) for c in classes] if classes is not None else None

    def applicable(self, graph: Graph) -> Optional[str]:
        return None

    def bound(self, graph: Graph) -> int:
        if self.classes is not None:
            return max(len(self.classes) - 1, 0)
        return max(graph.n - 1, 0)

    def transform(self, O1: Orientation, O2: Orientation) -> tuple[InversionSequence, Optional[Realisation]]:
        classes = self.classes
        if classes is None:
            classes = homogeneous_refinement(O1.graph, disagreement(O1, O2))
            logger.info(f"coloring transform refined to {len(classes)} homogeneous classes")
        return homogeneous_coloring_transform(O1.graph, O1, O2, classes), None


AVAILABLE_METHODS: dict[str, type[TransformerBase]] = {
    ForestTransformer.name: ForestTransformer,
    CycleTransformer.name: CycleTransformer,
    Sparse3Transformer.name: Sparse3Transformer,
    SubcubicTransformer.name: SubcubicTransformer,
    GreedyTransformer.name: GreedyTransformer,
    EliminationTransformer.name: EliminationTransformer,
    ColoringTransformer.name: ColoringTransformer,
}

# cheapest applicable engine first
AUTO_ORDER = ("forest", "cycle", "sparse3", "subcubic", "greedy", "elim")

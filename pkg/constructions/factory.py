"""
Transformer Factory - Provides a way to create and switch between transformation engines
"""

import logging

from graphs.model import Graph
from constructions.transformer_base import TransformerBase
from constructions.transformers import AUTO_ORDER, AVAILABLE_METHODS

logger = logging.getLogger(__name__)


class TransformFactory:
    """
    Factory class for creating transformation engines
    Allows easy switching between the constructive bounds
    """

    @staticmethod
    def create_transformer(method: str = "auto", graph: Graph | None = None, **kwargs) -> TransformerBase:
        """
        Create a transformation engine by method name

        Args:
            method: Engine name ('auto', 'forest', 'cycle', 'elim', 'greedy', 'subcubic', 'sparse3' or 'coloring')
            graph: Graph to choose for when method is 'auto'
            **kwargs: Engine-specific arguments (e.g. classes for 'coloring')

        Returns:
            Instance of TransformerBase

        Raises:
            ValueError: If method is not supported, or 'auto' is requested without a graph
        """
        method = method.lower()

        if method == "auto":
            if graph is None:
                raise ValueError("Automatic method selection needs the input graph")
            return TransformFactory.auto_select(graph)
        if method in AVAILABLE_METHODS:
            return AVAILABLE_METHODS[method](**kwargs)
        choices = ", ".join(["auto", *AVAILABLE_METHODS])
        raise ValueError(f"Unsupported transform method: {method}. Choose one of {choices}")

    @staticmethod
    def auto_select(graph: Graph) -> TransformerBase:
        """
        Pick the first applicable engine in AUTO_ORDER

        Returns:
            Instance of TransformerBase (elimination always applies)
        """
        for name in AUTO_ORDER:
            engine = AVAILABLE_METHODS[name]()
            reason = engine.applicable(graph)
            if reason is None:
                logger.info(f"auto selected '{name}' for n={graph.n}, m={graph.m}")
                return engine
            logger.debug(f"auto skipped '{name}': {reason}")
        return AVAILABLE_METHODS["elim"]()

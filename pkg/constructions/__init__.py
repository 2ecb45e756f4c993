"""Constructive upper bounds: each engine emits a verified inversion sequence."""

from constructions.factory import TransformFactory
from constructions.transformer_base import TransformerBase, TransformOutcome
from constructions.transformers import (
    AUTO_ORDER,
    AVAILABLE_METHODS,
    ColoringTransformer,
    CycleTransformer,
    EliminationTransformer,
    ForestTransformer,
    GreedyTransformer,
    Sparse3Transformer,
    SubcubicTransformer,
)

__all__ = [
    "TransformFactory",
    "TransformerBase",
    "TransformOutcome",
    "AUTO_ORDER",
    "AVAILABLE_METHODS",
    "ColoringTransformer",
    "CycleTransformer",
    "EliminationTransformer",
    "ForestTransformer",
    "GreedyTransformer",
    "Sparse3Transformer",
    "SubcubicTransformer",
]

"""Graphs, orientations, labelings and the inversion operation."""

from graphs.model import (
    EdgeLabeling,
    Graph,
    InversionSequence,
    Orientation,
    Realisation,
    vertex_mask,
)
from graphs.operations import (
    apply_sequence,
    disagreement,
    flip_mask,
    invert,
    is_forest,
    is_star_forest,
    labeling_to_orientation_pair,
    realisation_to_sequence,
    realised_labeling,
    sequence_to_realisation,
)
from graphs.generators import FAMILIES, GeneratedInstance, generate

__all__ = [
    "EdgeLabeling",
    "Graph",
    "InversionSequence",
    "Orientation",
    "Realisation",
    "vertex_mask",
    "apply_sequence",
    "disagreement",
    "flip_mask",
    "invert",
    "is_forest",
    "is_star_forest",
    "labeling_to_orientation_pair",
    "realisation_to_sequence",
    "realised_labeling",
    "sequence_to_realisation",
    "FAMILIES",
    "GeneratedInstance",
    "generate",
]

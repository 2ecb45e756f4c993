"""Colouring reduction, balanced orientations and oriented colourings."""

from reductions.chromatic import chromatic_number, optimal_coloring
from reductions.orientation import layered_orientation, min_indegree_orientation
from reductions.oriented import OrientedColouring, oriented_colouring_from_sequence
from reductions.storage import load_instance, save_instance
from reductions.subdivision import (
    AuditReport,
    ReductionInstance,
    audit_subdivision,
    colors_to_vectors,
    coloring_to_subdivision_realisation,
    subdivision_instance,
)

__all__ = [
    "chromatic_number",
    "optimal_coloring",
    "layered_orientation",
    "min_indegree_orientation",
    "OrientedColouring",
    "oriented_colouring_from_sequence",
    "load_instance",
    "save_instance",
    "AuditReport",
    "ReductionInstance",
    "audit_subdivision",
    "colors_to_vectors",
    "coloring_to_subdivision_realisation",
    "subdivision_instance",
]

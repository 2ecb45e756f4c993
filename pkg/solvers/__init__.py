"""Exact decision procedures, the BFS oracle and certificate verifiers."""

from solvers.diameter import DiameterResult, diameter_cap, inversion_diameter
from solvers.exact import (
    DistanceResult,
    RealisationSearch,
    SolveOptions,
    distance_one,
    inversion_distance,
    min_dimension,
    realisation_search,
)
from solvers.oracle import bfs_oracle, bfs_oracle_diameter, oracle_distance
from solvers.verify import verify_realisation, verify_sequence

__all__ = [
    "DiameterResult",
    "diameter_cap",
    "inversion_diameter",
    "DistanceResult",
    "RealisationSearch",
    "SolveOptions",
    "distance_one",
    "inversion_distance",
    "min_dimension",
    "realisation_search",
    "bfs_oracle",
    "bfs_oracle_diameter",
    "oracle_distance",
    "verify_realisation",
    "verify_sequence",
]

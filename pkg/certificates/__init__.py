"""Density machinery, lower-bound certificates and the bound reports."""

from certificates.density import DegeneracyResult, MadResult, degeneracy, mad_exact, mad_lower_bound
from certificates.lower_bounds import (
    EvenCycleCertificate,
    LowerBoundReport,
    LowerBoundWitness,
    MultipartiteCertificate,
    PigeonholeCertificate,
    classify_forest,
    even_cycle_deg3_bound,
    lower_bound_report,
    multipartite_hard_labeling,
    multipartite_rank,
    not_star_forest_witness,
    pigeonhole_bound,
)
from certificates.upper_bounds import UpperBound, UpperBoundReport, upper_bound_report

__all__ = [
    "DegeneracyResult",
    "MadResult",
    "degeneracy",
    "mad_exact",
    "mad_lower_bound",
    "EvenCycleCertificate",
    "LowerBoundReport",
    "LowerBoundWitness",
    "MultipartiteCertificate",
    "PigeonholeCertificate",
    "classify_forest",
    "even_cycle_deg3_bound",
    "lower_bound_report",
    "multipartite_hard_labeling",
    "multipartite_rank",
    "not_star_forest_witness",
    "pigeonhole_bound",
    "UpperBound",
    "UpperBoundReport",
    "upper_bound_report",
]

"""Linear algebra over F2 on packed integers."""

from algebra.f2 import (
    MAX_DIM,
    AffineSpace,
    F2Matrix,
    F2Vector,
    bits_to_string,
    dot,
    gram,
    gram_of_vectors,
    gray_points,
    in_span,
    in_span_bits,
    ortho_basis_of_complement,
    rank,
    rank_bits,
    solve_affine,
    solve_affine_bits,
    string_to_bits,
)

__all__ = [
    "MAX_DIM",
    "AffineSpace",
    "F2Matrix",
    "F2Vector",
    "bits_to_string",
    "dot",
    "gram",
    "gram_of_vectors",
    "gray_points",
    "in_span",
    "in_span_bits",
    "ortho_basis_of_complement",
    "rank",
    "rank_bits",
    "solve_affine",
    "solve_affine_bits",
    "string_to_bits",
]

#!/usr/bin/env python3
"""
F2 algebra tests: scalar products, ranks, affine systems and orthonormal bases
"""

import sys
from itertools import product

import numpy as np

from harness import TestResults, run_suite, section

from algebra.f2 import (
    F2Matrix,
    F2Vector,
    dot,
    gram_of_vectors,
    in_span,
    ortho_basis_of_complement,
    rank,
    solve_affine,
)
from utils.errors import DimensionCapError, PreconditionError


def test_dot_product(results: TestResults):
    """Scalar product is the parity of the common support"""
    section("Scalar product")
    try:
        cases = [((0b101, 0b111), 0), ((0b1, 0b11), 1), ((0, 0b1111), 0), ((0b1011, 0b1011), 1)]
        for (x, y), expected in cases:
            if dot(x, y) != expected:
                results.add_fail("Scalar product", f"dot({x:#b}, {y:#b}) = {dot(x, y)}, expected {expected}")
                return
        u, v = F2Vector.from_string("1100"), F2Vector.from_string("0110")
        if u.dot(v) != 1 or str(u ^ v) != "1010":
            results.add_fail("Scalar product", f"F2Vector ops gave {u.dot(v)} and {u ^ v}")
            return
        results.add_pass("Scalar product", f"{len(cases)} packed cases and vector ops")
    except Exception as e:
        results.add_fail("Scalar product", str(e))


def test_dimension_cap(results: TestResults):
    """Vectors wider than the word size are refused"""
    section("Dimension cap")
    try:
        try:
            F2Vector(65, 1)
        except DimensionCapError:
            results.add_pass("Dimension cap", "dim 65 rejected")
            return
        results.add_fail("Dimension cap", "F2Vector(65) was accepted")
    except Exception as e:
        results.add_fail("Dimension cap", str(e))


def test_rank_and_gram(results: TestResults):
    """Rank of identity, dependent rows and Gram matrices"""
    section("Rank and Gram")
    try:
        if rank(F2Matrix.identity(6)) != 6:
            results.add_fail("Rank and Gram", "identity(6) rank is not 6")
            return
        M = F2Matrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        if rank(M) != 2:
            results.add_fail("Rank and Gram", f"dependent rows gave rank {rank(M)}")
            return
        units = [1 << i for i in range(5)]
        G = gram_of_vectors(units, 5)
        if not np.array_equal(G.to_numpy(), np.eye(5, dtype=np.uint8)):
            results.add_fail("Rank and Gram", "Gram of unit vectors is not the identity")
            return
        # three copies of one odd vector: Gram is the all-ones 3x3 matrix, rank 1
        if gram_of_vectors([0b111, 0b111, 0b111], 3).rank() != 1:
            results.add_fail("Rank and Gram", "Gram of repeated vector has rank != 1")
            return
        results.add_pass("Rank and Gram")
    except Exception as e:
        results.add_fail("Rank and Gram", str(e))


def test_solve_affine_matches_enumeration(results: TestResults):
    """Solution sets agree with brute force on random small systems"""
    section("Affine systems")
    try:
        rng = np.random.default_rng(7)
        systems = 0
        for _ in range(300):
            t = int(rng.integers(1, 6))
            k = int(rng.integers(0, 5))
            rows = [F2Vector(t, int(rng.integers(0, 1 << t))) for _ in range(k)]
            rhs = [int(rng.integers(0, 2)) for _ in range(k)]
            space = solve_affine(rows, rhs, t)
            brute = {x for x in range(1 << t) if all(dot(r.bits, x) == b for r, b in zip(rows, rhs))}
            found = {p.bits for p in space}
            if found != brute:
                results.add_fail("Affine systems", f"t={t} rows={[r.bits for r in rows]} rhs={rhs}: {sorted(found)} != {sorted(brute)}")
                return
            if brute and any(F2Vector(t, x) not in space for x in brute):
                results.add_fail("Affine systems", "membership test disagrees with the enumeration")
                return
            systems += 1
        results.add_pass("Affine systems", f"{systems} random systems")
    except Exception as e:
        results.add_fail("Affine systems", str(e))


def test_in_span(results: TestResults):
    section("Span membership")
    try:
        basis = [F2Vector.from_string("1100"), F2Vector.from_string("0110")]
        if not in_span(basis, F2Vector.from_string("1010")) or in_span(basis, F2Vector.from_string("0001")):
            results.add_fail("Span membership", "wrong membership answer")
            return
        results.add_pass("Span membership")
    except Exception as e:
        results.add_fail("Span membership", str(e))


def test_ortho_basis_exhaustive(results: TestResults):
    """Every odd-weight, non-full vector of F2^2..F2^10 gets an orthonormal complement basis"""
    section("Orthonormal complement bases")
    try:
        checked = 0
        for t in range(2, 11):
            for bits in range(1, 1 << t):
                weight = bits.bit_count()
                if weight % 2 == 0 or weight == t:
                    continue
                u = F2Vector(t, bits)
                basis = ortho_basis_of_complement(u)
                if len(basis) != t - 1:
                    results.add_fail("Orthonormal complement bases", f"{u}: {len(basis)} vectors, expected {t - 1}")
                    return
                for i, b in enumerate(basis):
                    if b.dot(b) != 1 or b.dot(u) != 0:
                        results.add_fail("Orthonormal complement bases", f"{u}: vector {b} not unit or not orthogonal to u")
                        return
                    if any(b.dot(c) for c in basis[i + 1 :]):
                        results.add_fail("Orthonormal complement bases", f"{u}: basis vectors not pairwise orthogonal")
                        return
                if rank(F2Matrix(tuple(basis), t)) != t - 1:
                    results.add_fail("Orthonormal complement bases", f"{u}: basis is dependent")
                    return
                checked += 1
        results.add_pass("Orthonormal complement bases", f"{checked} vectors")
    except Exception as e:
        results.add_fail("Orthonormal complement bases", str(e))


def test_ortho_basis_rejects_bad_input(results: TestResults):
    section("Orthonormal basis preconditions")
    try:
        for text in ("1100", "1111", "1"):
            try:
                ortho_basis_of_complement(F2Vector.from_string(text))
            except PreconditionError:
                continue
            results.add_fail("Orthonormal basis preconditions", f"{text} was accepted")
            return
        results.add_pass("Orthonormal basis preconditions", "even weight, full support and dim 1 rejected")
    except Exception as e:
        results.add_fail("Orthonormal basis preconditions", str(e))


def test_affine_space_size(results: TestResults):
    """An empty system over F2^t has 2^t solutions"""
    section("Affine space size")
    try:
        for t in range(0, 5):
            space = solve_affine([], [], t)
            expected = {x for x in product(range(2), repeat=t)}
            if len(space) != len(expected):
                results.add_fail("Affine space size", f"t={t}: {len(space)} points")
                return
        results.add_pass("Affine space size")
    except Exception as e:
        results.add_fail("Affine space size", str(e))


TESTS = [
    test_dot_product,
    test_dimension_cap,
    test_rank_and_gram,
    test_solve_affine_matches_enumeration,
    test_in_span,
    test_ortho_basis_exhaustive,
    test_ortho_basis_rejects_bad_input,
    test_affine_space_size,
]


def main():
    return run_suite("F2 algebra", TESTS)


if __name__ == "__main__":
    sys.exit(main())

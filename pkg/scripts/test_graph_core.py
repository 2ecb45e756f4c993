#!/usr/bin/env python3
"""
Graph core tests: value types, text formats, inversions and the generators
"""

import sys
from itertools import combinations_with_replacement, permutations

import numpy as np

from harness import TestResults, random_pair, run_suite, section

from graphs.generators import complete_multipartite, generate, pendant_cycle, petersen, subdivide_once, wheel
from graphs.io import (
    parse_graph,
    parse_labeling,
    parse_orientation,
    parse_realisation,
    parse_sequence,
    serialize_graph,
    serialize_graph6,
    serialize_orientation,
    serialize_realisation,
)
from graphs.model import EdgeLabeling, Graph, InversionSequence, Orientation, Realisation
from graphs.operations import (
    apply_sequence,
    disagreement,
    drop_idle_sets,
    invert,
    is_forest,
    is_star_forest,
    lift_sequence,
    realisation_to_sequence,
    realised_labeling,
    restrict_pair,
    sequence_to_realisation,
)
from utils.errors import GraphFormatError, GraphMismatchError, PreconditionError


def test_graph_validation(results: TestResults):
    """Loops, out-of-range endpoints and undeclared parallel edges are refused"""
    section("Graph validation")
    try:
        bad = [
            lambda: Graph(2, ((0, 0),)),
            lambda: Graph(2, ((0, 2),)),
            lambda: Graph(3, ((0, 1), (1, 0))),
        ]
        for i, build in enumerate(bad):
            try:
                build()
            except PreconditionError:
                continue
            results.add_fail("Graph validation", f"case {i} was accepted")
            return
        multi = Graph(3, ((0, 1), (1, 0), (1, 2)), multigraph=True)
        if multi.edge_ids(0, 1) != (0, 1) or multi.simple().m != 2:
            results.add_fail("Graph validation", f"multigraph edge ids {multi.edge_ids(0, 1)}, simple m={multi.simple().m}")
            return
        results.add_pass("Graph validation", "3 malformed graphs refused, multigraph accepted")
    except Exception as e:
        results.add_fail("Graph validation", str(e))


def test_edge_list_parsing(results: TestResults):
    """Comments are skipped and malformed lines report their number"""
    section("Edge list parsing")
    try:
        text = "# triangle with a tail\n4\n0 1\n1 2  # inline comment\n2 0\n\n2 3\n"
        g = parse_graph(text)
        if g.n != 4 or g.m != 4 or parse_graph(serialize_graph(g)) != g:
            results.add_fail("Edge list parsing", f"parsed {g!r}")
            return
        try:
            parse_graph("3\n0 1\n1 x\n")
        except GraphFormatError as e:
            if e.line != 3:
                results.add_fail("Edge list parsing", f"error reported line {e.line}, expected 3")
                return
        else:
            results.add_fail("Edge list parsing", "non-integer token accepted")
            return
        for text in ("3\n0 3\n", "2\n1 1\n", "3\n0 1\n1 0\n", ""):
            try:
                parse_graph(text)
            except GraphFormatError:
                continue
            results.add_fail("Edge list parsing", f"{text!r} accepted")
            return
        results.add_pass("Edge list parsing")
    except Exception as e:
        results.add_fail("Edge list parsing", str(e))


def test_graph6(results: TestResults):
    section("graph6")
    try:
        g = petersen()
        again = parse_graph(serialize_graph6(g) + "\n")
        if again.edge_key() != g.edge_key():
            results.add_fail("graph6", "Petersen graph changed through graph6")
            return
        star4 = parse_graph("D?{\n")
        if star4.edge_key() != parse_graph("5\n0 4\n1 4\n2 4\n3 4\n").edge_key():
            results.add_fail("graph6", f"D?{{ parsed to {star4.edges}")
            return
        results.add_pass("graph6", "Petersen graph survives graph6, D?{ is the 4-star")
    except Exception as e:
        results.add_fail("graph6", str(e))


def test_orientation_and_labeling_files(results: TestResults):
    """Arcs map onto edge ids, parallel arcs fill parallel ids in order"""
    section("Orientation and labeling files")
    try:
        g = Graph(3, ((0, 1), (1, 2), (1, 0)), multigraph=True)
        O = parse_orientation("3\n1 0\n1 2\n0 1\n", g)
        if O.arcs() != [(1, 0), (1, 2), (0, 1)]:
            results.add_fail("Orientation and labeling files", f"arcs {O.arcs()}")
            return
        if parse_orientation(serialize_orientation(O), g) != O:
            results.add_fail("Orientation and labeling files", "orientation text changed the bits")
            return
        lab = parse_labeling("0 1 1\n1 2 0\n1 0 0\n", g)
        if lab.values() != [1, 0, 0]:
            results.add_fail("Orientation and labeling files", f"labels {lab.values()}")
            return
        try:
            parse_orientation("3\n0 2\n1 2\n0 1\n", g)
        except (GraphFormatError, GraphMismatchError):
            pass
        else:
            results.add_fail("Orientation and labeling files", "arc without an edge accepted")
            return
        try:
            parse_labeling("0 1 1\n1 2 0\n", g)
        except GraphFormatError:
            pass
        else:
            results.add_fail("Orientation and labeling files", "labeling with a missing edge accepted")
            return
        results.add_pass("Orientation and labeling files")
    except Exception as e:
        results.add_fail("Orientation and labeling files", str(e))


def test_sequence_and_realisation_files(results: TestResults):
    section("Sequence and realisation files")
    try:
        seq = parse_sequence("0 1\n\n# comment\n2\n", 3)
        if [sorted(X) for X in seq] != [[0, 1], [], [2]]:
            results.add_fail("Sequence and realisation files", f"sets {[sorted(X) for X in seq]}")
            return
        R = parse_realisation("3 2\n101\n011\n")
        if R.vectors != (0b101, 0b110) or parse_realisation(serialize_realisation(R)) != R:
            results.add_fail("Sequence and realisation files", f"vectors {R.vectors}")
            return
        for text in ("2 2\n10\n", "2 1\n1a\n", "2 1 strict\n00\n"):
            try:
                parse_realisation(text)
            except GraphFormatError:
                continue
            results.add_fail("Sequence and realisation files", f"{text!r} accepted")
            return
        results.add_pass("Sequence and realisation files")
    except Exception as e:
        results.add_fail("Sequence and realisation files", str(e))


def test_invert_reverses_inner_arcs(results: TestResults):
    """Only arcs with both ends in the set change direction"""
    section("Inversion")
    try:
        g = Graph(4, ((0, 1), (1, 2), (2, 3), (0, 2)))
        O = Orientation.canonical(g)
        flipped = invert(O, {0, 1, 2})
        if flipped.arcs() != [(1, 0), (2, 1), (2, 3), (2, 0)]:
            results.add_fail("Inversion", f"arcs {flipped.arcs()}")
            return
        if invert(flipped, {0, 1, 2}) != O:
            results.add_fail("Inversion", "inverting twice is not the identity")
            return
        if invert(O, {3}) != O:
            results.add_fail("Inversion", "singleton inversion changed an arc")
            return
        results.add_pass("Inversion")
    except Exception as e:
        results.add_fail("Inversion", str(e))


def test_sequence_order_is_irrelevant(results: TestResults):
    """Every reordering of up to three inversion sets yields the same orientation"""
    section("Sequence order")
    try:
        rng = np.random.default_rng(12)
        cases = 0
        for g in (generate("path", 4).graph, generate("complete", 5).graph, petersen().induced(range(5))[0]):
            O = random_pair(g, rng)[0]
            subsets = range(1 << g.n)
            for length in (2, 3):
                for masks in combinations_with_replacement(subsets, length):
                    sets = [[v for v in range(g.n) if mask >> v & 1] for mask in masks]
                    expected = apply_sequence(O, InversionSequence.from_sets(sets))
                    for order in permutations(sets):
                        if apply_sequence(O, InversionSequence.from_sets(order)) != expected:
                            results.add_fail("Sequence order", f"{g!r}: order {order} differs")
                            return
                    cases += 1
        results.add_pass("Sequence order", f"{cases} unordered sequences")
    except Exception as e:
        results.add_fail("Sequence order", str(e))


def test_flip_parity_matches_scalar_products(results: TestResults):
    """Applying the coordinate sets of a realisation flips exactly the edges with product 1"""
    section("Flip parity")
    try:
        rng = np.random.default_rng(11)
        for trial in range(200):
            n = int(rng.integers(2, 9))
            g = generate("random_graph", n, 0.5, seed=trial).graph
            t = int(rng.integers(1, 5))
            R = Realisation(t, tuple(int(x) for x in rng.integers(0, 1 << t, size=n)))
            O1 = Orientation(g, 0)
            O2 = apply_sequence(O1, realisation_to_sequence(R))
            if disagreement(O1, O2) != realised_labeling(g, R):
                results.add_fail("Flip parity", f"trial {trial}: flipped edges differ from scalar products")
                return
            if sequence_to_realisation(realisation_to_sequence(R), n) != R:
                results.add_fail("Flip parity", f"trial {trial}: sequence and realisation disagree")
                return
        results.add_pass("Flip parity", "200 random realisations")
    except Exception as e:
        results.add_fail("Flip parity", str(e))


def test_restrict_and_lift(results: TestResults):
    """A sequence found on an induced subgraph lifts back to the host"""
    section("Restrict and lift")
    try:
        rng = np.random.default_rng(3)
        g = petersen()
        O1, O2 = random_pair(g, rng)
        part = [0, 2, 4, 5, 7]
        sub, vmap, P1, P2 = restrict_pair(O1, O2, part)
        seq = realisation_to_sequence(Realisation(sub.n, tuple(1 << i for i in range(sub.n))))
        lifted = lift_sequence(seq, vmap)
        if any(not X <= set(part) for X in lifted):
            results.add_fail("Restrict and lift", "lifted sets leave the subgraph")
            return
        if len(drop_idle_sets(sub, seq)) != 0:
            results.add_fail("Restrict and lift", "singleton sets should flip nothing")
            return
        if sub.m != sum(1 for u, v in g.edges if u in part and v in part):
            results.add_fail("Restrict and lift", "induced subgraph has the wrong edges")
            return
        results.add_pass("Restrict and lift")
    except Exception as e:
        results.add_fail("Restrict and lift", str(e))


def test_mismatched_graphs(results: TestResults):
    section("Mismatched graphs")
    try:
        a, b = Orientation.canonical(Graph(3, ((0, 1),))), Orientation.canonical(Graph(3, ((1, 2),)))
        try:
            disagreement(a, b)
        except GraphMismatchError:
            results.add_pass("Mismatched graphs")
            return
        results.add_fail("Mismatched graphs", "orientations of different graphs compared")
    except Exception as e:
        results.add_fail("Mismatched graphs", str(e))


def test_forest_predicates(results: TestResults):
    section("Forest predicates")
    try:
        star = generate("star", 4).graph
        path = generate("path", 4).graph
        doubled = Graph(2, ((0, 1), (0, 1)), multigraph=True)
        checks = [
            (is_forest(star) and is_star_forest(star), "star"),
            (is_forest(path) and not is_star_forest(path), "P4"),
            (not is_forest(generate("cycle", 4).graph), "C4"),
            (not is_forest(doubled), "double edge"),
        ]
        for ok, name in checks:
            if not ok:
                results.add_fail("Forest predicates", f"wrong answer for {name}")
                return
        results.add_pass("Forest predicates", f"{len(checks)} graphs")
    except Exception as e:
        results.add_fail("Forest predicates", str(e))


def test_generators(results: TestResults):
    """Deterministic families have the advertised shape"""
    section("Generators")
    try:
        km = complete_multipartite(3, 2)
        if km.n != 6 or km.m != 12:
            results.add_fail("Generators", f"K_3[2] has n={km.n} m={km.m}")
            return
        base = Graph(3, ((0, 1), (1, 2)))
        sub = subdivide_once(base)
        if sub.edges != ((0, 3), (3, 1), (1, 4), (4, 2)):
            results.add_fail("Generators", f"subdivision edges {sub.edges}")
            return
        pc = pendant_cycle(8)
        if pc.n != 16 or pc.m != 16 or sorted(pc.degrees) != [1] * 8 + [3] * 8:
            results.add_fail("Generators", "pendant cycle has the wrong degrees")
            return
        w = wheel(5)
        if w.degree(0) != 5 or w.m != 10:
            results.add_fail("Generators", f"wheel hub degree {w.degree(0)}, m={w.m}")
            return
        inst = generate("multipartite", "2", "2")
        if inst.labeling is None or sum(inst.labeling.values()) != 2:
            results.add_fail("Generators", "multipartite family lost its labeling")
            return
        first = generate("random_graph", 8, 0.4, seed=5).graph
        if generate("random_graph", 8, 0.4, seed=5).graph != first:
            results.add_fail("Generators", "seeded family is not reproducible")
            return
        try:
            generate("no_such_family")
        except ValueError:
            pass
        else:
            results.add_fail("Generators", "unknown family accepted")
            return
        results.add_pass("Generators")
    except Exception as e:
        results.add_fail("Generators", str(e))


def test_labeling_bounds(results: TestResults):
    section("Labeling bounds")
    try:
        g = Graph(3, ((0, 1), (1, 2)))
        try:
            EdgeLabeling(g, 0b100)
        except PreconditionError:
            pass
        else:
            results.add_fail("Labeling bounds", "bit beyond the last edge accepted")
            return
        try:
            InversionSequence.from_sets([{0, 5}]).validate(3)
        except PreconditionError:
            results.add_pass("Labeling bounds")
            return
        results.add_fail("Labeling bounds", "sequence with vertex 5 validated on 3 vertices")
    except Exception as e:
        results.add_fail("Labeling bounds", str(e))


TESTS = [
    test_graph_validation,
    test_edge_list_parsing,
    test_graph6,
    test_orientation_and_labeling_files,
    test_sequence_and_realisation_files,
    test_invert_reverses_inner_arcs,
    test_sequence_order_is_irrelevant,
    test_flip_parity_matches_scalar_products,
    test_restrict_and_lift,
    test_mismatched_graphs,
    test_forest_predicates,
    test_generators,
    test_labeling_bounds,
]


def main():
    return run_suite("Graph core", TESTS)


if __name__ == "__main__":
    sys.exit(main())

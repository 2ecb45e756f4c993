#!/usr/bin/env python3
"""
Certificate tests: density, forest trichotomy, even cycles, pigeonhole and the bound reports
"""

import sys
from fractions import Fraction
from itertools import combinations
from typing import Iterator

import networkx as nx
import numpy as np

from harness import TestResults, run_suite, section

from certificates import (
    classify_forest,
    degeneracy,
    even_cycle_deg3_bound,
    lower_bound_report,
    mad_exact,
    not_star_forest_witness,
    pigeonhole_bound,
    upper_bound_report,
)
from certificates.lower_bounds import check_even_cycle
from graphs.generators import complete, cycle, generate, path, pendant_cycle, petersen, star
from graphs.model import Graph
from graphs.operations import disagreement
from solvers.diameter import inversion_diameter
from solvers.exact import realisation_search
from utils.errors import SizeGuardError
from utils.settings import extended_checks_enabled


def brute_force_mad(g: Graph) -> Fraction:
    best = Fraction(0)
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            chosen = set(subset)
            inside = sum(1 for u, v in g.edges if u in chosen and v in chosen)
            best = max(best, Fraction(2 * inside, size))
    return best


def test_mad_matches_brute_force(results: TestResults):
    """Parametric min-cut agrees with subset enumeration"""
    section("Maximum average degree")
    try:
        rng = np.random.default_rng(21)
        for run in range(80):
            g = generate("random_graph", int(rng.integers(1, 9)), float(rng.uniform(0.1, 0.9)), seed=run).graph
            exact = mad_exact(g)
            expected = brute_force_mad(g)
            if exact.value != expected:
                results.add_fail("Maximum average degree", f"run {run}: {exact.value} != {expected}")
                return
            if g.m:
                chosen = set(exact.subgraph)
                inside = sum(1 for u, v in g.edges if u in chosen and v in chosen)
                if Fraction(2 * inside, len(chosen)) != exact.value:
                    results.add_fail("Maximum average degree", f"run {run}: subgraph does not attain the value")
                    return
        if mad_exact(pendant_cycle(8)).value != 2 or mad_exact(complete(5)).value != 4:
            results.add_fail("Maximum average degree", "wrong value on a named graph")
            return
        results.add_pass("Maximum average degree", "80 random graphs")
    except Exception as e:
        results.add_fail("Maximum average degree", str(e))


def test_degeneracy(results: TestResults):
    """Degeneracy equals the largest core number and its ordering is valid"""
    section("Degeneracy")
    try:
        for run in range(50):
            g = generate("random_graph", 10, 0.4, seed=run).graph
            result = degeneracy(g)
            cores = nx.core_number(g.to_networkx())
            if result.value != max(cores.values(), default=0):
                results.add_fail("Degeneracy", f"run {run}: {result.value} vs core number {max(cores.values())}")
                return
            position = {v: i for i, v in enumerate(result.ordering)}
            for v in range(g.n):
                earlier = sum(1 for w in g.adjacency[v] if position[w] < position[v])
                if earlier > result.value:
                    results.add_fail("Degeneracy", f"run {run}: vertex {v} has {earlier} earlier neighbours")
                    return
        results.add_pass("Degeneracy", "50 random graphs")
    except Exception as e:
        results.add_fail("Degeneracy", str(e))


def test_forest_trichotomy(results: TestResults):
    """The forest class equals the exact diameter"""
    section("Forest trichotomy")
    try:
        rng = np.random.default_rng(22)
        counts = {0: 0, 1: 0, 2: 0}
        for run in range(200):
            n = int(rng.integers(1, 11))
            g = generate("random_forest", n, int(rng.integers(1, n + 1)), seed=run).graph
            label = classify_forest(g)
            exact = inversion_diameter(g).value
            if label != exact:
                results.add_fail("Forest trichotomy", f"run {run} {g.edges}: class {label}, diameter {exact}")
                return
            counts[label] += 1
        if classify_forest(cycle(4)) is not None:
            results.add_fail("Forest trichotomy", "C4 classified as a forest")
            return
        results.add_pass("Forest trichotomy", f"classes seen {counts}")
    except Exception as e:
        results.add_fail("Forest trichotomy", str(e))


def test_star_forest_obstruction(results: TestResults):
    """A P4 or a triangle is found exactly when the graph is not a star forest"""
    section("Star forest obstruction")
    try:
        if not_star_forest_witness(star(5)) is not None:
            results.add_fail("Star forest obstruction", "witness found in a star")
            return
        a, b, c, d = not_star_forest_witness(path(4))
        g = path(4)
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)):
            results.add_fail("Star forest obstruction", f"({a}, {b}, {c}, {d}) is not a path")
            return
        triangle = not_star_forest_witness(complete(3))
        if triangle is None or len(set(triangle)) != 3:
            results.add_fail("Star forest obstruction", f"triangle witness {triangle}")
            return
        results.add_pass("Star forest obstruction")
    except Exception as e:
        results.add_fail("Star forest obstruction", str(e))


def _min_degree_three_graphs() -> tuple[list[Graph], Iterator[Graph]]:
    """Connected graphs of minimum degree 3: the atlas up to 7 vertices, then every 8-vertex one.

    Deleting a vertex of an 8-vertex graph of minimum degree 3 leaves an atlas
    graph of minimum degree 2, so the 8-vertex graphs are swept (with isomorphic
    repeats) as such a graph plus a vertex joined to all of its degree-2
    vertices and to at least three vertices overall.
    """
    small, bases = [], []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n < 4:
            continue
        low = min(d for _, d in G.degree())
        if low >= 3 and nx.is_connected(G):
            small.append(Graph.from_networkx(G))
        if n == 7 and low >= 2:
            bases.append(Graph.from_networkx(G))

    def extensions() -> Iterator[Graph]:
        for base in bases:
            forced = [v for v in range(7) if base.degrees[v] == 2]
            free = [v for v in range(7) if base.degrees[v] > 2]
            for size in range(len(free) + 1):
                for extra in combinations(free, size):
                    joined = forced + list(extra)
                    if len(joined) < 3:
                        continue
                    g = Graph(8, base.edges + tuple((v, 7) for v in joined))
                    if nx.is_connected(g.to_networkx()):
                        yield g

    return small, extensions()


def test_even_cycle_certificates(results: TestResults):
    """Every connected graph of minimum degree 3 on at most 8 vertices yields a checked even-cycle certificate"""
    section("Even cycle certificates")
    try:
        small, larger = _min_degree_three_graphs()
        confirmed = 0
        for g in small:
            cert = even_cycle_deg3_bound(g)
            if cert is None or not check_even_cycle(g, cert):
                results.add_fail("Even cycle certificates", f"{g.edges}: no valid even cycle")
                return
            if g.m <= 16:
                if realisation_search(g, cert.labeling, 2) is not None:
                    results.add_fail("Even cycle certificates", f"{g.edges}: labeling realised in dimension 2")
                    return
                confirmed += 1
        swept = 0
        for g in larger:
            cert = even_cycle_deg3_bound(g)
            if cert is None or not check_even_cycle(g, cert):
                results.add_fail("Even cycle certificates", f"{g.edges}: no valid even cycle")
                return
            swept += 1
        if even_cycle_deg3_bound(pendant_cycle(8)) is None:
            results.add_fail("Even cycle certificates", "pendant cycle has no certificate")
            return
        if even_cycle_deg3_bound(cycle(6)) is not None:
            results.add_fail("Even cycle certificates", "certificate on a graph of maximum degree 2")
            return
        results.tally("even-cycle certificates", len(small) + swept)
        results.add_pass(
            "Even cycle certificates",
            f"{len(small)} graphs up to 7 vertices ({confirmed} confirmed by the search), {swept} 8-vertex extensions",
        )
    except Exception as e:
        results.add_fail("Even cycle certificates", str(e))


def test_pigeonhole(results: TestResults):
    """Subdivided cliques carry a pair at distance at least ell"""
    section("Pigeonhole bound")
    try:
        levels = (1, 2, 3)
        for ell in levels:
            cert = pigeonhole_bound(ell)
            if cert.originals != (1 << (ell - 1)) + 1:
                results.add_fail("Pigeonhole bound", f"ell={ell}: clique of order {cert.originals}")
                return
            if realisation_search(cert.graph, disagreement(cert.O1, cert.O2), ell - 1) is not None:
                results.add_fail("Pigeonhole bound", f"ell={ell}: pair at distance below {ell}")
                return
        try:
            pigeonhole_bound(5)
        except SizeGuardError:
            pass
        else:
            results.add_fail("Pigeonhole bound", "clique above the guard accepted")
            return
        results.add_pass("Pigeonhole bound", f"ell in {levels}")
    except Exception as e:
        results.add_fail("Pigeonhole bound", str(e))


def test_reports_bracket_the_diameter(results: TestResults):
    """LOWER <= exact diameter <= UPPER on small random graphs"""
    section("Bound reports")
    try:
        rng = np.random.default_rng(23)
        graphs = [petersen(), pendant_cycle(8), complete(5)]
        for run in range(25):
            graphs.append(generate("random_graph", int(rng.integers(2, 8)), float(rng.uniform(0.2, 0.8)), seed=run).graph)
        exact_checked = 0
        for g in graphs:
            lower = lower_bound_report(g).best
            upper = upper_bound_report(g).best
            if lower > upper:
                results.add_fail("Bound reports", f"{g!r}: lower {lower} > upper {upper}")
                return
            if g.m <= 12:
                value = inversion_diameter(g).value
                if not lower <= value <= upper:
                    results.add_fail("Bound reports", f"{g.edges}: {lower} <= {value} <= {upper} fails")
                    return
                exact_checked += 1
        pc_lower, pc_upper = lower_bound_report(pendant_cycle(8)).best, upper_bound_report(pendant_cycle(8)).best
        if (pc_lower, pc_upper) != (3, 3):
            results.add_fail("Bound reports", f"pendant cycle brackets [{pc_lower}, {pc_upper}], expected [3, 3]")
            return
        results.add_pass("Bound reports", f"{len(graphs)} graphs, {exact_checked} against the exact diameter")
    except Exception as e:
        results.add_fail("Bound reports", str(e))


def test_solver_check_and_lines(results: TestResults):
    """Labeling witnesses can be confirmed by the search; lines are machine-readable"""
    section("Report lines")
    try:
        report = lower_bound_report(complete(4), solver_check=True)
        clique = next(w for w in report.witnesses if w.rule == "clique")
        if clique.bound != 3 or clique.basis != "solver":
            results.add_fail("Report lines", f"clique witness {clique}")
            return
        if not all(line.startswith("RULE ") and " BOUND " in line for line in report.lines()):
            results.add_fail("Report lines", f"bad lines {report.lines()}")
            return
        upper = upper_bound_report(complete(4))
        if upper.best_rule.bound != upper.best or upper.best != 3:
            results.add_fail("Report lines", f"K4 upper bound {upper.best}")
            return
        if lower_bound_report(Graph(3)).best != 0 or upper_bound_report(Graph(3)).best != 0:
            results.add_fail("Report lines", "edgeless graph not bracketed by 0")
            return
        results.add_pass("Report lines")
    except Exception as e:
        results.add_fail("Report lines", str(e))


def test_five_regular_upper_bound(results: TestResults):
    """The 5-regular figure: exact distance of its labeling within the reported bracket"""
    section("5-regular bracket")
    try:
        if not extended_checks_enabled():
            results.add_skip("5-regular bracket", "set INVDIAM_EXTENDED=1")
            return
        inst = generate("fig_5regular")
        lower, upper = lower_bound_report(inst.graph).best, upper_bound_report(inst.graph).best
        if not 4 <= lower <= upper:
            results.add_fail("5-regular bracket", f"bracket [{lower}, {upper}]")
            return
        results.add_pass("5-regular bracket", f"[{lower}, {upper}]")
    except Exception as e:
        results.add_fail("5-regular bracket", str(e))


TESTS = [
    test_mad_matches_brute_force,
    test_degeneracy,
    test_forest_trichotomy,
    test_star_forest_obstruction,
    test_even_cycle_certificates,
    test_pigeonhole,
    test_reports_bracket_the_diameter,
    test_solver_check_and_lines,
    test_five_regular_upper_bound,
]


def main():
    return run_suite("Certificates", TESTS)


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python
"""Tests for cliques, Delsarte cliques and geometric decompositions."""

import os
import sys
import unittest

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.walkreg.clique_geometry import (
    ExactCoverSolver,
    check_lines_per_vertex,
    clique_profile,
    clique_rank_check,
    delsarte_bound,
    delsarte_cliques,
    dual_graph,
    finiteness_bounds,
    geometric_decomposition,
    geometric_sufficiency,
    is_clique,
    is_delsarte_clique,
    local_coclique_bound,
    maximal_cliques,
    phi_prediction,
    smallest_idempotent,
)
from src.walkreg.config_manager import AnalysisConfig
from src.walkreg.errors import BudgetExceeded, PreconditionError
from src.walkreg.graph_core import catalog, metrics
from src.walkreg.models import GeometricStatus, SufficiencyVerdict
from src.walkreg.spectral import minimal_idempotents, spectrum

from graph_fixtures import corpus, two_diamonds


class TestCliques(unittest.TestCase):
    """Test cases for clique enumeration and the Delsarte bound"""

    def test_octahedron_triangles(self):
        cliques = maximal_cliques(catalog("octahedron"))
        self.assertEqual(len(cliques), 8)
        self.assertEqual(cliques.clique_number, 3)
        self.assertEqual(cliques.size_histogram(), {3: 8})
        self.assertEqual(cliques.cliques[0], (0, 2, 4))

    def test_clique_cap(self):
        with self.assertRaises(BudgetExceeded):
            maximal_cliques(catalog("petersen"), cap=5)

    def test_is_clique(self):
        g = catalog("rook", [3])
        self.assertTrue(is_clique(g, [0, 1, 2]))
        self.assertFalse(is_clique(g, [0, 1, 3]))

    def test_delsarte_bound(self):
        bound = delsarte_bound(3, -2.0)
        self.assertAlmostEqual(bound.bound, 2.5)
        self.assertIsNone(bound.integer_candidate)
        self.assertEqual(delsarte_bound(4, -2.0).integer_candidate, 3)
        with self.assertRaises(PreconditionError):
            delsarte_bound(3, 0.0)

    def test_delsarte_clique_membership(self):
        g = catalog("rook", [3])
        e_min = smallest_idempotent(g)
        self.assertTrue(is_delsarte_clique(g, e_min, (0, 1, 2)))
        with self.assertRaises(PreconditionError):
            is_delsarte_clique(g, e_min, (0, 4))

    def test_clique_number_can_exceed_the_bound_below_order_one(self):
        """K2 x K2 x K6 is only 0-walk-regular and has 6-cliques above 1 - k/theta_d"""
        g = corpus()["K_2x2x6"]
        theta_d = spectrum(g).values[-1]
        self.assertAlmostEqual(theta_d, -3.0, places=9)
        self.assertLess(delsarte_bound(7, theta_d).bound, maximal_cliques(g).clique_number)

    def test_rank_bound_is_tight_for_complete_tripartite(self):
        g = corpus()["K3[3]"]
        records = clique_rank_check(g, minimal_idempotents(g, spectrum(g)), maximal_cliques(g))
        tight = [r for r in records if r["tight"]]
        self.assertEqual(len(tight), 1)
        self.assertAlmostEqual(tight[0]["theta"], -3.0, places=9)
        self.assertEqual(tight[0]["rank"], 2)

    def test_rank_bound_needs_one_walk_regularity(self):
        g = two_diamonds()
        with self.assertRaises(PreconditionError):
            clique_rank_check(g, minimal_idempotents(g, spectrum(g)), maximal_cliques(g))


class TestCliqueProfile(unittest.TestCase):
    """Test cases for the distance profile of Delsarte cliques"""

    def test_rook_line(self):
        g = catalog("rook", [3])
        e_min = smallest_idempotent(g)
        profile = clique_profile(g, (0, 1, 2), 2, e_min)
        self.assertEqual(profile.covering_radius, 1)
        self.assertEqual(profile.phi, (1, 1))
        self.assertEqual(len(profile.phi_predicted), 2)
        for value in profile.phi_predicted:
            self.assertAlmostEqual(value, 1.0, places=6)

    def test_moebius_kantor_edge(self):
        g = catalog("generalized_petersen", [8, 3])
        profile = clique_profile(g, (0, 1), 2, smallest_idempotent(g))
        self.assertEqual(profile.phi, (1, 1))
        self.assertTrue(all(abs(value - 1.0) < 1e-6 for value in profile.phi_predicted))

    def test_prediction_from_alphas(self):
        g = catalog("rook", [3])
        predicted = phi_prediction(smallest_idempotent(g), 3, 3)
        self.assertAlmostEqual(predicted[0], 1.0, places=6)
        self.assertIsNone(predicted[2])

    def test_depth_beyond_the_order(self):
        g = corpus()["L2(4)[2]"]
        with self.assertRaises(PreconditionError):
            clique_profile(g, (0, 2), 2)

    def test_not_a_clique(self):
        with self.assertRaises(PreconditionError):
            clique_profile(catalog("rook", [3]), (0, 4), 1)


class TestGeometric(unittest.TestCase):
    """Test cases for geometric decompositions"""

    def test_rook_graph_is_geometric(self):
        g = catalog("rook", [3])
        result = geometric_decomposition(g)
        self.assertEqual(result.status, GeometricStatus.GEOMETRIC)
        self.assertEqual(len(result.cover.lines), 6)
        self.assertEqual(len(result.cover.edge_assignment), g.size)
        dual = dual_graph(result.cover, g)
        self.assertEqual((dual.n, dual.size), (6, 9))
        self.assertTrue(metrics(dual).bipartite)
        self.assertEqual(check_lines_per_vertex(g, result.cover, -2.0, 1), [2] * 9)

    def test_octahedron_dual_is_complete(self):
        g = catalog("octahedron")
        result = geometric_decomposition(g)
        self.assertEqual(result.status, GeometricStatus.GEOMETRIC)
        self.assertEqual(len(result.cover.lines), 4)
        self.assertEqual(dual_graph(result.cover, g), catalog("complete", [4]))

    def test_bipartite_edges_are_lines(self):
        g = catalog("generalized_petersen", [8, 3])
        result = geometric_decomposition(g)
        self.assertEqual(result.status, GeometricStatus.GEOMETRIC)
        self.assertEqual(len(result.cover.lines), g.size)

    def test_petersen_is_not_geometric(self):
        result = geometric_decomposition(catalog("petersen"))
        self.assertEqual(result.status, GeometricStatus.NOT_GEOMETRIC)
        self.assertIn("not an integer", result.reason)

    def test_icosahedron_is_not_geometric(self):
        self.assertEqual(geometric_decomposition(catalog("icosahedron")).status, GeometricStatus.NOT_GEOMETRIC)
        self.assertEqual(delsarte_cliques(catalog("icosahedron")), [])

    def test_needs_one_walk_regularity(self):
        with self.assertRaises(PreconditionError):
            geometric_decomposition(corpus()["K_2x2x6"])

    def test_search_budget(self):
        config = AnalysisConfig(node_budget=2)
        with self.assertRaises(BudgetExceeded):
            geometric_decomposition(catalog("rook", [3]), config)

    def test_lines_per_vertex_identity_not_applicable(self):
        g = catalog("cube")
        cover = geometric_decomposition(g).cover
        self.assertIsNone(check_lines_per_vertex(g, cover, -3.0, 1))


class TestExactCover(unittest.TestCase):
    """Test cases for the exact-cover search"""

    def test_finds_a_cover(self):
        solver = ExactCoverSolver([1, 2, 3, 4], [frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 4})], 100)
        self.assertEqual(solver.solve(), [0, 2])
        self.assertEqual(solver.nodes, 2)

    def test_backtracks(self):
        subsets = [frozenset({1, 2}), frozenset({1}), frozenset({2, 3})]
        solver = ExactCoverSolver([1, 2, 3], subsets, 100)
        self.assertEqual(solver.solve(), [1, 2])

    def test_no_cover(self):
        solver = ExactCoverSolver([1, 2, 3], [frozenset({1, 2}), frozenset({2, 3})], 100)
        self.assertIsNone(solver.solve())

    def test_empty_universe(self):
        self.assertEqual(ExactCoverSolver([], [], 1).solve(), [])

    def test_budget(self):
        solver = ExactCoverSolver([1, 2], [frozenset({1}), frozenset({2})], 1)
        with self.assertRaises(BudgetExceeded):
            solver.solve()


class TestSufficiencyAndFiniteness(unittest.TestCase):
    """Test cases for the geometricity criterion and the finiteness bounds"""

    def test_inconclusive(self):
        for name, g in (("petersen", catalog("petersen")), ("rook4", catalog("rook", [4]))):
            with self.subTest(graph=name):
                report = geometric_sufficiency(g, 2)
                self.assertEqual(report.verdict, SufficiencyVerdict.INCONCLUSIVE)
                self.assertTrue(all(report.guards.values()))

    def test_smallest_eigenvalue_out_of_range(self):
        report = geometric_sufficiency(catalog("cube"), 2)
        self.assertEqual(report.verdict, SufficiencyVerdict.GUARDS_UNMET)
        self.assertFalse(report.guards["smallest_eigenvalue_in_range"])

    def test_local_coclique_bound(self):
        self.assertTrue(local_coclique_bound(catalog("icosahedron"), 3, 2))
        self.assertFalse(local_coclique_bound(catalog("icosahedron"), 1, 1))

    def test_icosahedron_finiteness(self):
        bounds = finiteness_bounds(catalog("icosahedron"))
        self.assertEqual(bounds.omega, 3)
        self.assertTrue(bounds.vertex_bound_holds)
        self.assertTrue(bounds.valency_bound_holds)
        self.assertTrue(bounds.layer_growth_holds)
        self.assertTrue(bounds.local_coclique_holds)

    def test_triangle_free_has_no_epsilon(self):
        bounds = finiteness_bounds(catalog("petersen"))
        self.assertIsNone(bounds.epsilon)
        self.assertFalse(bounds.guards["a1_positive"])
        self.assertTrue(bounds.layer_growth_holds)

    def test_guards_below_order_two(self):
        bounds = finiteness_bounds(corpus()["K_2x2x6"])
        self.assertFalse(bounds.guards["two_walk_regular"])
        self.assertIsNone(bounds.layer_growth_holds)


def test_delsarte_cliques_partition_rook_four():
    g = catalog("rook", [4])
    lines = delsarte_cliques(g)
    assert len(lines) == 8
    result = geometric_decomposition(g)
    assert result.status == GeometricStatus.GEOMETRIC
    assert sorted(result.cover.lines_per_vertex(g.n)) == [2] * 16

#!/usr/bin/env python
"""Tests for the bound checks, the analysis report and distance diagrams."""

import json
import math
import os
import sys
import unittest

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.walkreg.bounds_report import (
    analyze,
    distance_profile,
    emit_diagram,
    fundamental_bound,
    godsil_bound,
    local_multiplicity_check,
    local_spectra,
    multiplicity_theorems,
    report_dict,
    report_json,
    terwilliger_local_bounds,
)
from src.walkreg.bounds_report.analysis import SECTIONS
from src.walkreg.bounds_report.bounds import _locally_strongly_regular
from src.walkreg.config_manager import AnalysisConfig
from src.walkreg.errors import GraphInputError, PreconditionError
from src.walkreg.exact_walk import walk_regularity_order, walk_regularity_report
from src.walkreg.graph_core import catalog, encode_graph6
from src.walkreg.models import Graph
from src.walkreg.models.report import REPORT_SCHEMA
from src.walkreg.spectral import spectrum

from graph_fixtures import biplane_flag_graph, conference_double, corpus, disconnected_triangles, two_diamonds

SQRT5 = math.sqrt(5)
GOLDEN = (1 + SQRT5) / 2


def checks_for(g):
    return g, spectrum(g), walk_regularity_order(g)


def statement(records, prefix):
    return next(r for r in records if r.statement.startswith(prefix))


class TestGodsil(unittest.TestCase):
    """Test cases for the valency bound in terms of multiplicities"""

    def test_petersen(self):
        records = godsil_bound(*checks_for(catalog("petersen")))
        self.assertEqual([(round(r.theta), r.multiplicity, r.bound) for r in records], [(1, 5, 14.0), (-2, 4, 9.0)])
        self.assertTrue(all(r.applicable and r.passed for r in records))

    def test_icosahedron_meets_the_bound(self):
        records = godsil_bound(*checks_for(catalog("icosahedron")))
        tight = next(r for r in records if abs(r.theta - SQRT5) < 1e-9)
        self.assertEqual((tight.bound, tight.k), (5.0, 5))
        self.assertTrue(tight.passed)

    def test_not_applicable_to_complete_multipartite(self):
        records = godsil_bound(*checks_for(catalog("octahedron")))
        self.assertTrue(records)
        for record in records:
            self.assertFalse(record.applicable)
            self.assertFalse(record.guards["not_complete_multipartite"])
            self.assertIsNone(record.passed)

    def test_needs_a_regular_graph(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        with self.assertRaises(PreconditionError):
            godsil_bound(g, spectrum(catalog("petersen")), None)


class TestLocalEigenvalues(unittest.TestCase):
    """Test cases for the local eigenvalue bounds"""

    def test_local_spectra_of_icosahedron(self):
        for eta in local_spectra(catalog("icosahedron")):
            self.assertAlmostEqual(eta[0], 2.0, places=9)
            self.assertAlmostEqual(eta[-1], -GOLDEN, places=9)

    def test_petersen_interval(self):
        records = terwilliger_local_bounds(*checks_for(catalog("petersen")))
        self.assertEqual(len(records), 10)
        first = records[0]
        self.assertAlmostEqual(first.lower_bound, -2.0, places=9)
        self.assertAlmostEqual(first.upper_bound, 1.0, places=9)
        self.assertTrue(first.asserted)
        self.assertTrue(all(r.lower_holds and r.upper_holds for r in records))

    def test_icosahedron_is_tight(self):
        records = terwilliger_local_bounds(*checks_for(catalog("icosahedron")))
        for record in records:
            self.assertAlmostEqual(record.eta_min, record.lower_bound, places=9)
            self.assertAlmostEqual(record.eta_1, record.upper_bound, places=9)

    def test_order_one_is_reported_only(self):
        """The coclique extension of L2(4) has eta_1 = 4 above -1 - b_1/(theta_d + 1) = 4/3 (b_1 = 7, theta_d = -4)"""
        records = terwilliger_local_bounds(*checks_for(corpus()["L2(4)[2]"]))
        self.assertTrue(records)
        self.assertFalse(any(r.asserted for r in records))
        self.assertFalse(all(r.upper_holds for r in records))
        for record in records:
            self.assertAlmostEqual(record.eta_1, 4.0, places=9)
            self.assertAlmostEqual(record.upper_bound, 4 / 3, places=9)
            self.assertFalse(record.upper_holds)

    def test_not_walk_regular(self):
        self.assertEqual(terwilliger_local_bounds(*checks_for(two_diamonds())), [])

    def test_icosahedron_local_multiplicities(self):
        records = local_multiplicity_check(*checks_for(catalog("icosahedron")))
        applicable = [r for r in records if r.applicable]
        self.assertEqual(len(applicable), 2)
        for record in applicable:
            self.assertTrue(record.extreme)
            self.assertEqual((record.required_multiplicity, record.min_found), (2, 2))
        unmet = next(r for r in records if abs(r.theta + 1) < 1e-9)
        self.assertFalse(unmet.guards["multiplicity_below_k"])

    def test_octahedron_local_multiplicities(self):
        records = local_multiplicity_check(*checks_for(catalog("octahedron")))
        found = {round(r.theta): (round(r.local_eigenvalue), r.required_multiplicity) for r in records}
        self.assertEqual(found, {0: (-2, 1), -2: (0, 2)})

    def test_petersen_multiplicities_are_not_small(self):
        records = local_multiplicity_check(*checks_for(catalog("petersen")))
        self.assertEqual(len(records), 2)
        self.assertFalse(any(r.applicable for r in records))


class TestFundamentalBound(unittest.TestCase):
    """Test cases for the fundamental bound and its equality cases"""

    def test_petersen_is_strict(self):
        record = fundamental_bound(*checks_for(catalog("petersen")))
        self.assertTrue(record.applicable)
        self.assertAlmostEqual(record.lhs, 4.0, places=9)
        self.assertAlmostEqual(record.rhs, 0.0, places=9)
        self.assertAlmostEqual(record.gap, 4.0, places=9)
        self.assertFalse(record.equality)
        self.assertEqual(record.equality_branch, "bipartite")
        self.assertFalse(record.branch_holds)

    def test_icosahedron_is_locally_strongly_regular(self):
        record = fundamental_bound(*checks_for(catalog("icosahedron")))
        self.assertAlmostEqual(record.lhs, -20 / 9, places=9)
        self.assertAlmostEqual(record.rhs, -20 / 9, places=9)
        self.assertTrue(record.equality)
        self.assertEqual(record.equality_branch, "local_srg")
        self.assertTrue(record.branch_holds)
        self.assertAlmostEqual(record.sigma, GOLDEN - 1, places=9)
        self.assertAlmostEqual(record.tau, -GOLDEN, places=9)

    def test_octahedron_equality(self):
        record = fundamental_bound(*checks_for(catalog("octahedron")))
        self.assertAlmostEqual(record.lhs, -8 / 9, places=9)
        self.assertTrue(record.equality)
        self.assertAlmostEqual(record.sigma, 0.0, places=9)
        self.assertAlmostEqual(record.tau, -2.0, places=9)

    def test_bipartite_equality(self):
        for g in (catalog("generalized_petersen", [8, 3]), catalog("cube")):
            with self.subTest(graph=g.name):
                record = fundamental_bound(*checks_for(g))
                self.assertTrue(record.equality)
                self.assertEqual(record.equality_branch, "bipartite")
                self.assertTrue(record.branch_holds)

    def test_local_graphs_must_have_top_eigenvalue_a1(self):
        """C5 locally: top eigenvalue 2 = a_1, the rest at the golden-ratio values"""
        g = catalog("icosahedron")
        tol = AnalysisConfig().local_eigen_tol
        self.assertTrue(_locally_strongly_regular(g, 2, GOLDEN - 1, -GOLDEN, tol))
        self.assertFalse(_locally_strongly_regular(g, 3, GOLDEN - 1, -GOLDEN, tol))
        self.assertFalse(_locally_strongly_regular(g, 2, 1.0, -GOLDEN, tol))

    def test_guards_below_order_two(self):
        record = fundamental_bound(*checks_for(corpus()["L2(4)[2]"]))
        self.assertFalse(record.applicable)
        self.assertFalse(record.guards["two_walk_regular"])
        self.assertIsNone(record.lhs)


class TestMultiplicityTheorems(unittest.TestCase):
    """Test cases for the small-multiplicity statements"""

    def records(self, g):
        return multiplicity_theorems(g, spectrum(g), walk_regularity_report(g))

    def test_cube_has_multiplicity_three(self):
        records = self.records(catalog("cube"))
        record = statement(records, "a distance-regular graph with multiplicity 3")
        self.assertTrue(record.applicable)
        self.assertTrue(record.holds)
        self.assertEqual(record.detail["intersection_array"], "{3,2,1;1,2,3}")

    def test_dodecahedron_and_icosahedron(self):
        for name in ("dodecahedron", "icosahedron"):
            with self.subTest(graph=name):
                record = statement(self.records(catalog(name)), "a distance-regular graph with multiplicity 3")
                self.assertTrue(record.holds)

    def test_dodecahedron_small_multiplicity_gives_b_equal_one(self):
        """m(sqrt 5) = 3 with diameter 5 forces b_3 = b_4 = 1"""
        records = self.records(catalog("dodecahedron"))
        self.assertFalse(statement(records, "multiplicity at most 2 below").applicable)
        for level in (3, 4):
            record = statement(records, f"multiplicity at most {level} below")
            self.assertTrue(record.applicable)
            self.assertTrue(record.holds)
            self.assertEqual(record.detail["b"][level], 1)
        record = statement(records, "multiplicity at most 5 below")
        self.assertFalse(record.guards["level_below_diameter"])

    def test_small_multiplicity_needs_room_below_the_diameter(self):
        records = self.records(catalog("icosahedron"))
        record = statement(records, "multiplicity at most 2 below")
        self.assertFalse(record.guards["multiplicity_at_most_level"])
        self.assertFalse(statement(records, "multiplicity at most 3 below").applicable)

    def test_moebius_kantor_is_cubic_and_triangle_free(self):
        records = self.records(catalog("generalized_petersen", [8, 3]))
        record = statement(records, "multiplicity 3 gives")
        self.assertTrue(record.applicable)
        self.assertTrue(record.holds)
        self.assertFalse(record.detail["distance_regular"])
        self.assertFalse(statement(records, "a distance-regular graph with multiplicity 3").applicable)

    def test_octahedron_multiplicity_two(self):
        record = statement(self.records(catalog("octahedron")), "multiplicity 2 forces")
        self.assertTrue(record.applicable)
        self.assertTrue(record.holds)

    def test_petersen(self):
        records = self.records(catalog("petersen"))
        self.assertTrue(statement(records, "no eigenvalue").holds)
        self.assertFalse(statement(records, "b_t = 1").applicable)
        self.assertTrue(statement(records, "cubic 1-walk-regular").holds)

    def test_nothing_applies_without_walk_regularity(self):
        records = self.records(two_diamonds())
        self.assertFalse(any(r.applicable for r in records))


class TestAnalyze(unittest.TestCase):
    """Test cases for the full analysis report"""

    @classmethod
    def setUpClass(cls):
        cls.petersen = analyze(catalog("petersen"))

    def test_petersen_sections(self):
        report = self.petersen
        self.assertEqual(report.skipped, [])
        self.assertEqual(report.graph.graph6, encode_graph6(catalog("petersen")))
        self.assertEqual(report.walk["order"], 2)
        self.assertEqual(report.spectral_order, 2)
        self.assertEqual(report.spectrum["eigenvalues"][1]["multiplicity"], 5)
        self.assertEqual(len(report.cosines), 3)
        self.assertEqual(report.covers, [])
        self.assertTrue(report.bounds.all_passed())
        self.assertEqual(report.cliques["clique_number"], 2)
        self.assertAlmostEqual(report.cliques["delsarte_bound"], 2.5)
        self.assertEqual(report.cliques["delsarte_cliques"], 0)
        self.assertEqual(report.geometry["status"], "not_geometric")
        self.assertEqual(report.geometry["sufficiency"]["verdict"], "inconclusive")
        self.assertIsNotNone(report.bounds.finiteness)

    def test_report_json_is_deterministic(self):
        text = report_json(self.petersen)
        for _ in range(3):
            self.assertEqual(report_json(analyze(catalog("petersen"))), text)
        data = json.loads(text)
        self.assertEqual(data["schema"], REPORT_SCHEMA)
        self.assertEqual(list(data)[:3], ["schema", "graph", "metrics"])
        self.assertEqual(data["walk"]["intersection_array"], {"b": [3, 2], "c": [1, 1]})

    def test_reals_are_rounded(self):
        data = report_dict(self.petersen, digits=3)
        self.assertEqual(data["cosines"][1]["cosines"][1], 0.333)

    def test_rank_two_eigenvalue_gives_a_cover_record(self):
        report = analyze(conference_double(5))
        self.assertEqual(len(report.covers), 1)
        self.assertEqual(report.covers[0]["classes"], 4)
        self.assertTrue(report.covers[0]["is_cover"])

    def test_geometric_graph(self):
        report = analyze(catalog("octahedron"))
        self.assertEqual(report.geometry["status"], "geometric")
        self.assertEqual(len(report.geometry["cover"]["lines"]), 4)
        self.assertEqual(report.cliques["delsarte_integer"], 3)

    def test_disconnected_graph_is_skipped(self):
        report = analyze(disconnected_triangles())
        self.assertEqual(report.skipped, SECTIONS)
        self.assertEqual(report.skip_reason, "disconnected")
        self.assertIsNone(report.walk)
        self.assertFalse(report.metrics["connected"])

    def test_irregular_graph_is_skipped(self):
        report = analyze(Graph.from_edges(3, [(0, 1), (1, 2)], name="P3"))
        self.assertEqual(report.skip_reason, "irregular")
        self.assertIsNone(report.bounds)

    def test_not_walk_regular(self):
        report = analyze(two_diamonds())
        self.assertIsNone(report.walk["order"])
        self.assertEqual(report.walk["obstruction"]["distance"], 0)
        self.assertEqual(report.geometry["status"], "skipped")
        self.assertIsNone(report.bounds.fundamental.lhs)

    def test_vertex_limit(self):
        with self.assertRaises(GraphInputError):
            analyze(catalog("petersen"), AnalysisConfig(max_n=5))

    def test_construction_is_recorded(self):
        from src.walkreg.constructions import line_graph

        result = line_graph(catalog("petersen"))
        report = analyze(result.graph, construction=result)
        self.assertEqual(report.construction["guaranteed_order"], 1)


class TestDiagram(unittest.TestCase):
    """Test cases for distance diagrams"""

    def test_petersen_diagram(self):
        dot = emit_diagram(catalog("petersen"))
        self.assertTrue(dot.startswith('digraph "petersen" {'))
        for line in (
            'd0 [label="1\\na=0"];',
            'd1 [label="3\\na=0"];',
            'd2 [label="6\\na=2"];',
            'd0 -> d1 [label="3"];',
            'd1 -> d0 [label="1"];',
            'd1 -> d2 [label="2"];',
            'd2 -> d1 [label="1"];',
        ):
            self.assertIn(line, dot)
        self.assertNotIn("dashed", dot)

    def test_cycle_profile(self):
        rows = distance_profile(catalog("cycle", [6]))
        self.assertEqual(len(rows), 4)
        self.assertEqual([row["b"][0] for row in rows[:3]], [2, 1, 1])
        self.assertEqual([row["c"][0] for row in rows[1:]], [1, 1, 2])

    def test_ranges_beyond_the_order(self):
        dot = emit_diagram(biplane_flag_graph())
        nodes = [line.strip() for line in dot.splitlines() if "[label=" in line and "->" not in line]
        lines = {line.split(" ")[0]: line for line in nodes}
        self.assertNotIn("dashed", lines["d3"])
        self.assertIn("dashed", lines["d4"])

    def test_order_label_from_report(self):
        g = catalog("cube")
        dot = emit_diagram(g, analyze(g))
        self.assertIn('label="walk-regularity order 3";', dot)

    def test_disconnected(self):
        with self.assertRaises(PreconditionError):
            distance_profile(disconnected_triangles())


@pytest.mark.slow
def test_corpus_reports_pass_their_bounds():
    config = AnalysisConfig(node_budget=20000)
    for name, g in corpus().items():
        report = analyze(g, config)
        assert report.bounds is None or report.bounds.all_passed(), name
        json.loads(report_json(report))

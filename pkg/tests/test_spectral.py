#!/usr/bin/env python
"""Tests for spectra, idempotents, cosines and representations."""

import math
import os
import sys
import unittest

import numpy as np
import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.walkreg.errors import ConstancyError, NumericalError, PreconditionError
from src.walkreg.exact_walk import walk_regularity_order
from src.walkreg.graph_core import catalog
from src.walkreg.models import Graph
from src.walkreg.spectral import (
    check_coincident_images,
    cosine_sequence,
    cover_prediction,
    idempotent_order,
    minimal_idempotents,
    representation,
    representation_quotient,
    spectral_wr_order,
    spectrum,
    u2_extremes,
)

from graph_fixtures import conference_double, corpus, two_diamonds

SQRT3 = math.sqrt(3)
SQRT5 = math.sqrt(5)


def by_theta(idempotents, theta):
    return next(e for e in idempotents if abs(e.theta - theta) < 1e-6)


class TestSpectrum(unittest.TestCase):
    """Test cases for eigenvalue clustering"""

    def assertPairs(self, g, expected):
        s = spectrum(g)
        self.assertEqual(s.multiplicities, tuple(m for _, m in expected))
        for value, (theta, _) in zip(s.values, expected):
            self.assertAlmostEqual(value, theta, places=9)

    def test_petersen(self):
        self.assertPairs(catalog("petersen"), [(3, 1), (1, 5), (-2, 4)])

    def test_icosahedron(self):
        self.assertPairs(catalog("icosahedron"), [(5, 1), (SQRT5, 3), (-1, 5), (-SQRT5, 3)])

    def test_moebius_kantor(self):
        self.assertPairs(
            catalog("generalized_petersen", [8, 3]),
            [(3, 1), (SQRT3, 4), (1, 3), (-1, 3), (-SQRT3, 4), (-3, 1)],
        )

    def test_octahedron(self):
        self.assertPairs(catalog("octahedron"), [(4, 1), (0, 3), (-2, 2)])

    def test_multiplicity_lookup(self):
        s = spectrum(catalog("petersen"))
        self.assertEqual(s.multiplicity(1.0), 5)
        self.assertEqual(s.multiplicity(0.5), 0)

    def test_ambiguous_gap(self):
        """Petersen's gaps are 2 and 3; a gap within ten tau is refused"""
        with self.assertRaises(NumericalError):
            spectrum(catalog("petersen"), tau_group=0.5)

    def test_cluster_count_must_match_minimal_polynomial(self):
        with self.assertRaises(NumericalError):
            spectrum(catalog("petersen"), tau_group=100.0)

    def test_non_positive_tolerance(self):
        with self.assertRaises(PreconditionError):
            spectrum(catalog("petersen"), tau_group=0.0)


class TestIdempotents(unittest.TestCase):
    """Test cases for the minimal idempotents"""

    def test_resolution_of_the_identity(self):
        g = catalog("dodecahedron")
        s = spectrum(g)
        idempotents = minimal_idempotents(g, s)
        self.assertEqual([e.rank for e in idempotents], list(s.multiplicities))
        total = sum(e.matrix for e in idempotents)
        self.assertTrue(np.allclose(total, np.eye(g.n)))

    def test_walk_regular_diagonal(self):
        g = catalog("icosahedron")
        for e in minimal_idempotents(g, spectrum(g)):
            self.assertAlmostEqual(e.alpha0, e.rank / g.n, places=9)
            self.assertEqual(e.order(), 3)

    def test_non_walk_regular_diagonal(self):
        g = two_diamonds()
        idempotents = minimal_idempotents(g, spectrum(g))
        self.assertIsNone(idempotent_order(idempotents))

    def test_spectral_order_agrees_with_exact(self):
        graphs = corpus()
        for name in ("petersen", "GP(8,3)", "K_2x2x6", "two-diamonds", "L2(4)[2]"):
            with self.subTest(graph=name):
                self.assertEqual(spectral_wr_order(graphs[name]), walk_regularity_order(graphs[name]))


class TestCosines(unittest.TestCase):
    """Test cases for cosine sequences"""

    def test_petersen_cosines(self):
        g = catalog("petersen")
        idempotents = minimal_idempotents(g, spectrum(g))
        u = cosine_sequence(g, by_theta(idempotents, 1.0), 2)
        self.assertTrue(np.allclose(u, (1.0, 1 / 3, -1 / 3)))
        u = cosine_sequence(g, by_theta(idempotents, -2.0), 2)
        self.assertTrue(np.allclose(u, (1.0, -2 / 3, 1 / 6)))

    def test_icosahedron_antipodes(self):
        g = catalog("icosahedron")
        idempotents = minimal_idempotents(g, spectrum(g))
        u = cosine_sequence(g, by_theta(idempotents, SQRT5), 3)
        self.assertTrue(np.allclose(u, (1.0, SQRT5 / 5, -SQRT5 / 5, -1.0)))

    def test_varying_diagonal(self):
        g = two_diamonds()
        e = next(e for e in minimal_idempotents(g, spectrum(g)) if e.order() is None)
        with self.assertRaises(ConstancyError):
            cosine_sequence(g, e, 0)

    def test_u2_extremes_of_the_cube(self):
        g = catalog("cube")
        extremes = u2_extremes(g, minimal_idempotents(g, spectrum(g)), 3)
        self.assertEqual(len(extremes), 1)
        theta, u2 = extremes[0]
        self.assertAlmostEqual(theta, -3.0, places=9)
        self.assertAlmostEqual(u2, 1.0, places=9)

    def test_u2_extremes_need_order_two(self):
        g = catalog("cube")
        self.assertEqual(u2_extremes(g, minimal_idempotents(g, spectrum(g)), 1), [])


class TestRepresentations(unittest.TestCase):
    """Test cases for representations and their quotients"""

    def test_neighbour_cosine(self):
        g = catalog("petersen")
        e = by_theta(minimal_idempotents(g, spectrum(g)), 1.0)
        rep = representation(g, e)
        y = g.neighbours(0)[0]
        self.assertAlmostEqual(rep.cosine(0, y), 1 / 3, places=9)
        self.assertTrue(np.allclose(e.theta * rep.vector(0), sum(rep.vector(z) for z in g.neighbours(0))))

    def test_icosahedron_antipodal_images(self):
        """Each of the six antipodal pairs coincides up to sign for all three non-trivial eigenvalues"""
        g = catalog("icosahedron")
        idempotents = minimal_idempotents(g, spectrum(g))
        self.assertEqual(check_coincident_images(g, idempotents, 3), 18)

    def test_coincident_images_need_order_two(self):
        g = catalog("icosahedron")
        self.assertEqual(check_coincident_images(g, minimal_idempotents(g, spectrum(g)), 1), 0)

    def test_rank_two_quotient_is_a_cycle_cover(self):
        g = conference_double(5)
        self.assertEqual(g.n, 20)
        e = by_theta(minimal_idempotents(g, spectrum(g)), 0.0)
        self.assertEqual(e.rank, 2)
        result = representation_quotient(g, e)
        self.assertEqual(len(result.partition), 4)
        self.assertEqual({len(members) for members in result.partition}, {5})
        self.assertEqual((result.quotient.n, result.quotient.size), (4, 4))
        self.assertTrue(result.cover.is_cover)
        self.assertTrue(result.cover.quotient_is_cycle)

    def test_conference_double_of_paley_13_folds_onto_a_square(self):
        g = conference_double(13)
        e = by_theta(minimal_idempotents(g, spectrum(g)), 0.0)
        self.assertEqual(e.rank, 2)
        result = representation_quotient(g, e)
        self.assertEqual({len(members) for members in result.partition}, {13})
        self.assertTrue(result.cover.classes_independent)
        self.assertTrue(result.cover.equitable)
        self.assertTrue(result.cover.quotient_is_cycle)

    def test_quotient_of_an_irregular_graph(self):
        """The star K_{1,3} folds its leaves together; no cover prediction is made"""
        star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)], name="star")
        e = by_theta(minimal_idempotents(star, spectrum(star)), SQRT3)
        result = representation_quotient(star, e)
        self.assertEqual(result.partition, ((0,), (1, 2, 3)))
        self.assertEqual(result.quotient.size, 1)
        self.assertIsNone(result.cover.predicted_s)
        self.assertIsNone(result.cover.measured_s)

    def test_complete_tripartite_folds_onto_a_triangle(self):
        g = corpus()["K3[3]"]
        e = by_theta(minimal_idempotents(g, spectrum(g)), -3.0)
        self.assertEqual(e.rank, 2)
        result = representation_quotient(g, e)
        self.assertEqual(result.quotient.size, 3)
        self.assertTrue(result.cover.is_cover)
        self.assertAlmostEqual(result.cover.predicted_s, 0.0, places=9)
        self.assertEqual(result.cover.measured_s, (0, 0))

    def test_cover_prediction_needs_rank_two(self):
        g = catalog("petersen")
        e = by_theta(minimal_idempotents(g, spectrum(g)), 1.0)
        self.assertIsNone(cover_prediction(g, e))


@pytest.mark.slow
def test_spectral_and_exact_orders_agree_on_the_corpus():
    for name, g in corpus().items():
        assert spectral_wr_order(g) == walk_regularity_order(g), name

import unittest
from fractions import Fraction

from polybell.combinatorics import bell_number, deg_falling, deg_poly_bell
from polybell.error import NegativeIndex
from polybell.poly_bell import (
    ROUTES, PolyBellQuery, bel_closed, bel_gf, bel_number, bel_row,
    bel_via_sm)
from polybell.polynomial import ONE, Polynomial, X
from polybell.probabilistic import prob_deg_stirling2, raw_moment

LAMBDAS = (0, Fraction(1, 3), Fraction(-1, 2), 2)
DISTS = ('point:1', 'bernoulli:2/5', 'poisson:3/2', 'gamma:1,1',
         'discrete:1:1/2,2:1/2')


class TestPolyBell(unittest.TestCase):

    def test_classical_bell_reduction(self):
        q = PolyBellQuery('point:1', 0, 1, 3)
        for route in (bel_closed, bel_gf, bel_via_sm):
            self.assertEqual(route(q), Polynomial([0, 1, 3, 1]))
        for n in range(1, 9):
            self.assertEqual(bel_number(PolyBellQuery('point:1', 0, 1, n)),
                             bell_number(n))

    def test_routes_agree(self):
        for dist in DISTS:
            for lam in LAMBDAS:
                for k in (-2, 0, 1, 3):
                    rows = [bel_row(dist, lam, k, 8, route)
                            for route in ROUTES]
                    self.assertEqual(rows[0], rows[1])
                    self.assertEqual(rows[1], rows[2])

    def test_first_polynomial_is_mean(self):
        for dist in DISTS:
            for k in (-1, 2):
                q = PolyBellQuery(dist, Fraction(1, 3), k, 1)
                self.assertEqual(bel_closed(q), raw_moment(dist, 1) * X)

    def test_zeroth_polynomial_and_zero_evaluation(self):
        for dist in DISTS:
            row = bel_row(dist, Fraction(-1, 2), 2, 6)
            self.assertEqual(row[0], ONE)
            for poly in row[1:]:
                self.assertEqual(poly(0), 0)

    def test_degree(self):
        for dist in DISTS:
            mean = raw_moment(dist, 1)
            for lam in LAMBDAS:
                for k in (-2, 1, 3):
                    row = bel_row(dist, lam, k, 10)
                    for n in range(1, 11):
                        top = mean ** n * deg_falling(1, n, lam) / \
                            Fraction(n) ** (k - 1)
                        if top:
                            self.assertEqual(row[n].degree, n)
                            self.assertEqual(row[n].leading(), top)
                        else:
                            self.assertLess(row[n].degree, n)

    def test_first_kind_index(self):
        dist, lam = 'poisson:3/2', Fraction(1, 3)
        for n in range(1, 7):
            expected = Polynomial([0] + [
                deg_falling(1, l, lam) *
                prob_deg_stirling2(dist, lam, n, l)
                for l in range(1, n + 1)])
            self.assertEqual(bel_gf(PolyBellQuery(dist, lam, 1, n)),
                             expected)

    def test_point_mass_matches_degenerate_poly_bell(self):
        for lam in LAMBDAS:
            for k in (-2, 1, 2):
                for n in range(11):
                    q = PolyBellQuery('point:1', lam, k, n)
                    self.assertEqual(bel_gf(q), deg_poly_bell(k, lam, n))

    def test_query_widens_row(self):
        q = PolyBellQuery('gamma:1,1', 2, 1, 3, n_max=10)
        self.assertEqual(bel_gf(q), bel_row('gamma:1,1', 2, 1, 10)[3])
        self.assertEqual(bel_gf(q._replace(n_max=None)), bel_gf(q))

    def test_bad_arguments(self):
        with self.assertRaises(NegativeIndex):
            bel_gf(PolyBellQuery('point:1', 0, 1, -1))
        with self.assertRaises(ValueError):
            bel_row('point:1', 0, 1, 3, route='direct')


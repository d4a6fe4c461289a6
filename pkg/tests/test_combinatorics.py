import unittest
from fractions import Fraction
from math import comb, factorial

from polybell.combinatorics import (
    CLASSICAL_1, CLASSICAL_2, DEGENERATE_1, DEGENERATE_2, KINDS, LAH,
    bell_number, bell_poly, deg_exp_series, deg_falling, deg_log_series,
    deg_poly_bell, falling_factorial, polyexp_apply, polyexp_coeffs,
    rising_factorial, stirling, stirling_table)
from polybell.error import NegativeIndex, UnknownKind
from polybell.polynomial import Polynomial, ONE, X
from polybell.series import Series, egf_coeff, series_compose

LAMBDAS = (0, Fraction(1, 3), Fraction(-1, 2), 2)


class TestFactorials(unittest.TestCase):

    def test_falling_factorial(self):
        self.assertEqual(falling_factorial(X, 3), X ** 3 - 3 * X ** 2 + 2 * X)
        self.assertEqual(falling_factorial(5, 0), 1)
        self.assertEqual(falling_factorial(Fraction(1, 2), 2),
                         Fraction(-1, 4))
        self.assertEqual(rising_factorial(2, 3), 24)

    def test_deg_falling(self):
        self.assertEqual(deg_falling(1, 2, Fraction(1, 2)), Fraction(1, 2))
        self.assertEqual(deg_falling(1, 3, 1), 0)
        for n in range(5):
            self.assertEqual(deg_falling(X, n, 0), X ** n)
            self.assertEqual(deg_falling(Fraction(7, 3), n, 0),
                             Fraction(7, 3) ** n)

    def test_deg_falling_in_power_basis(self):
        for lam in LAMBDAS:
            lam = Fraction(lam)
            for n in range(11):
                expected = Polynomial([
                    lam ** (n - k) * stirling(CLASSICAL_1, n, k)
                    for k in range(n + 1)])
                self.assertEqual(deg_falling(X, n, lam), expected)

    def test_negative_index(self):
        with self.assertRaises(NegativeIndex):
            deg_falling(1, -1, 0)
        with self.assertRaises(IndexError):
            stirling(CLASSICAL_2, -1, 0)


class TestTriangles(unittest.TestCase):

    def test_classical_rows(self):
        self.assertEqual(stirling_table(CLASSICAL_2, 0, 4).values[4],
                         (0, 1, 7, 6, 1))
        self.assertEqual(stirling_table(CLASSICAL_1, 0, 4).values[4],
                         (0, -6, 11, -6, 1))
        self.assertEqual(stirling_table(LAH, 0, 3).values[3], (0, 6, 6, 1))

    def test_degenerate_checkpoints(self):
        values = stirling_table(DEGENERATE_2, Fraction(1, 3), 3).values
        self.assertEqual(values[2][1], Fraction(2, 3))
        self.assertEqual(values[3][2], 2)

    def test_lambda_zero_is_classical(self):
        for n in range(9):
            for k in range(n + 1):
                self.assertEqual(stirling(DEGENERATE_2, n, k, 0),
                                 stirling(CLASSICAL_2, n, k))
                self.assertEqual(stirling(DEGENERATE_1, n, k, 0),
                                 stirling(CLASSICAL_1, n, k))

    def test_degenerate_recurrences(self):
        for lam in LAMBDAS:
            for n in range(9):
                for k in range(1, n + 2):
                    self.assertEqual(
                        stirling(DEGENERATE_2, n + 1, k, lam),
                        stirling(DEGENERATE_2, n, k - 1, lam) +
                        (k - n * lam) * stirling(DEGENERATE_2, n, k, lam))
                    self.assertEqual(
                        stirling(DEGENERATE_1, n + 1, k, lam),
                        stirling(DEGENERATE_1, n, k - 1, lam) +
                        (k * lam - n) * stirling(DEGENERATE_1, n, k, lam))

    def test_orthogonality(self):
        for lam in LAMBDAS:
            for n in range(8):
                for m in range(n + 1):
                    total = sum(stirling(DEGENERATE_2, n, l, lam) *
                                stirling(DEGENERATE_1, l, m, lam)
                                for l in range(m, n + 1))
                    self.assertEqual(total, 1 if n == m else 0)

    def test_lah_closed_form(self):
        for n in range(1, 10):
            for k in range(1, n + 1):
                self.assertEqual(
                    stirling(LAH, n, k),
                    comb(n - 1, k - 1) * factorial(n) // factorial(k))

    def test_entries_outside_triangle(self):
        for kind in KINDS:
            self.assertEqual(stirling(kind, 2, 5, Fraction(1, 2)), 0)
        with self.assertRaises(UnknownKind):
            stirling_table('stirling-3', 0, 3)

    def test_large_lookup_grows_table(self):
        self.assertEqual(stirling(CLASSICAL_2, 20, 19), comb(20, 2))


class TestSeries(unittest.TestCase):

    def test_deg_exp(self):
        self.assertEqual(deg_exp_series(1, 0, 3),
                         Series([1, 1, Fraction(1, 2), Fraction(1, 6)], 3))
        self.assertEqual(deg_exp_series(1, 1, 3), Series([1, 1], 3))
        self.assertEqual(deg_exp_series(X, Fraction(1, 2), 2)[2],
                         X * (X - Fraction(1, 2)) / 2)

    def test_deg_log(self):
        self.assertEqual(deg_log_series(1, 3), Series([0, 1], 3))
        self.assertEqual(deg_log_series(0, 3),
                         Series([0, 1, Fraction(-1, 2), Fraction(1, 3)], 3))
        self.assertEqual(deg_log_series(2, 2),
                         Series([0, 1, Fraction(1, 2)], 2))

    def test_log_inverts_exp(self):
        for lam in LAMBDAS:
            composed = series_compose(deg_exp_series(1, lam, 10).coeffs,
                                      deg_log_series(lam, 10))
            self.assertEqual(composed, Series([1, 1], 10))

    def test_polyexp(self):
        t = Series.variable(3)
        self.assertEqual(polyexp_apply(1, 0, t),
                         Series([0, 1, Fraction(1, 2), Fraction(1, 6)], 3))
        self.assertEqual(polyexp_apply(2, 0, t)[2], Fraction(1, 4))
        for lam in LAMBDAS:
            self.assertEqual(
                Series(polyexp_coeffs(1, lam, 6), 6),
                deg_exp_series(1, lam, 6) - 1)

    def test_polyexp_of_degenerate_exponential(self):
        lam = Fraction(1, 3)
        u = deg_exp_series(1, lam, 6) - 1
        self.assertEqual(polyexp_apply(1, lam, u),
                         series_compose(deg_exp_series(1, lam, 6).coeffs, u)
                         - 1)


class TestBell(unittest.TestCase):

    def test_bell_poly(self):
        self.assertEqual(bell_poly(3), Polynomial([0, 1, 3, 1]))
        self.assertEqual(bell_poly(0), ONE)
        self.assertEqual(bell_number(5), 52)
        for n in range(8):
            self.assertEqual(bell_poly(n, 0), bell_poly(n))

    def test_deg_poly_bell(self):
        self.assertEqual(deg_poly_bell(1, 0, 3), bell_poly(3))
        for k in (-2, 0, 3):
            self.assertEqual(deg_poly_bell(k, Fraction(1, 3), 0), ONE)
            self.assertEqual(deg_poly_bell(k, Fraction(1, 3), 1), X)

    def test_deg_poly_bell_is_polyexp_coefficient(self):
        lam = Fraction(-1, 2)
        gf = polyexp_apply(2, lam, X * (deg_exp_series(1, lam, 6) - 1))
        for n in range(1, 7):
            self.assertEqual(deg_poly_bell(2, lam, n), egf_coeff(gf, n))

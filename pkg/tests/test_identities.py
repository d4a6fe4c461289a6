import json
import unittest
from fractions import Fraction

from polybell.error import GridMismatch, ParseError, UnknownIdentity
from polybell.identities import (
    Constraint, catalog_ids, get_entry, parse_grid, report_to_json, run_all,
    value_to_json, verify_identity)
from polybell.polynomial import Polynomial

STATED = ('T2.1', 'T2.2', 'T2.3a', 'T2.3b', 'R2.4a', 'R2.4b', 'R2.4c',
          'T2.4', 'T2.5', 'T2.6', 'T2.7', 'T2.8', 'C3')


class TestGrid(unittest.TestCase):

    def test_parse_grid(self):
        grid = parse_grid('n<=6; l<=10;lambda=0|1/3')
        self.assertEqual(grid['n'], Constraint('<=', 6))
        self.assertEqual(grid['l'], Constraint('<=', 10))
        self.assertEqual(grid['lambda'],
                         Constraint('=', (0, Fraction(1, 3))))
        dists = parse_grid('dist=gamma:1,1|point:1')['dist'].values
        self.assertEqual([str(d) for d in dists], ['gamma:1,1', 'point:1'])

    def test_malformed_grid(self):
        for text in ('n', 'q=1', 'lambda<=3', 'n<=x', 'lambda=1.5'):
            with self.assertRaises(ParseError):
                parse_grid(text)

    def test_vanishing_axis_follows_n(self):
        report = verify_identity('T2.3b', 'dist=point:1;lambda=0;n<=3')
        self.assertEqual(report.grid_size, 12)
        report = verify_identity('T2.3b', 'dist=point:1;lambda=0;n<=6;l<=10')
        self.assertEqual(report.grid_size, 9 + 8 + 7 + 6 + 5 + 4)

    def test_grid_mismatch(self):
        with self.assertRaises(GridMismatch):
            verify_identity('T2.3b', 'n=3;l=3')
        with self.assertRaises(GridMismatch):
            verify_identity('T2.8', 'dist=point:1')
        with self.assertRaises(GridMismatch):
            verify_identity('R2.4b', 'n=5;l<=5')
        with self.assertRaises(GridMismatch):
            verify_identity('T2.3b', 'n<=8;l<=5')

    def test_degree_zero_is_outside_theorems(self):
        for identity_id in ('T2.1', 'T2.6', 'T2.7', 'T2.8'):
            with self.assertRaises(GridMismatch):
                verify_identity(identity_id, 'n=0')
        with self.assertRaises(GridMismatch):
            verify_identity('T2.1', 'dist=point:1;lambda=0;n=0|1')
        self.assertTrue(verify_identity('EI1', 'n<=2').passed)

    def test_mapping_grid(self):
        report = verify_identity('R2.4c', {'alpha': 1, 'n': 2, 'l': 3})
        self.assertEqual(report.grid_size, 1)
        self.assertTrue(report.passed)
        self.assertEqual(report.variants, {'direct': True, 'moments': True})


class TestCatalog(unittest.TestCase):

    def test_catalog_covers_stated_identities(self):
        ids = catalog_ids()
        self.assertTrue(set(STATED) <= set(ids))
        self.assertEqual(ids, sorted(ids))
        for identity_id in ids:
            self.assertTrue(get_entry(identity_id).quote)

    def test_unknown_identity(self):
        with self.assertRaises(UnknownIdentity) as ctx:
            verify_identity('NOPE')
        self.assertEqual(str(ctx.exception), 'unknown identity: NOPE')
        self.assertIsInstance(ctx.exception, KeyError)

    def test_default_grid_of_closed_form(self):
        report = verify_identity('T2.2')
        self.assertTrue(report.passed)
        self.assertEqual(report.failures, [])
        self.assertEqual(report.grid_size, 5 * 4 * 6 * 12)

    def test_log_substitution_variants(self):
        report = verify_identity('T2.4', 'n<=4')
        self.assertTrue(report.passed)
        self.assertEqual(report.pinned, 'corrected')
        self.assertEqual(report.variants,
                         {'printed': False, 'corrected': True})
        self.assertEqual(report.failures, [])

    def test_printed_log_substitution_counterexample(self):
        report = verify_identity(
            'T2.4', 'dist=point:1;lambda=0;k=1;n=2')
        self.assertFalse(report.variants['printed'])

    def test_inverse_in_both_orders(self):
        report = verify_identity('INV', 'n<=10')
        self.assertTrue(report.passed)
        self.assertEqual(report.variants,
                         {'exp-of-log': True, 'log-of-exp': True})

    def test_excluded_lambdas(self):
        report = verify_identity('R2.4a', 'lambda=1|1/2;n<=4')
        self.assertTrue(report.passed)
        self.assertEqual(report.variants, {'prefactor': True, 'bare': True})

    def test_workers_do_not_change_report(self):
        grid = 'n<=5;k=-1|2'
        self.assertEqual(verify_identity('T2.5', grid, workers=4),
                         verify_identity('T2.5', grid, workers=1))

    def test_classical_limit_subset(self):
        reports = run_all('lambda=0;n<=4')
        self.assertEqual([r.id for r in reports], catalog_ids())
        self.assertTrue(all(r.passed for r in reports))

    def test_default_catalog_passes(self):
        reports = run_all()
        self.assertTrue(len(reports) >= 12)
        failed = [r.id for r in reports if not r.passed]
        self.assertEqual(failed, [])


class TestReports(unittest.TestCase):

    def test_value_to_json(self):
        self.assertEqual(value_to_json(Fraction(0)), '0/1')
        self.assertEqual(value_to_json(Polynomial([0, Fraction(1, 2)])),
                         ['0/1', '1/2'])
        self.assertEqual(value_to_json(Polynomial()), ['0/1'])

    def test_report_to_json(self):
        data = report_to_json(verify_identity('T2.4', 'n<=2'))
        self.assertEqual(list(data), ['id', 'grid_size', 'passed',
                                      'failures', 'variants', 'pinned'])
        plain = report_to_json(verify_identity('T2.1', 'n<=2'))
        self.assertEqual(list(plain),
                         ['id', 'grid_size', 'passed', 'failures'])
        self.assertEqual(json.dumps(plain), json.dumps(
            report_to_json(verify_identity('T2.1', 'n<=2'))))

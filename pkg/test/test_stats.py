"""
Statistics Test Fixture
--------------------------------
This fixture tests the running summaries, the variance reduction
comparison and the report files.
"""
import os
import shutil
import tempfile
import unittest
import numpy as np
from pyaivat.exceptions import DataCorruptionException
from pyaivat.exceptions import ParameterException
from pyaivat.stats import REPORT_FIELDS, RunningSummary, SummaryRow
from pyaivat.stats import compare, read_report, report_csv, report_table
from pyaivat.stats import summarize, write_report

#---------------------------------------------------------------------------#
# Fixture
#---------------------------------------------------------------------------#


class RunningSummaryTest(unittest.TestCase):

    def test_small_sample(self):
        """ Test the summary of a three sample stream """
        row = summarize([1.0, 2.0, 3.0], 'chips')
        self.assertEqual(row.label, 'chips')
        self.assertEqual(row.n, 3)
        self.assertEqual(row.mean, 2.0)
        self.assertAlmostEqual(row.sd, 1.0, places=12)
        self.assertAlmostEqual(row.stderr, 1.0 / 3 ** 0.5, places=12)
        self.assertAlmostEqual(row.ci_hi - row.ci_lo,
                               2 * 1.96 * row.stderr, places=12)

    def test_constant_stream(self):
        """ Test a constant stream has no deviation """
        row = summarize([0.25] * 10)
        self.assertEqual(row.mean, 0.25)
        self.assertEqual(row.sd, 0.0)
        self.assertEqual(row.ci_lo, row.ci_hi)

    def test_too_few_samples(self):
        """ Test a summary needs two samples """
        self.assertRaises(ParameterException, summarize, [1.0])
        self.assertRaises(ParameterException, summarize, [])
        self.assertEqual(RunningSummary().mean, 0.0)

    def test_merge(self):
        """ Test merging disjoint streams summarizes their union """
        rng = np.random.default_rng(3)
        values = [float(v) for v in rng.normal(0.5, 2.0, 1000)]
        first = RunningSummary('a').extend(values[:300])
        second = RunningSummary('a').extend(values[300:])
        merged = first.merge(second).summary()
        whole = summarize(values, 'a')
        self.assertEqual(merged.n, whole.n)
        self.assertEqual(merged.mean, whole.mean)
        self.assertAlmostEqual(merged.sd, whole.sd, places=10)
        empty = RunningSummary('a').merge(RunningSummary())
        self.assertEqual(empty.count, 0)

    def test_order_invariant(self):
        """ Test the mean does not depend on the sample order """
        values = [1e16, 1.0, -1e16, 3.0, 0.1, 0.2]
        forward = summarize(values)
        backward = summarize(list(reversed(values)))
        self.assertEqual(forward.mean, backward.mean)
        self.assertAlmostEqual(forward.mean, 4.3 / 6, places=12)

    def test_normal_draws(self):
        """ Test seeded normal draws recover their moments """
        rng = np.random.default_rng(12)
        row = summarize(float(v) for v in rng.standard_normal(100000))
        self.assertAlmostEqual(row.mean, 0.0, delta=0.02)
        self.assertAlmostEqual(row.sd, 1.0, delta=0.02)
        self.assertEqual(row.n, 100000)


class CompareTest(unittest.TestCase):

    def setUp(self):
        """ Initializes the test environment """
        self.baseline = SummaryRow('chips', 100, 0.1, 3.0, 0.3, -0.5, 0.7)
        self.row = SummaryRow('aivat[cx]', 100, 0.0, 1.0, 0.1, -0.2, 0.2)
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        """ Cleans up the test environment """
        shutil.rmtree(self.directory)

    def test_reduction(self):
        """ Test a third of the deviation needs a ninth of the games """
        reduction, = compare(self.baseline, [self.row])
        self.assertEqual(reduction.label, 'aivat[cx]')
        self.assertAlmostEqual(reduction.sd_ratio, 1.0 / 3, places=12)
        self.assertAlmostEqual(reduction.data_factor, 9.0, places=12)
        self.assertAlmostEqual(reduction.sd_reduction_percent,
                               200.0 / 3, places=9)

    def test_zero_deviation(self):
        """ Test degenerate comparisons """
        flat = self.baseline._replace(sd=0.0)
        self.assertRaises(ParameterException, compare, flat, [self.row])
        exact = self.row._replace(sd=0.0)
        reduction, = compare(self.baseline, [exact])
        self.assertEqual(reduction.data_factor, float('inf'))

    def test_sample_mismatch(self):
        """ Test rows must summarize the same episodes """
        other = self.row._replace(n=99)
        self.assertRaises(ParameterException,
                          compare, self.baseline, [other])

    def test_render(self):
        """ Test the CSV and the table name every estimator """
        rows = [self.baseline, self.row]
        reductions = compare(self.baseline, rows)
        text = report_csv(rows, reductions)
        lines = text.splitlines()
        self.assertEqual(lines[0], ','.join(REPORT_FIELDS))
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[2].startswith('aivat[cx],100,'))
        table = report_table(rows, reductions, true_value=-1.0 / 18)
        self.assertTrue('aivat[cx]' in table)
        self.assertTrue('true value -0.05556' in table)
        self.assertFalse('true value' in report_table(rows))

    def test_round_trip(self):
        """ Test the CSV report reads back its summary rows """
        rows = [self.baseline, self.row]
        csv_path = os.path.join(self.directory, 'report.csv')
        table_path = os.path.join(self.directory, 'report.txt')
        write_report(csv_path, table_path, rows,
                     compare(self.baseline, rows), 0.5)
        self.assertEqual(read_report(csv_path), rows)
        self.assertTrue(os.path.exists(table_path))

    def test_corrupt_report(self):
        """ Test reports lacking columns are rejected """
        path = os.path.join(self.directory, 'report.csv')
        with open(path, 'w') as handle:
            handle.write('estimator,n\nchips,3\n')
        self.assertRaises(DataCorruptionException, read_report, path)
        with open(path, 'w') as handle:
            handle.write(','.join(REPORT_FIELDS) + '\n')
            handle.write('chips,three,0,0,0,0,0,,\n')
        self.assertRaises(DataCorruptionException, read_report, path)

#---------------------------------------------------------------------------#
# Main
#---------------------------------------------------------------------------#
if __name__ == "__main__":
    unittest.main()

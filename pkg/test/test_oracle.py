"""
Oracle Test Fixture
--------------------------------
This fixture runs the enumeration oracle on seat extended Kuhn poker and
Leduc hold'em and checks that it notices a biased estimator.
"""
import unittest
import numpy as np
from pyaivat.constants import Player
from pyaivat.exceptions import OracleFailureException
from pyaivat.games import create_game
from pyaivat.oracle import OracleCheck, OracleReport, check_unbiased
from pyaivat.oracle import random_profile, random_value_function
from pyaivat.oracle import run_oracle
from pyaivat.partitions import build_h_partition, PaSpec

#---------------------------------------------------------------------------#
# Fixture
#---------------------------------------------------------------------------#


class OracleTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        """ Runs the oracle once for the fixture """
        cls.game = create_game('kuhn', seat_extended=True)
        cls.report = run_oracle(cls.game, 2, seed=3)

    def test_passes(self):
        """ Test every estimator is unbiased on Kuhn poker """
        self.assertTrue(self.report.passed, self.report.lines())
        check_unbiased(self.report)
        labels = set(c.label for c in self.report.checks
                     if c.check == 'estimate')
        self.assertEqual(labels, set([
            'chips', 'mivat', 'io', 'mivat_io', 'aivat[c]', 'aivat[cx]',
            'aivat[cy]', 'aivat[cxy]']))
        kinds = set(c.check for c in self.report.checks)
        self.assertEqual(kinds, set(['partitions', 'estimate', 'base',
                                     'correction']))

    def test_report_lines(self):
        """ Test the summary ends with the verdict """
        lines = self.report.lines()
        self.assertTrue(lines[-1].startswith(self.game.game_id))
        self.assertTrue(lines[-1].endswith('pass'))
        self.assertTrue(self.report.worst() is not None)

    def test_bias_detected(self):
        """ Test a biased estimator fails the oracle """
        report = run_oracle(self.game, 1, seed=3, bias={'mivat': 0.01},
                            validate=False)
        self.assertFalse(report.passed)
        self.assertEqual(set(c.label for c in report.failures),
                         set(['mivat']))
        self.assertRaises(OracleFailureException, check_unbiased, report)

    def test_empty_report(self):
        """ Test an empty report passes and has no worst check """
        report = OracleReport('kuhn', 0)
        self.assertTrue(report.passed)
        self.assertEqual(report.worst(), None)
        report.add(OracleCheck(0, 'estimate', 'chips', 0.0, 1.0, 1e-9))
        self.assertFalse(report.passed)

    def test_random_inputs(self):
        """ Test random profiles and value functions are well formed """
        rng = np.random.default_rng(0)
        profile = random_profile(self.game, rng)
        for player in self.game.players:
            self.assertEqual(len(profile[player]), 12)
            self.assertEqual(profile[player].validate(), [])
        pa = PaSpec.from_code(self.game, 'cx')
        partition = build_h_partition(self.game, pa)
        values = random_value_function(self.game, partition, rng)
        self.assertEqual(values.perspective, Player.X)
        self.assertEqual(len(values), len(partition))
        bound = self.game.max_pot()
        for key, entries in values.items():
            for value in entries.values():
                self.assertTrue(-bound <= value <= bound)


class LeducOracleTest(unittest.TestCase):

    def test_passes(self):
        """ Test every estimator is unbiased on Leduc hold'em """
        game = create_game('leduc', seat_extended=True)
        report = run_oracle(game, 1, seed=1)
        self.assertTrue(report.passed, report.lines())
        partitions = [c for c in report.checks if c.check == 'partitions']
        self.assertEqual(len(partitions), 4)

#---------------------------------------------------------------------------#
# Main
#---------------------------------------------------------------------------#
if __name__ == "__main__":
    unittest.main()

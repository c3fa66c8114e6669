"""
MCCFR Test Fixture
--------------------------------
This fixture tests the external sampling solver on Kuhn poker.
"""
import unittest
from pyaivat.constants import Player
from pyaivat.exceptions import ParameterException
from pyaivat.games.poker import kuhn_poker
from pyaivat.games.seat import extend_with_seat_chance
from pyaivat.games.tree import expected_value
from pyaivat.partitions import PaSpec, build_h_partition
from pyaivat.solver.mccfr import ExternalSamplingTrainer, mccfr_train

#---------------------------------------------------------------------------#
# Fixture
#---------------------------------------------------------------------------#


class ExternalSamplingTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        """ Trains Kuhn poker once for the fixture """
        cls.game = kuhn_poker()
        cls.profile, cls.learned, cls.report = mccfr_train(
            cls.game, 20000, seed=11, checkpoints=(1000, 5000))

    def test_exploitability(self):
        """ Test the average profile is close to an equilibrium """
        self.assertTrue(self.report.exploitability <= 0.05)
        self.assertEqual(self.report.iterations, 20000)
        self.assertEqual(self.report.seed, 11)
        marks = [mark for mark, _ in self.report.checkpoints]
        self.assertEqual(marks, [1000, 5000, 20000])

    def test_game_value(self):
        """ Test the solved value is near -1/18 """
        value = expected_value(self.game, self.profile, Player.Seat1)
        self.assertAlmostEqual(value, -1.0 / 18, delta=0.05)

    def test_profile_complete(self):
        """ Test every infoset has a distribution """
        for player in self.game.players:
            strategy = self.profile[player]
            self.assertEqual(len(strategy), 6)
            self.assertEqual(strategy.validate(), [])

    def test_learned_values(self):
        """ Test learned values cover every part of each player """
        for player in self.game.players:
            pa = PaSpec(self.game, (self.game.chance_id, player))
            function = self.learned[player]
            self.assertEqual(function.perspective, player)
            for part in build_h_partition(self.game, pa):
                values = function.values(part.key)
                self.assertEqual(sorted(values), sorted(part.actions))
                for value in values.values():
                    self.assertTrue(abs(value) <= self.game.max_pot())


class TrainerTest(unittest.TestCase):

    def test_deterministic(self):
        """ Test equal seeds give equal tables """
        game = extend_with_seat_chance(kuhn_poker())
        first = ExternalSamplingTrainer(game, seed=3)
        second = ExternalSamplingTrainer(game, seed=3)
        first.iterate(200)
        second.iterate(200)
        self.assertEqual(first.iterations, 200)
        for player in game.players:
            self.assertEqual(first.average_profile()[player],
                             second.average_profile()[player])

    def test_agent_profile_keys(self):
        """ Test both agents cover the infosets of both seats """
        game = extend_with_seat_chance(kuhn_poker())
        trainer = ExternalSamplingTrainer(game, seed=3)
        trainer.iterate(10)
        profile = trainer.average_profile()
        self.assertEqual(len(profile[Player.X]), 12)
        self.assertTrue('1|Js||' in profile[Player.X])
        self.assertTrue('2|Js||r' in profile[Player.X])

    def test_iterations(self):
        """ Test training needs at least one iteration """
        self.assertRaises(ParameterException, mccfr_train, kuhn_poker(), 0)

#---------------------------------------------------------------------------#
# Main
#---------------------------------------------------------------------------#
if __name__ == "__main__":
    unittest.main()

"""
Estimator Test Fixture
--------------------------------
This fixture tests the value estimators on the seat extended Kuhn
poker game, where every terminal can be enumerated.

* chips, mivat, io, mivat_io and aivat estimates
* unbiasedness by enumeration
* degenerate value functions and player sets
* exact variances under uniform self-play
"""
import math
import unittest
import numpy as np
from pyaivat.constants import Estimator, Player
from pyaivat.exceptions import DataCorruptionException
from pyaivat.exceptions import ParameterException, UsageException
from pyaivat.estimators import AivatEstimator, EpisodeRecord
from pyaivat.estimators import EstimatorConfig, ImaginaryEstimator, KnownReach
from pyaivat.estimators import MivatEstimator
from pyaivat.estimators import PartitionCache, aivat_base
from pyaivat.estimators import aivat_correction, aivat_estimate
from pyaivat.estimators import build_estimator, chips_estimate
from pyaivat.estimators import estimator_names, io_estimate
from pyaivat.estimators import mivat_estimate, mivat_io_estimate
from pyaivat.estimators import record_episode, replay_episode
from pyaivat.games import create_game
from pyaivat.games.poker import kuhn_poker
from pyaivat.games.seat import extend_with_seat_chance
from pyaivat.games.tree import enumerate_terminals, expected_value
from pyaivat.games.tree import reach_vector, walk_states
from pyaivat.oracle import random_profile, random_value_function
from pyaivat.partitions import PA_CODES
from pyaivat.solver.agents import UniformStrategy
from pyaivat.solver.strategy import ConstantValueFunction, agent_profile
from pyaivat.solver.values import exact_values

#---------------------------------------------------------------------------#
# Fixture
#---------------------------------------------------------------------------#


def exact_variance(terminals, value):
    """ Returns the variance and mean of a value over weighted terminals """
    mean = math.fsum(p * value(z) for z, p in terminals)
    variance = math.fsum(p * (value(z) - mean) ** 2 for z, p in terminals)
    return variance, mean


class EstimatorTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        """ Builds the game and its partitions once """
        cls.game = extend_with_seat_chance(kuhn_poker())
        cls.partitions = PartitionCache(cls.game)
        for code in PA_CODES:
            cls.partitions(code)

    def setUp(self):
        """ Initializes the test environment """
        rng = np.random.default_rng(17)
        self.profile = random_profile(self.game, rng)
        self.values = dict(
            (code, random_value_function(
                self.game, self.partitions(code)[0], rng, Player.X))
            for code in PA_CODES)
        self.terminals = list(enumerate_terminals(self.game, self.profile))
        self.truth = expected_value(self.game, self.profile, Player.X)

    def tearDown(self):
        """ Cleans up the test environment """
        pass

    def episodes(self):
        for index, (z, probability) in enumerate(self.terminals):
            yield record_episode(self.game, index, z), probability

    def expectation(self, estimate):
        return math.fsum(p * estimate(episode)
                         for episode, p in self.episodes())

    #-----------------------------------------------------------------------#
    # Records
    #-----------------------------------------------------------------------#

    def test_record_episode(self):
        """ Test records split the seat from the actions """
        z = self.game.replay(['x2', 'KsQs', 'r', 'c'])
        record = record_episode(self.game, 4, z)
        self.assertEqual(record.seat, 'x2')
        self.assertEqual(record.actions, ('KsQs', 'r', 'c'))
        self.assertEqual(record.outcome, -2.0)
        self.assertEqual(record.history, ('x2', 'KsQs', 'r', 'c'))
        self.assertEqual(replay_episode(self.game, record), z)

    def test_replay_mismatch(self):
        """ Test replay errors name the episode """
        record = EpisodeRecord(9, self.game.game_id, 'x1',
                               ('KsQs', 'r', 'c'), -2.0)
        try:
            replay_episode(self.game, record)
        except DataCorruptionException as ex:
            self.assertTrue('episode 9' in str(ex))
        else:
            self.fail('Expected a DataCorruptionException')
        record = EpisodeRecord(3, self.game.game_id, 'x1', ('KsQs', 'f'), 0)
        self.assertRaises(DataCorruptionException,
                          replay_episode, self.game, record)
        record = EpisodeRecord(3, self.game.game_id, 'x1', ('KsQs',), 0)
        self.assertRaises(DataCorruptionException,
                          replay_episode, self.game, record)

    #-----------------------------------------------------------------------#
    # Single estimators
    #-----------------------------------------------------------------------#

    def test_chips(self):
        """ Test the chip count is the logged outcome """
        z = self.game.replay(['x1', 'KsQs', 'r', 'c'])
        record = record_episode(self.game, 0, z)
        self.assertEqual(chips_estimate(self.game, record), 2.0)
        self.assertEqual(chips_estimate(self.game, record, Player.Y), -2.0)
        self.assertAlmostEqual(self.expectation(
            lambda e: chips_estimate(self.game, e)), self.truth, places=12)

    def test_mivat_unbiased(self):
        """ Test the MIVAT expectation is the game value """
        values = self.values['c']
        self.assertAlmostEqual(self.expectation(
            lambda e: mivat_estimate(self.game, e, values)),
            self.truth, places=9)

    def test_mivat_constant(self):
        """ Test constant values leave the chips unchanged """
        values = ConstantValueFunction(Player.X, 1.5)
        for episode, _ in self.episodes():
            self.assertEqual(mivat_estimate(self.game, episode, values),
                             episode.outcome)

    def test_io_unbiased(self):
        """ Test imaginary observations are unbiased """
        strategy = self.profile[Player.X]
        self.assertAlmostEqual(self.expectation(
            lambda e: io_estimate(self.game, e, strategy)),
            self.truth, places=9)

    def test_mivat_io_unbiased(self):
        """ Test MIVAT over imaginary observations is unbiased """
        strategy = self.profile[Player.X]
        values = self.values['c']
        self.assertAlmostEqual(self.expectation(
            lambda e: mivat_io_estimate(self.game, e, values, strategy)),
            self.truth, places=9)

    #-----------------------------------------------------------------------#
    # AIVAT
    #-----------------------------------------------------------------------#

    def aivat(self, code, values=None, player=None):
        return AivatEstimator(self.game, self.partitions(code), self.profile,
                              values if values is not None else self.values[code], player)

    def test_aivat_unbiased(self):
        """ Test AIVAT and its base value are unbiased for every
        known player set """
        for code in PA_CODES:
            estimator = self.aivat(code)
            observed = math.fsum(p * estimator.value(z)
                                 for z, p in self.terminals)
            self.assertAlmostEqual(observed, self.truth, places=9)
            bases = math.fsum(p * estimator.decompose(z)[0]
                              for z, p in self.terminals)
            self.assertAlmostEqual(bases, self.truth, places=9)

    def test_corrections_zero_mean(self):
        """ Test every correction term has zero expectation """
        estimator = self.aivat('cx')
        h_partition = estimator.h_partition
        for part in h_partition:
            mean = math.fsum(p * estimator.term(part, z)
                             for z, p in self.terminals)
            self.assertAlmostEqual(mean, 0.0, places=10)

    def test_aivat_matches_mivat(self):
        """ Test chance only AIVAT reproduces MIVAT exactly """
        estimator = self.aivat('c')
        mivat = MivatEstimator(self.game, self.values['c'])
        for episode, _ in self.episodes():
            self.assertEqual(estimator.estimate(episode).estimate,
                             mivat.estimate(episode).estimate)

    def test_constant_values(self):
        """ Test constant values make every correction zero """
        for code in PA_CODES:
            values = ConstantValueFunction(Player.X, -0.75)
            estimator = self.aivat(code, values)
            for episode, _ in self.episodes():
                sample = estimator.estimate(episode)
                for _, term in sample.terms:
                    self.assertEqual(term, 0.0)
                self.assertEqual(sample.estimate, sample.base)

    def test_decomposition(self):
        """ Test the sample is its base value plus its terms """
        episode, _ = next(self.episodes())
        partitions = self.partitions('cxy')
        sample = aivat_estimate(self.game, episode, partitions,
                                self.values['cxy'], self.profile)
        self.assertEqual(sample.estimate, math.fsum(
            [sample.base] + [t for _, t in sample.terms]))
        self.assertEqual(len(sample.terms), len(episode.history))
        self.assertEqual(sample.terms[0][0], 'c|')

    def test_single_part_functions(self):
        """ Test the per part helpers agree with the estimator """
        pa = self.partitions('cx')[0].pa
        h_partition, w_partition = self.partitions('cx')
        estimator = self.aivat('cx')
        episode, _ = next(self.episodes())
        z = replay_episode(self.game, episode)
        for part in h_partition:
            self.assertEqual(
                aivat_correction(self.game, part, episode,
                                 self.values['cx'], self.profile, pa),
                estimator.term(part, z))
        w_part = w_partition.part_of(z)
        self.assertEqual(
            aivat_base(self.game, w_part, episode, self.profile, pa),
            estimator.base(w_part))
        other = [p for p in w_partition if z not in p.members][0]
        self.assertRaises(UsageException, aivat_base, self.game, other,
                          episode, self.profile, pa)

    def test_zero_sum_perspective(self):
        """ Test evaluating y with negated values negates the estimate """
        values = self.values['cxy']
        x = self.aivat('cxy', values, Player.X)
        y = self.aivat('cxy', values.negated(Player.Y), Player.Y)
        for z, _ in self.terminals:
            self.assertAlmostEqual(x.value(z), -y.value(z), places=12)

    def test_known_reach(self):
        """ Test reach extended from cached parents matches a fresh walk """
        pa = self.partitions('cx')[0].pa
        known = KnownReach(self.game, pa, self.profile)
        for state in walk_states(self.game):
            expected = reach_vector(self.game, state, self.profile)
            self.assertAlmostEqual(known.reach(state),
                                   expected.product(pa.members), places=15)
            self.assertEqual(known.state(state.history), state)
        z = self.terminals[0][0]
        self.assertTrue(known.vector(z) is known.vector(z))

    def test_imaginary_shared(self):
        """ Test terminals of one terminal part share imaginary terminals """
        partitions = self.partitions('cx')
        estimator = ImaginaryEstimator(self.game, partitions,
                                       self.profile[Player.X], Player.X)
        part = max(partitions[1], key=len)
        first, last = part.members[0], part.members[-1]
        self.assertTrue(estimator.imaginary(first) is
                        estimator.imaginary(last))
        self.assertTrue(last in estimator.imaginary(first))

    def test_full_knowledge_exact(self):
        """ Test exact values with every strategy known leave no variance """
        partitions = self.partitions('cxy')
        values = exact_values(self.game, self.profile, partitions[0],
                              Player.X)
        estimator = AivatEstimator(self.game, partitions, self.profile,
                                   values, Player.X)
        for z, _ in self.terminals:
            self.assertAlmostEqual(estimator.value(z), self.truth, places=9)
        variance, _ = exact_variance(self.terminals, estimator.value)
        chips, _ = exact_variance(self.terminals, self.chips)
        self.assertTrue(math.sqrt(variance) <= 1e-3 * math.sqrt(chips))

    def chips(self, z):
        return self.game.state_info(z).utilities[Player.X]

    #-----------------------------------------------------------------------#
    # Factory
    #-----------------------------------------------------------------------#

    def test_build_estimator(self):
        """ Test estimators built from configurations """
        self.assertEqual(estimator_names(), list(Estimator.All))
        config = EstimatorConfig(Estimator.Aivat, 'cx', self.profile,
                                 self.values['cx'], Player.X)
        self.assertEqual(config.label, 'aivat[cx]')
        estimator = build_estimator(self.game, config, self.partitions)
        episode, _ = next(self.episodes())
        sample = estimator.estimate(episode)
        self.assertEqual(sample.estimator, 'aivat[cx]')
        self.assertEqual(sample.episode_id, episode.episode_id)
        config = EstimatorConfig(Estimator.Mivat, None, None,
                                 self.values['c'], Player.X)
        self.assertEqual(build_estimator(self.game, config).name, 'mivat')

    def test_build_oriented(self):
        """ Test value functions of the other player are negated """
        values = self.values['cx'].negated(Player.Y)
        config = EstimatorConfig(Estimator.Aivat, 'cx', self.profile,
                                 values, Player.X)
        estimator = build_estimator(self.game, config, self.partitions)
        reference = self.aivat('cx')
        for z, _ in self.terminals[:10]:
            self.assertAlmostEqual(estimator.value(z), reference.value(z),
                                   places=12)

    def test_build_errors(self):
        """ Test incomplete configurations are rejected """
        config = EstimatorConfig('doubly_robust', None, None, None, None)
        self.assertRaises(ParameterException,
                          build_estimator, self.game, config)
        config = EstimatorConfig(Estimator.Io, None, {}, None, Player.X)
        self.assertRaises(ParameterException,
                          build_estimator, self.game, config)
        config = EstimatorConfig(Estimator.Aivat, 'cxy',
                                 {Player.X: self.profile[Player.X]},
                                 self.values['cxy'], Player.X)
        self.assertRaises(ParameterException,
                          build_estimator, self.game, config)


class UniformSelfPlayVarianceTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        """ Values seat extended Kuhn poker under uniform self-play """
        cls.game = extend_with_seat_chance(kuhn_poker())
        cls.partitions = PartitionCache(cls.game)
        cls.profile = agent_profile(UniformStrategy(Player.X),
                                    UniformStrategy(Player.Y))
        cls.terminals = list(enumerate_terminals(cls.game, cls.profile))
        chance = cls.partitions('c')[0]
        cls.seen = exact_values(cls.game, cls.profile, chance, Player.X,
                                observer=Player.X)
        cls.full = exact_values(cls.game, cls.profile, chance, Player.X)

    def variance(self, value):
        variance, mean = exact_variance(self.terminals, value)
        self.assertAlmostEqual(mean, 0.0, places=12)
        return variance

    def aivat(self, code):
        partitions = self.partitions(code)
        values = exact_values(self.game, self.profile, partitions[0],
                              Player.X)
        return AivatEstimator(self.game, partitions, self.profile, values,
                              Player.X)

    def test_chips(self):
        """ Test the chip count variance of uniform play """
        self.assertAlmostEqual(self.variance(
            lambda z: self.game.state_info(z).utilities[Player.X]),
            17.0 / 8, places=12)

    def test_mivat_sees_own_card(self):
        """ Test MIVAT corrects x's own card but not the opponent's """
        mivat = MivatEstimator(self.game, self.seen, Player.X)
        self.assertAlmostEqual(self.variance(mivat.value), 277.0 / 192,
                               places=12)
        z = self.game.replay(['x1', 'QsJs', 'k', 'k'])
        self.assertAlmostEqual(mivat.value(z), 1.0 - 1.0 / 8, places=12)
        z = self.game.replay(['x1', 'QsKs', 'k', 'k'])
        self.assertAlmostEqual(mivat.value(z), -1.0 - 1.0 / 8, places=12)

    def test_mivat_full_history(self):
        """ Test values that know both cards remove more of the luck """
        mivat = MivatEstimator(self.game, self.full, Player.X)
        self.assertAlmostEqual(self.variance(mivat.value), 71.0 / 64,
                               places=12)

    def test_variance_ordering(self):
        """ Test each estimator improves on the one before it """
        mivat = MivatEstimator(self.game, self.seen, Player.X)
        mivat_io = ImaginaryEstimator(
            self.game, self.partitions('cx'), self.profile[Player.X],
            Player.X, mivat)
        variances = [
            self.variance(
                lambda z: self.game.state_info(z).utilities[Player.X]),
            self.variance(mivat.value),
            self.variance(mivat_io.value),
            self.variance(self.aivat('cx').value),
            self.variance(self.aivat('cxy').value),
        ]
        for before, after in zip(variances, variances[1:-1]):
            self.assertTrue(after < before, variances)
        self.assertTrue(variances[-1] <= variances[-2])
        self.assertTrue(math.sqrt(variances[-1]) <=
                        1e-3 * math.sqrt(variances[0]))


class LeducMivatTest(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        """ Values seat extended Leduc hold'em under uniform self-play """
        cls.game = create_game('leduc', seat_extended=True)
        cls.profile = agent_profile(UniformStrategy(Player.X),
                                    UniformStrategy(Player.Y))
        cls.terminals = list(enumerate_terminals(cls.game, cls.profile))
        chance = PartitionCache(cls.game)('c')[0]
        cls.seen = exact_values(cls.game, cls.profile, chance, Player.X,
                                observer=Player.X)
        cls.full = exact_values(cls.game, cls.profile, chance, Player.X)

    def test_reduction_between_chips_and_full_history(self):
        """ Test MIVAT reduces the variance less than full history
        values would """
        chips, _ = exact_variance(
            self.terminals,
            lambda z: self.game.state_info(z).utilities[Player.X])
        seen = MivatEstimator(self.game, self.seen, Player.X)
        full = MivatEstimator(self.game, self.full, Player.X)
        variance, mean = exact_variance(self.terminals, seen.value)
        self.assertAlmostEqual(mean, 0.0, places=9)
        self.assertTrue(variance < chips)
        self.assertTrue(exact_variance(self.terminals, full.value)[0] <
                        variance)

#---------------------------------------------------------------------------#
# Main
#---------------------------------------------------------------------------#
if __name__ == "__main__":
    unittest.main()

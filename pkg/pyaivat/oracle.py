# -*- coding: utf-8 -*-

"""
Unbiasedness Oracles
--------------------

Every estimator must have the game value as its expectation, whatever the
strategies and the value functions are. The oracle draws random profiles
(a Dirichlet vector at every information set) and random value functions
(uniform entries within the largest pot), enumerates every terminal with
its exact reach and checks:

* ``chips``, ``mivat``, ``io`` and ``mivat_io`` average to the game value;
* for every known player set, AIVAT and its base value average to the game
  value, and the correction term of every part averages to zero.

The checks run on the seat extended game, agent ``x`` is evaluated.
"""
from collections import namedtuple
import math
import numpy as np
from pyaivat.constants import Defaults, Estimator
from pyaivat.exceptions import OracleFailureException
from pyaivat.estimators import PartitionCache
from pyaivat.estimators import AivatEstimator, ChipsEstimator
from pyaivat.estimators import ImaginaryEstimator, MivatEstimator
from pyaivat.games.tree import enumerate_terminals, walk_states
from pyaivat.partitions import PA_CODES, PaSpec
from pyaivat.partitions import decompose_path, validate_partitions
from pyaivat.solver.strategy import BehaviorStrategy, ValueFunction

# Logging
import logging
_logger = logging.getLogger(__name__)


#: One comparison of an enumerated expectation against its target.
OracleCheck = namedtuple('OracleCheck', [
    'trial', 'check', 'label', 'expected', 'observed', 'tolerance'])


def _passed(check):
    return abs(check.observed - check.expected) <= check.tolerance


class OracleReport(object):
    """ The checks of an oracle run
    """

    def __init__(self, game_id, trials, checks=None):
        self.game_id = game_id
        self.trials = trials
        self.checks = list(checks or [])

    def add(self, check):
        self.checks.append(check)

    @property
    def failures(self):
        return [c for c in self.checks if not _passed(c)]

    @property
    def passed(self):
        return not self.failures

    def worst(self):
        """ Returns the check with the largest error, None when empty
        """
        if not self.checks:
            return None
        return max(self.checks, key=lambda c: abs(c.observed - c.expected))

    def lines(self):
        """ Renders one summary line per check kind and label
        """
        errors = {}
        for check in self.checks:
            key = (check.check, check.label)
            error = abs(check.observed - check.expected)
            errors[key] = max(errors.get(key, 0.0), error)
        result = ['{0} {1}: max error {2:.3e}'.format(check, label, error)
                  for (check, label), error in sorted(errors.items())]
        result.append('{0}: {1} checks over {2} trials, {3}'.format(
            self.game_id, len(self.checks), self.trials,
            'pass' if self.passed else
            '{0} failed'.format(len(self.failures))))
        return result

    def __repr__(self):
        return '<OracleReport {0} {1}/{2}>'.format(
            self.game_id, len(self.checks) - len(self.failures),
            len(self.checks))


# region Random inputs

def random_profile(game, rng):
    """ Draws a random behaviour strategy for every player

    :param game: An enumerable game
    :param rng: A numpy Generator
    :returns: A dict of player to BehaviorStrategy
    """
    infosets = dict((p, {}) for p in game.players)
    for state in walk_states(game):
        if state.is_terminal or game.is_chance(state):
            continue
        infosets[state.acting].setdefault(
            game.infoset_key(state), game.legal_actions(state))
    profile = {}
    for player in game.players:
        strategy = BehaviorStrategy(player)
        for key in sorted(infosets[player]):
            actions = infosets[player][key]
            weights = rng.dirichlet(np.ones(len(actions)))
            strategy.set_policy(key, dict(
                zip(actions, (float(w) for w in weights))))
        profile[player] = strategy
    return profile


def random_value_function(game, h_partition, rng, perspective=None):
    """ Draws a value function with entries uniform in the pot range

    :param game: The game
    :param h_partition: The HPartition whose parts are valued
    :param rng: A numpy Generator
    :param perspective: The evaluated player
    :returns: The ValueFunction
    """
    perspective = game.players[0] if perspective is None else perspective
    bound = float(game.max_pot())
    function = ValueFunction(perspective, h_partition.pa.code)
    for part in h_partition:
        draws = rng.uniform(-bound, bound, len(part.actions))
        function.set_values(part.key, dict(
            zip(part.actions, (float(v) for v in draws))))
    return function

# endregion


class UnbiasednessOracle(object):
    """ Checks every estimator by exact enumeration

    .. attribute:: bias

       A mapping of estimator label to chips added to every sample of
       that estimator. A nonzero bias must make the oracle fail.
    """

    def __init__(self, game, tolerance=Defaults.EnumerationTolerance,
                 lemma_tolerance=Defaults.LemmaTolerance, bias=None):
        """ Initialize the oracle

        :param game: An enumerable seat extended game
        :param tolerance: Allowed error of an estimator expectation
        :param lemma_tolerance: Allowed error of a correction expectation
        :param bias: Chips added to the samples of named estimators
        """
        self.game = game
        self.player = game.players[0]
        self.tolerance = tolerance
        self.lemma_tolerance = lemma_tolerance
        self.bias = dict(bias or {})
        self.partitions = PartitionCache(game)

    def validate(self, report, trials, seed):
        """ Checks the partitions of every known player set once
        """
        for code in PA_CODES:
            pa = PaSpec.from_code(self.game, code)
            h_partition, w_partition = self.partitions(pa)
            diagnostics = validate_partitions(
                self.game, pa, h_partition, w_partition, trials, seed)
            report.add(OracleCheck(
                None, 'partitions', code, 0.0,
                float(len(diagnostics.counterexamples)), 0.0))

    def _estimators(self, profile, rng):
        game, player = self.game, self.player
        chance = PaSpec(game, (game.chance_id,))
        mivat_values = random_value_function(
            game, self.partitions(chance)[0], rng, player)
        mivat = MivatEstimator(game, mivat_values, player, Estimator.Mivat)
        own = self.partitions(PaSpec(game, (game.chance_id, player)))
        estimators = [
            ChipsEstimator(game, player),
            mivat,
            ImaginaryEstimator(game, own, profile[player], player,
                               name=Estimator.Io),
            ImaginaryEstimator(game, own, profile[player], player, mivat,
                               name=Estimator.MivatIo),
        ]
        for code in PA_CODES:
            partitions = self.partitions(code)
            values = random_value_function(game, partitions[0], rng, player)
            estimators.append(AivatEstimator(
                game, partitions, profile, values, player,
                '{0}[{1}]'.format(Estimator.Aivat, code)))
        return estimators

    def _value(self, estimator, z):
        if isinstance(estimator, ChipsEstimator):
            value = estimator.utility(z)
        else:
            value = estimator.value(z)
        return value + self.bias.get(estimator.name, 0.0)

    def trial(self, report, index, rng):
        """ Runs the checks of one random profile

        :param report: The OracleReport collecting the checks
        :param index: The trial number
        :param rng: The generator of the trial
        """
        game = self.game
        profile = random_profile(game, rng)
        estimators = self._estimators(profile, rng)
        terminals = list(enumerate_terminals(game, profile))
        utilities = [game.state_info(z).utilities[self.player]
                     for z, _ in terminals]
        truth = math.fsum(p * u for (_, p), u in zip(terminals, utilities))
        for estimator in estimators:
            observed = math.fsum(p * self._value(estimator, z)
                                 for z, p in terminals)
            report.add(OracleCheck(index, 'estimate', estimator.name,
                                   truth, observed, self.tolerance))
            if isinstance(estimator, AivatEstimator):
                self._aivat(report, index, estimator, terminals, truth)

    def _aivat(self, report, index, estimator, terminals, truth):
        bases, corrections = [], {}
        for z, probability in terminals:
            path = decompose_path(
                estimator.h_partition, estimator.w_partition, z)
            bases.append(probability * estimator.base(path.w_part))
            for step in path.steps:
                corrections.setdefault(step.part.key, []).append(
                    probability * estimator.correction(step.part, step.action))
        report.add(OracleCheck(index, 'base', estimator.name, truth,
                               math.fsum(bases), self.tolerance))
        for key in sorted(corrections):
            report.add(OracleCheck(
                index, 'correction', '{0} {1}'.format(estimator.name, key),
                0.0, math.fsum(corrections[key]), self.lemma_tolerance))

    def run(self, trials, seed=Defaults.Seed, validate=True):
        """ Runs the oracle

        :param trials: The number of random profiles
        :param seed: The master seed of the random inputs
        :param validate: Also check the partition properties
        :returns: The OracleReport
        """
        report = OracleReport(self.game.game_id, trials)
        if validate:
            self.validate(report, min(trials, 10), seed)
        for index in range(trials):
            rng = np.random.default_rng(
                np.random.SeedSequence(seed, spawn_key=(index,)))
            self.trial(report, index, rng)
            _logger.info('{0}: oracle trial {1}/{2}, {3} failures'.format(
                self.game.game_id, index + 1, trials, len(report.failures)))
        return report


def run_oracle(game, trials, seed=Defaults.Seed, bias=None, validate=True):
    """ Runs the unbiasedness checks on a game

    :param game: An enumerable seat extended game
    :param trials: The number of random profiles
    :param seed: The master seed of the random inputs
    :param bias: Chips added to the samples of named estimators
    :param validate: Also check the partition properties
    :returns: The OracleReport
    """
    oracle = UnbiasednessOracle(game, bias=bias)
    return oracle.run(trials, seed, validate)


def check_unbiased(report):
    """ Raises when any check of a report failed

    :param report: The OracleReport
    """
    failures = report.failures
    if failures:
        check = failures[0]
        raise OracleFailureException(
            '{0} of {1} checks failed, first: trial {2} {3} {4} expected '
            '{5!r} got {6!r}'.format(
                len(failures), len(report.checks), check.trial, check.check,
                check.label, check.expected, check.observed))


# Exported symbols
__all__ = [
    'OracleCheck', 'OracleReport', 'UnbiasednessOracle', 'random_profile',
    'random_value_function', 'run_oracle', 'check_unbiased',
]

# -*- coding: utf-8 -*-

"""
External Sampling MCCFR
-----------------------

Each iteration walks the tree once per player. The traversing player
explores every action at its own information sets and updates their
regrets; chance and the other players sample one action. The sampled
player's current strategy is added to its average strategy at every
visit, and the traverser's value after every sampled action is folded
into a running mean per (part, action): an estimate of the opponent's
value w_H(a) at the parts of the sampled player. Its negation is the
learned value function of that player.

Regret matching clips negative regrets at zero and plays uniformly when
no regret is positive. Given the same seed and iteration count the
returned tables are identical.
"""
import numpy as np
from pyaivat.constants import Defaults
from pyaivat.partitions import PaSpec, build_h_partition
from pyaivat.solver.best_response import exploitability
from pyaivat.solver.strategy import BehaviorStrategy, SolveReport
from pyaivat.solver.strategy import ValueFunction
from pyaivat.utilities import sample_index
from pyaivat.exceptions import ParameterException

# Logging
import logging
_logger = logging.getLogger(__name__)


class _Node(object):
    """ Regret and average strategy tables of one information set
    """
    __slots__ = ('actions', 'regrets', 'average')

    def __init__(self, actions):
        self.actions = tuple(actions)
        self.regrets = np.zeros(len(actions))
        self.average = np.zeros(len(actions))

    def current(self):
        positive = np.maximum(self.regrets, 0.0)
        total = positive.sum()
        if total > 0.0:
            return positive / total
        return np.full(len(self.actions), 1.0 / len(self.actions))

    def averaged(self):
        total = self.average.sum()
        if total > 0.0:
            return self.average / total
        return np.full(len(self.actions), 1.0 / len(self.actions))


class ExternalSamplingTrainer(object):
    """ Runs external sampling MCCFR on an enumerable game
    """

    def __init__(self, game, seed=Defaults.Seed):
        """ Initialize a trainer

        :param game: A two player zero-sum game
        :param seed: The seed of the sampling generator
        """
        self.game = game
        self.seed = seed
        self.iterations = 0
        self._rng = np.random.default_rng(seed)
        self._nodes = dict((p, {}) for p in game.players)
        self._observed = dict((p, {}) for p in game.players)
        self._known = dict((p, PaSpec(game, (game.chance_id, p)))
                           for p in game.players)

    # region Training

    def iterate(self, count=1):
        """ Runs training iterations

        :param count: The number of iterations
        """
        for _ in range(count):
            for traverser in self.game.players:
                root = self.game.initial_state()
                masked = dict((p, ()) for p in self.game.players)
                self._traverse(root, traverser, masked)
            self.iterations += 1

    def _node(self, state):
        table = self._nodes[state.acting]
        key = self.game.infoset_key(state)
        node = table.get(key)
        if node is None:
            node = table[key] = _Node(self.game.legal_actions(state))
        return node

    def _child(self, state, action, masked):
        child = self.game.apply_action(state, action)
        extended = {}
        for player, tokens in masked.items():
            visible = self._known[player].opponents
            extended[player] = tokens + (
                self.game.mask_action(state, action, visible),)
        return child, extended

    def _observe(self, player, state, masked, action, value):
        """ Folds a sampled opponent value into the running mean of the
        part of ``player`` holding ``state``
        """
        key = '{0}|{1}'.format(state.acting, '.'.join(masked[player]))
        entry = self._observed[player].setdefault(key, {})
        count, mean = entry.get(action, (0, 0.0))
        count += 1
        entry[action] = (count, mean + (value - mean) / count)

    def _sample(self, actions, probabilities):
        index = sample_index(probabilities, self._rng.random())
        return actions[index]

    def _traverse(self, state, traverser, masked):
        game = self.game
        if state.is_terminal:
            return game.state_info(state).utilities[traverser]
        if game.is_chance(state):
            distribution = game.chance_distribution(state)
            actions = game.legal_actions(state)
            action = self._sample(actions, [distribution[a] for a in actions])
            child, extended = self._child(state, action, masked)
            value = self._traverse(child, traverser, extended)
            self._observe(game.opponent(traverser), state, masked, action,
                          value)
            return value
        node = self._node(state)
        strategy = node.current()
        if state.acting != traverser:
            node.average += strategy
            action = self._sample(node.actions, strategy)
            child, extended = self._child(state, action, masked)
            value = self._traverse(child, traverser, extended)
            self._observe(state.acting, state, masked, action, value)
            return value
        values = np.zeros(len(node.actions))
        for index, action in enumerate(node.actions):
            child, extended = self._child(state, action, masked)
            values[index] = self._traverse(child, traverser, extended)
        expected = float(np.dot(strategy, values))
        node.regrets += values - expected
        return expected

    # endregion

    # region Results

    def average_profile(self):
        """ Returns the normalized average strategy of every player

        Information sets never sampled play uniformly so the profile
        covers the whole game.

        :returns: A dict of player to BehaviorStrategy
        """
        profile = dict((p, BehaviorStrategy(p)) for p in self.game.players)
        for player, table in self._nodes.items():
            for key, node in table.items():
                profile[player].set_policy(key, dict(
                    zip(node.actions, (float(p) for p in node.averaged()))))
        self._cover(profile)
        return profile

    def _cover(self, profile):
        stack = [self.game.initial_state()]
        while stack:
            state = stack.pop()
            if state.is_terminal:
                continue
            actions = self.game.legal_actions(state)
            if not self.game.is_chance(state):
                key = self.game.infoset_key(state)
                strategy = profile[state.acting]
                if key not in strategy:
                    share = 1.0 / len(actions)
                    strategy.set_policy(key, dict(
                        (a, share) for a in actions))
            stack.extend(self.game.apply_action(state, a) for a in actions)

    def learned_values(self):
        """ Returns the learned value function of every player

        Entries are the negated running means of the opponent's sampled
        values. Parts or actions never sampled are filled with zero and
        flagged.

        :returns: A dict of player to ValueFunction
        """
        functions = {}
        for player in self.game.players:
            pa = self._known[player]
            observed = self._observed[player]
            function = ValueFunction(player, pa.code)
            for part in build_h_partition(self.game, pa):
                entries = observed.get(part.key, {})
                values = {}
                for action in part.actions:
                    if action in entries:
                        values[action] = 0.0 - entries[action][1]
                    else:
                        values[action] = 0.0
                        function.flagged.add(part.key)
                function.set_values(part.key, values)
            if function.flagged:
                _logger.warning(
                    'player {0}: {1} parts have unsampled values set to '
                    'zero'.format(player, len(function.flagged)))
            functions[player] = function
        return functions

    # endregion


def mccfr_train(game, iterations=Defaults.Iterations, seed=Defaults.Seed,
                checkpoints=Defaults.Checkpoints):
    """ Trains an average strategy profile with external sampling MCCFR

    :param game: A two player zero-sum enumerable game
    :param iterations: The number of iterations
    :param seed: The seed of the sampling generator
    :param checkpoints: Iteration counts at which exploitability is logged
    :returns: (profile, learned value functions per player, SolveReport)
    """
    if iterations < 1:
        raise ParameterException('iterations must be at least 1')
    trainer = ExternalSamplingTrainer(game, seed)
    recorded = []
    for mark in sorted(set(c for c in checkpoints if c < iterations)):
        trainer.iterate(mark - trainer.iterations)
        value = exploitability(game, trainer.average_profile())
        recorded.append((mark, value))
        _logger.info('{0}: {1} iterations, exploitability {2:.6f}'.format(
            game.game_id, mark, value))
    trainer.iterate(iterations - trainer.iterations)
    profile = trainer.average_profile()
    value = exploitability(game, profile)
    recorded.append((iterations, value))
    _logger.info('{0}: {1} iterations, exploitability {2:.6f}'.format(
        game.game_id, iterations, value))
    if value < -1e-9:
        _logger.warning('exploitability {0!r} is negative'.format(value))
    report = SolveReport(iterations, value, seed, tuple(recorded))
    return profile, trainer.learned_values(), report


# Exported symbols
__all__ = ['ExternalSamplingTrainer', 'mccfr_train']

# -*- coding: utf-8 -*-

"""
Value Estimators
----------------

Every estimator maps one observed episode to an unbiased estimate of the
evaluated player's expected value:

* ``chips``: the chips won in the episode.
* ``mivat``: the chips plus, at every chance event on the path, the
  expected value of the event's outcomes minus the value of the outcome
  dealt.
* ``io``: the reach weighted average of the chips of every terminal the
  opponent cannot tell from the observed one (imaginary observations),
  including the terminals reached by the evaluated player's game ending
  alternatives.
* ``mivat_io``: the same average taken over MIVAT values.
* ``aivat``: a base value averaged over the terminal part of the
  observed terminal, plus one correction term per part of known player
  states the episode passes through.

Estimators only memoize pure functions of their configuration, so the
same episode always gives the same sample and episodes may be evaluated
in any order or in separate processes.
"""
from collections import namedtuple
import math
from pyaivat.constants import Defaults, Estimator
from pyaivat.exceptions import DataCorruptionException
from pyaivat.exceptions import MissingValueException
from pyaivat.exceptions import ParameterException
from pyaivat.exceptions import UsageException
from pyaivat.interfaces import IEstimator
from pyaivat.games.state import ReachVector
from pyaivat.games.tree import contributors, policy
from pyaivat.partitions import PaSpec, build_partitions, decompose_path
from pyaivat.partitions import known_path
from pyaivat.solver.agents import UniformStrategy
from pyaivat.utilities import weighted_mean

# Logging
import logging
_logger = logging.getLogger(__name__)


# region Records

class EpisodeRecord(namedtuple('EpisodeRecord', [
        'episode_id', 'game_id', 'seat', 'actions', 'outcome'])):
    """ One observed game

    ``seat`` is the seat assignment drawn at the root of a seat extended
    game (``x1`` or ``x2``) and None in a plain game. ``actions`` holds
    every chance outcome and player action after the seat draw and
    ``outcome`` the chips won by the first player (agent x).
    """
    __slots__ = ()

    @property
    def history(self):
        if self.seat is None:
            return tuple(self.actions)
        return (self.seat,) + tuple(self.actions)


def record_episode(game, episode_id, z):
    """ Builds the record of a terminal state

    :param game: The game played
    :param episode_id: The episode identifier
    :param z: The terminal state
    :returns: The EpisodeRecord
    """
    utilities = game.state_info(z).utilities
    seat = getattr(z, 'assignment', None)
    actions = z.history[1:] if seat is not None else z.history
    return EpisodeRecord(episode_id, game.game_id, seat, tuple(actions),
                         utilities[game.players[0]])


def replay_episode(game, episode):
    """ Replays an episode and checks the logged outcome

    :param game: The game the episode was played in
    :param episode: The EpisodeRecord
    :returns: The terminal state
    """
    try:
        z = game.replay(episode.history)
    except UsageException as ex:
        raise DataCorruptionException('episode {0}: {1}'.format(
            episode.episode_id, ex.string))
    if not z.is_terminal:
        raise DataCorruptionException(
            'episode {0} does not end at a terminal'.format(
                episode.episode_id))
    outcome = game.state_info(z).utilities[game.players[0]]
    if outcome != episode.outcome:
        raise DataCorruptionException(
            'episode {0}: logged outcome {1!r} replays as {2!r}'.format(
                episode.episode_id, episode.outcome, outcome))
    return z


#: The estimate of one episode. ``base`` and ``terms`` hold the AIVAT
#: decomposition (base value and (part key, correction) pairs in history
#: order) and are None and empty for the other estimators.
EstimateSample = namedtuple('EstimateSample', [
    'episode_id', 'estimator', 'estimate', 'base', 'terms'])


class EstimatorConfig(namedtuple('EstimatorConfig', [
        'kind', 'pa', 'strategies', 'value_function', 'player'])):
    """ The configuration of one estimator

    ``pa`` is the known player code of ``aivat`` (None otherwise),
    ``strategies`` maps known players to their strategies and ``player``
    is the evaluated player.
    """
    __slots__ = ()

    @property
    def label(self):
        if self.kind == Estimator.Aivat:
            return '{0}[{1}]'.format(self.kind, self.pa)
        return self.kind

# endregion


# region Shared machinery

class KnownReach(object):
    """ Reach and policies of the known players

    The opponents' factors are left out of every reach so their
    strategies are never consulted. Reach vectors are extended from the
    cached vector of the parent, so each state costs one step.
    """

    def __init__(self, game, pa, strategies):
        """ Initialize the tables

        :param game: The game
        :param pa: The known players
        :param strategies: Mapping of known player to strategy
        """
        missing = [p for p in pa.known_players if p not in strategies]
        if missing:
            raise ParameterException(
                'no strategy for known players {0}'.format(missing))
        self.game = game
        self.pa = pa
        self.profile = dict((p, UniformStrategy(p)) for p in game.players)
        self.profile.update((p, strategies[p]) for p in pa.known_players)
        root = game.initial_state()
        self._states = {root.history: root}
        self._vectors = {root.history: ReachVector(contributors(game))}
        self._reach = {}
        self._policies = {}

    def state(self, history):
        """ Returns the state reached by a history """
        history = tuple(history)
        current = self._states.get(history)
        if current is None:
            parent = self.state(history[:-1])
            current = self.game.apply_action(parent, history[-1])
            self._states[history] = current
        return current

    def vector(self, state):
        """ Returns the ReachVector of a state """
        history = state.history
        vector = self._vectors.get(history)
        if vector is None:
            parent = self.state(history[:-1])
            vector = self.vector(parent).extend(
                parent.acting, self.policy(parent).get(history[-1], 0.0))
            self._vectors[history] = vector
        return vector

    def reach(self, state):
        """ Returns pi_{P_a} of a state """
        value = self._reach.get(state.history)
        if value is None:
            value = self.vector(state).product(self.pa.members)
            self._reach[state.history] = value
        return value

    def policy(self, state):
        """ Returns sigma(h, .) of a known player or chance state """
        distribution = self._policies.get(state.history)
        if distribution is None:
            distribution = policy(self.game, state, self.profile)
            self._policies[state.history] = distribution
        return distribution


def _part_values(value_function, key, actions):
    values = value_function.values(key)
    for action in actions:
        if action not in values:
            raise MissingValueException(key, action)
    return values


def part_correction(known, part, action, value_function):
    """ Computes k_H(z) of a part on the path of z

    Both terms are centered on the value of the observed action. The
    value function is shared by the members of a part, which makes the
    centered observed term zero; its denominator is still checked.

    :param known: The KnownReach of the known players
    :param part: The HPart
    :param action: The action observed at the part
    :param value_function: The ValueFunction
    :returns: The correction in chips
    """
    values = _part_values(value_function, part.key, part.actions)
    if action not in values:
        raise MissingValueException(part.key, action)
    reference = values[action]
    weights, expected, observed = [], [], []
    for member in part.members:
        distribution = known.policy(member)
        weights.append(known.reach(member))
        expected.append(math.fsum(
            distribution.get(a, 0.0) * (values[a] - reference)
            for a in part.actions))
        observed.append(weights[-1] * distribution.get(action, 0.0))
    first = weighted_mean(weights, expected, 'part ' + part.key)
    second = weighted_mean(observed, [0.0] * len(observed),
                           'observed action {0} at {1}'.format(
                               action, part.key))
    return first - second


def part_base(known, w_part, player):
    """ Computes the base value of a terminal part

    :param known: The KnownReach of the known players
    :param w_part: The WPart
    :param player: The evaluated player
    :returns: The reach weighted mean of the members' utilities
    """
    game = known.game
    return weighted_mean(
        [known.reach(z) for z in w_part.members],
        [game.state_info(z).utilities[player] for z in w_part.members],
        'terminal part ' + w_part.key)


class PartitionCache(object):
    """ Builds the partitions of a game once per known player set
    """

    def __init__(self, game):
        self.game = game
        self._partitions = {}

    def __call__(self, pa):
        """ Returns the partitions of a known player set

        :param pa: A PaSpec or its code
        :returns: A (HPartition, WPartition) tuple
        """
        if not isinstance(pa, PaSpec):
            pa = PaSpec.from_code(self.game, pa)
        if pa not in self._partitions:
            self._partitions[pa] = build_partitions(self.game, pa)
        return self._partitions[pa]

# endregion


# region Estimators

class _Estimator(IEstimator):
    """ Base class holding the game and the evaluated player
    """

    def __init__(self, game, player=None, name=None):
        self.game = game
        self.player = game.players[0] if player is None else player
        if self.player not in game.players:
            raise ParameterException('unknown player {0!r}'.format(player))
        self.name = name or self.name

    def utility(self, z):
        return self.game.state_info(z).utilities[self.player]

    def terminal(self, episode):
        return replay_episode(self.game, episode)

    def sample(self, episode, estimate, base=None, terms=()):
        return EstimateSample(episode.episode_id, self.name, estimate,
                              base, tuple(terms))


class ChipsEstimator(_Estimator):
    """ The chips won in the episode
    """

    name = Estimator.Chips

    def estimate(self, episode):
        return self.sample(episode, self.utility(self.terminal(episode)))


class MivatEstimator(_Estimator):
    """ Chips plus one correction term per chance event on the path
    """

    name = Estimator.Mivat

    def __init__(self, game, value_function, player=None, name=None):
        """ Initialize the estimator

        :param game: The game
        :param value_function: Values keyed by chance only parts
        :param player: The evaluated player
        :param name: The label of the samples
        """
        _Estimator.__init__(self, game, player, name)
        self.value_function = value_function
        self.pa = PaSpec(game, (game.chance_id,))
        self._values = {}

    def value(self, z):
        """ Returns the MIVAT value of a terminal

        :param z: A terminal state
        :returns: The value in chips
        """
        cached = self._values.get(z.history)
        if cached is not None:
            return cached
        terms = [self.utility(z)]
        for state, key, outcome in known_path(self.game, self.pa, z):
            actions = self.game.legal_actions(state)
            values = _part_values(self.value_function, key, actions)
            distribution = self.game.chance_distribution(state)
            reference = values[outcome]
            terms.append(math.fsum(
                distribution[a] * (values[a] - reference) for a in actions))
        result = math.fsum(terms)
        self._values[z.history] = result
        return result

    def estimate(self, episode):
        return self.sample(episode, self.value(self.terminal(episode)))


class ImaginaryEstimator(_Estimator):
    """ Averages a terminal value over the imaginary observations of the
    evaluated player

    The imaginary terminals of z are the terminals the opponent cannot
    tell from z, plus, for every decision of the evaluated player on the
    path, the terminals its game ending alternative actions reach from
    every state the opponent cannot tell apart. A terminal ending with
    such an action is weighted by its known reach over the reach of the
    decision part; any other terminal by its known reach over the reach
    of its terminal part.
    """

    name = Estimator.Io

    def __init__(self, game, partitions, strategy, player=None,
                 mivat=None, name=None):
        """ Initialize the estimator

        :param game: The game
        :param partitions: The partitions of chance and the player
        :param strategy: The evaluated player's strategy
        :param player: The evaluated player
        :param mivat: A MivatEstimator valuing the terminals, chips
            when None
        :param name: The label of the samples
        """
        _Estimator.__init__(self, game, player, name)
        self.h_partition, self.w_partition = partitions
        self.pa = self.h_partition.pa
        if self.pa.known_players != (self.player,):
            raise ParameterException(
                'imaginary observations need the partitions of {0}'.format(
                    self.player))
        self.known = KnownReach(game, self.pa, {self.player: strategy})
        self.mivat = mivat
        self._denominators = {}
        self._imaginary = {}

    def terminal_value(self, z):
        if self.mivat is None:
            return self.utility(z)
        return self.mivat.value(z)

    def _denominator(self, z):
        parent = self.h_partition.part_of(z.history[:-1])
        if parent is not None and parent.acting == self.player:
            part = parent
        else:
            part = self.w_partition.part_of(z)
        total = self._denominators.get(part.key)
        if total is None:
            total = math.fsum(self.known.reach(m) for m in part.members)
            self._denominators[part.key] = total
        return total

    def imaginary(self, z):
        """ Lists the imaginary terminals of an observed terminal

        Terminals of one terminal part share their imaginary terminals.

        :param z: The observed terminal
        :returns: A tuple of terminal states, z included
        """
        w_part = self.w_partition.part_of(z)
        cached = self._imaginary.get(w_part.key)
        if cached is not None:
            return cached
        terminals = list(w_part.members)
        for state, key, observed in known_path(self.game, self.pa, z):
            if state.acting != self.player:
                continue
            part = self.h_partition[key]
            for member in part.members:
                for action in self.game.legal_actions(member):
                    if action == observed:
                        continue
                    child = self.game.apply_action(member, action)
                    if child.is_terminal:
                        terminals.append(child)
        terminals = tuple(terminals)
        self._imaginary[w_part.key] = terminals
        return terminals

    def value(self, z):
        """ Returns the imaginary observation estimate of a terminal

        :param z: The observed terminal
        :returns: The estimate in chips
        """
        terms = []
        for other in self.imaginary(z):
            weight = self.known.reach(other)
            if weight == 0.0:
                continue
            denominator = self._denominator(other)
            if denominator < Defaults.DenominatorFloor:
                raise DataCorruptionException(
                    'zero reach below imaginary terminal {0!r}'.format(other))
            terms.append((weight / denominator) * self.terminal_value(other))
        return math.fsum(terms)

    def estimate(self, episode):
        return self.sample(episode, self.value(self.terminal(episode)))


class AivatEstimator(_Estimator):
    """ Base value plus correction terms over the parts of a known
    player set
    """

    name = Estimator.Aivat

    def __init__(self, game, partitions, strategies, value_function,
                 player=None, name=None):
        """ Initialize the estimator

        :param game: The game
        :param partitions: The (HPartition, WPartition) of the known players
        :param strategies: Mapping of known player to strategy
        :param value_function: Values keyed by the parts of the partition
        :param player: The evaluated player
        :param name: The label of the samples
        """
        _Estimator.__init__(self, game, player, name)
        self.h_partition, self.w_partition = partitions
        self.pa = self.h_partition.pa
        self.value_function = value_function
        self.known = KnownReach(game, self.pa, strategies)
        self._corrections = {}
        self._bases = {}

    def correction(self, part, action):
        """ Returns k_H(z) for a part on the path and its observed action
        """
        cached = self._corrections.get((part.key, action))
        if cached is None:
            cached = part_correction(
                self.known, part, action, self.value_function)
            self._corrections[(part.key, action)] = cached
        return cached

    def term(self, part, z):
        """ Returns k_H(z), zero when no member of the part precedes z
        """
        for member in part.members:
            if member.is_prefix_of(z):
                return self.correction(part, z.history[len(member.history)])
        return 0.0

    def base(self, w_part):
        """ Returns the base value of a terminal part
        """
        cached = self._bases.get(w_part.key)
        if cached is None:
            cached = part_base(self.known, w_part, self.player)
            self._bases[w_part.key] = cached
        return cached

    def decompose(self, z):
        """ Returns the base value and the (part key, correction) terms
        of a terminal in history order
        """
        path = decompose_path(self.h_partition, self.w_partition, z)
        terms = [(step.part.key, self.correction(step.part, step.action))
                 for step in path.steps]
        return self.base(path.w_part), terms

    def value(self, z):
        base, terms = self.decompose(z)
        return math.fsum([base] + [t for _, t in terms])

    def estimate(self, episode):
        z = self.terminal(episode)
        base, terms = self.decompose(z)
        estimate = math.fsum([base] + [t for _, t in terms])
        return self.sample(episode, estimate, base, terms)

# endregion


# region Factory

def _oriented(value_function, player):
    perspective = value_function.perspective
    if perspective in (None, player):
        return value_function
    _logger.debug('negating {0!r} for player {1}'.format(
        value_function, player))
    return value_function.negated(player)


def _build_chips(game, config, partitions):
    return ChipsEstimator(game, config.player, config.label)


def _build_mivat(game, config, partitions):
    return MivatEstimator(game, _oriented(config.value_function,
                                          config.player),
                          config.player, config.label)


def _imaginary(game, config, partitions, mivat):
    player = game.players[0] if config.player is None else config.player
    if player not in (config.strategies or {}):
        raise ParameterException('{0} needs the strategy of {1}'.format(
            config.label, player))
    pa = PaSpec(game, (game.chance_id, player))
    return ImaginaryEstimator(game, partitions(pa), config.strategies[player],
                              player, mivat, config.label)


def _build_io(game, config, partitions):
    return _imaginary(game, config, partitions, None)


def _build_mivat_io(game, config, partitions):
    return _imaginary(game, config, partitions, _build_mivat(
        game, config, partitions))


def _build_aivat(game, config, partitions):
    return AivatEstimator(game, partitions(config.pa), config.strategies,
                          _oriented(config.value_function, config.player),
                          config.player, config.label)


__builders = {
    Estimator.Chips: _build_chips,
    Estimator.Mivat: _build_mivat,
    Estimator.Io: _build_io,
    Estimator.MivatIo: _build_mivat_io,
    Estimator.Aivat: _build_aivat,
}


def build_estimator(game, config, partitions=None):
    """ Builds an estimator from its configuration

    :param game: The game the episodes are played in
    :param config: The EstimatorConfig
    :param partitions: A PartitionCache shared between estimators
    :returns: The IEstimator
    """
    builder = __builders.get(config.kind)
    if builder is None:
        raise ParameterException(
            'unknown estimator {0!r}'.format(config.kind))
    return builder(game, config, partitions or PartitionCache(game))


def estimator_names():
    """ Returns the names accepted by :func:`build_estimator`
    """
    return list(Estimator.All)

# endregion


# region Single episode evaluation

def chips_estimate(game, episode, player=None):
    """ Returns the chips the player won in an episode """
    return ChipsEstimator(game, player).estimate(episode).estimate


def mivat_estimate(game, episode, value_function, player=None):
    """ Returns the MIVAT estimate of an episode

    :param game: The game
    :param episode: The EpisodeRecord
    :param value_function: Values keyed by chance only parts
    :param player: The evaluated player
    :returns: The estimate in chips
    """
    estimator = MivatEstimator(game, value_function, player)
    return estimator.estimate(episode).estimate


def io_estimate(game, episode, strategy, player=None):
    """ Returns the imaginary observation estimate of an episode """
    player = game.players[0] if player is None else player
    pa = PaSpec(game, (game.chance_id, player))
    estimator = ImaginaryEstimator(
        game, build_partitions(game, pa), strategy, player)
    return estimator.estimate(episode).estimate


def mivat_io_estimate(game, episode, value_function, strategy, player=None):
    """ Returns the MIVAT estimate averaged over imaginary observations

    :param game: The game
    :param episode: The EpisodeRecord
    :param value_function: Values keyed by chance only parts
    :param strategy: The evaluated player's strategy
    :param player: The evaluated player
    :returns: The estimate in chips
    """
    player = game.players[0] if player is None else player
    pa = PaSpec(game, (game.chance_id, player))
    mivat = MivatEstimator(game, value_function, player)
    estimator = ImaginaryEstimator(
        game, build_partitions(game, pa), strategy, player, mivat)
    return estimator.estimate(episode).estimate


def aivat_correction(game, part, episode, value_function, strategies, pa):
    """ Returns the correction term of one part for an episode

    :param game: The game
    :param part: The HPart
    :param episode: The EpisodeRecord
    :param value_function: Values keyed by the parts of ``pa``
    :param strategies: Mapping of known player to strategy
    :param pa: The known players
    :returns: k_H(z), zero when the part is not on the path
    """
    z = replay_episode(game, episode)
    known = KnownReach(game, pa, strategies)
    for member in part.members:
        if member.is_prefix_of(z):
            action = z.history[len(member.history)]
            return part_correction(known, part, action, value_function)
    return 0.0


def aivat_base(game, w_part, episode, strategies, pa, player=None):
    """ Returns the base value of the terminal part of an episode

    :param game: The game
    :param w_part: The WPart holding the episode's terminal
    :param episode: The EpisodeRecord
    :param strategies: Mapping of known player to strategy
    :param pa: The known players
    :param player: The evaluated player
    :returns: The base value in chips
    """
    z = replay_episode(game, episode)
    if z not in w_part.members:
        raise UsageException('episode {0} is not in part {1}'.format(
            episode.episode_id, w_part.key))
    player = game.players[0] if player is None else player
    return part_base(KnownReach(game, pa, strategies), w_part, player)


def aivat_estimate(game, episode, partitions, value_function, strategies,
                   player=None):
    """ Returns the AIVAT sample of an episode with its decomposition

    :param game: The game
    :param episode: The EpisodeRecord
    :param partitions: The (HPartition, WPartition) of the known players
    :param value_function: Values keyed by the parts of the partition
    :param strategies: Mapping of known player to strategy
    :param player: The evaluated player
    :returns: The EstimateSample
    """
    estimator = AivatEstimator(game, partitions, strategies, value_function,
                               player)
    return estimator.estimate(episode)

# endregion


# Exported symbols
__all__ = [
    'EpisodeRecord', 'EstimateSample', 'EstimatorConfig', 'KnownReach',
    'PartitionCache', 'ChipsEstimator', 'MivatEstimator',
    'ImaginaryEstimator', 'AivatEstimator', 'record_episode',
    'replay_episode', 'part_correction', 'part_base', 'build_estimator',
    'estimator_names', 'chips_estimate', 'mivat_estimate', 'io_estimate',
    'mivat_io_estimate', 'aivat_correction', 'aivat_base',
    'aivat_estimate',
]

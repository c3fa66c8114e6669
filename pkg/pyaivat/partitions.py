# -*- coding: utf-8 -*-

"""
Correction Term Partitions
--------------------------

The states where a player with a known strategy (or chance) acts are
grouped into parts whose members the unknown players cannot tell apart.
Terminal states are grouped the same way into a matching partition used
by the base value.

Parts are keyed by the masked history of their members: every action is
written as played, except private cards dealt to a known player, which
are written as ``??``. Two states share a part exactly when their masked
histories are equal, which fixes the betting, the board and the private
cards of every unknown player. The key grammar is::

    decision/chance part:  <acting>|<token>.<token>...
    terminal part:         <decision part key>><token>.<token>...

where the terminal key names the part of the longest known-player
prefix followed by the masked actions from that prefix onward.

The known player set is written as a code: ``c`` (chance only), ``cx``,
``cy`` or ``cxy``. In a game without agents ``x`` and ``y`` stand for
the first and second seat.
"""
from collections import namedtuple
import numpy as np
from pyaivat.exceptions import ParameterException
from pyaivat.constants import Defaults
from pyaivat.games.tree import walk_states, walk_with_reach
from pyaivat.solver.agents import UniformStrategy
from pyaivat.solver.strategy import BehaviorStrategy
from pyaivat.payload import TextPayloadBuilder

# Logging
import logging
_logger = logging.getLogger(__name__)

#: The accepted known player set codes
PA_CODES = ('c', 'cx', 'cy', 'cxy')

_TERMINAL_SEPARATOR = '>'


# region Known players

class PaSpec(object):
    """ The set P_a of players whose strategies are known, chance
    included. The remaining players P_o are the opponents.

    .. attribute:: members

       The known players, chance included

    .. attribute:: opponents

       The players whose strategies are unknown
    """

    def __init__(self, game, members):
        """ Initialize the player set

        :param game: The game the set belongs to
        :param members: The known player ids
        """
        members = frozenset(members)
        if game.chance_id not in members:
            raise ParameterException('the known players must include chance')
        unknown = members - set((game.chance_id,) + tuple(game.players))
        if unknown:
            raise ParameterException(
                'unknown players {0}'.format(sorted(unknown)))
        self.members = members
        self.opponents = frozenset(
            p for p in game.players if p not in members)
        self._players = tuple(game.players)

    @classmethod
    def from_code(cls, game, code):
        """ Builds the player set from its code

        :param game: The game the set belongs to
        :param code: ``c``, ``cx``, ``cy`` or ``cxy``
        :returns: The PaSpec
        """
        if code not in PA_CODES:
            raise ParameterException(
                'unknown known player code {0!r}'.format(code))
        aliases = dict(zip('xy', game.players))
        return cls(game, [game.chance_id] + [aliases[c] for c in code[1:]])

    @property
    def code(self):
        return 'c' + ''.join(alias for alias, player in zip(
            'xy', self._players) if player in self.members)

    @property
    def known_players(self):
        """ The known players other than chance, in seat order """
        return tuple(p for p in self._players if p in self.members)

    def __contains__(self, player):
        return player in self.members

    def __eq__(self, other):
        return isinstance(other, PaSpec) and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return '<PaSpec {0}>'.format(self.code)

# endregion


# region Keys

def _encode(prefix, tokens):
    return '{0}|{1}'.format(prefix, '.'.join(tokens))


def masked_walk(game, pa, state=None):
    """ Depth first walk yielding every state with its masked history

    :param game: The game
    :param pa: The known players
    :param state: The subtree root, the game root when None
    :returns: A generator of (state, tuple of masked tokens)
    """
    root = game.initial_state() if state is None else state
    stack = [(root, masked_history(game, pa, root))]
    while stack:
        current, masked = stack.pop()
        yield current, masked
        if current.is_terminal:
            continue
        children = []
        for action in game.legal_actions(current):
            token = game.mask_action(current, action, pa.opponents)
            children.append(
                (game.apply_action(current, action), masked + (token,)))
        stack.extend(reversed(children))


def masked_history(game, pa, state):
    """ Returns the history of a state as the opponents see it

    :param game: The game
    :param pa: The known players
    :param state: Any state
    :returns: A tuple of tokens, private cards of known players hidden
    """
    tokens = []
    current = game.initial_state()
    for action in state.history:
        tokens.append(game.mask_action(current, action, pa.opponents))
        current = game.apply_action(current, action)
    return tuple(tokens)


def known_path(game, pa, z):
    """ Walks the history of a state, stopping where a known player acts

    :param game: The game
    :param pa: The known players
    :param z: The state whose history is walked
    :returns: A generator of (state, part key, action taken there)
    """
    tokens = []
    current = game.initial_state()
    for action in z.history:
        if current.acting in pa:
            yield current, _encode(current.acting, tokens), action
        tokens.append(game.mask_action(current, action, pa.opponents))
        current = game.apply_action(current, action)

# endregion


# region Partitions

class HPart(object):
    """ A part of known player states the opponents cannot distinguish

    .. attribute:: key

       The part key

    .. attribute:: members

       The member states in canonical walk order

    .. attribute:: actions

       The extended action set A(H), the union of the members' legal
       actions in canonical order
    """

    def __init__(self, key, members, actions):
        self.key = key
        self.members = tuple(members)
        self.actions = tuple(actions)

    @classmethod
    def from_members(cls, game, key, members):
        """ Builds a part, extending the action set over the members

        :param game: The game
        :param key: The part key
        :param members: The member states
        :returns: The HPart
        """
        return cls(key, members, extended_actions(game, members))

    @property
    def acting(self):
        return self.members[0].acting

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return '<HPart {0} ({1} members)>'.format(self.key, len(self.members))


class WPart(object):
    """ A part of terminal states used by the base value

    .. attribute:: key

       The part key

    .. attribute:: members

       The member terminals in canonical walk order
    """

    def __init__(self, key, members):
        self.key = key
        self.members = tuple(members)

    def __len__(self):
        return len(self.members)

    def __repr__(self):
        return '<WPart {0} ({1} members)>'.format(self.key, len(self.members))


def extended_actions(game, members):
    """ Returns the union of the legal actions of some states

    :param game: The game
    :param members: Non-terminal states
    :returns: A tuple of actions in canonical order
    """
    union = set()
    for state in members:
        union.update(game.legal_actions(state))
    return tuple(sorted(union, key=game.action_rank))


class _Partition(object):
    """ Shared indexing of both partition kinds
    """

    def __init__(self, game, pa, parts):
        self.game = game
        self.pa = pa
        self.parts = tuple(parts)
        self._by_key = {}
        self._by_history = {}
        self._states = {}
        self.overlaps = []
        for part in self.parts:
            self._by_key[part.key] = part
            for state in part.members:
                if state.history in self._by_history:
                    self.overlaps.append(state.history)
                self._by_history[state.history] = part
                self._states[state.history] = state

    def part_of(self, state):
        """ Returns the part holding a state

        :param state: A state, or its history
        :returns: The part, None when no part holds the state
        """
        history = getattr(state, 'history', state)
        return self._by_history.get(tuple(history))

    def member(self, history):
        """ Returns the member state with a given history

        :param history: The history of a member
        :returns: The state
        """
        return self._states[tuple(history)]

    def member_count(self):
        return sum(len(part) for part in self.parts)

    def keys(self):
        return [part.key for part in self.parts]

    def __getitem__(self, key):
        return self._by_key[key]

    def __contains__(self, key):
        return key in self._by_key

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return '<{0} pa={1} ({2} parts)>'.format(
            self.__class__.__name__, self.pa.code, len(self.parts))


class HPartition(_Partition):
    """ The partition of every state where a known player acts
    """


class WPartition(_Partition):
    """ The partition of the terminal states
    """


#: One step of a path decomposition: the part, the member on the path
#: and the action observed there.
PathStep = namedtuple('PathStep', ['part', 'member', 'action'])

#: The parts an observed terminal passes through, in history order, and
#: the terminal part holding it.
PathDecomposition = namedtuple('PathDecomposition', ['steps', 'w_part'])


def build_h_partition(game, pa):
    """ Groups the known player states by masked history

    :param game: An enumerable game
    :param pa: The known players
    :returns: The HPartition
    """
    groups = {}
    for state, masked in masked_walk(game, pa):
        if state.is_terminal or state.acting not in pa:
            continue
        groups.setdefault(_encode(state.acting, masked), []).append(state)
    parts = [HPart.from_members(game, key, members)
             for key, members in groups.items()]
    _logger.debug('pa={0}: {1} correction parts'.format(pa.code, len(parts)))
    return HPartition(game, pa, parts)


def longest_known_prefix(h_partition, state):
    """ Returns the length of the longest prefix held by a partition

    :param h_partition: The HPartition
    :param state: A state
    :returns: The prefix length, None without such a prefix
    """
    history = state.history
    for size in range(len(history) - 1, -1, -1):
        if h_partition.part_of(history[:size]) is not None:
            return size
    return None


def build_w_partition(game, pa, h_partition):
    """ Groups the terminals by the part of their longest known player
    prefix and the masked actions that follow it

    :param game: An enumerable game
    :param pa: The known players
    :param h_partition: The matching HPartition
    :returns: The WPartition
    """
    groups = {}
    for state, masked in masked_walk(game, pa):
        if not state.is_terminal:
            continue
        size = longest_known_prefix(h_partition, state)
        if size is None:
            key = _encode('z', masked)
        else:
            prefix = h_partition.part_of(state.history[:size]).key
            key = prefix + _TERMINAL_SEPARATOR + '.'.join(masked[size:])
        groups.setdefault(key, []).append(state)
    parts = [WPart(key, members) for key, members in groups.items()]
    _logger.debug('pa={0}: {1} terminal parts'.format(pa.code, len(parts)))
    return WPartition(game, pa, parts)


def build_partitions(game, pa):
    """ Builds both partitions of a known player set

    :param game: An enumerable game
    :param pa: The known players, or their code
    :returns: A (HPartition, WPartition) tuple
    """
    if not isinstance(pa, PaSpec):
        pa = PaSpec.from_code(game, pa)
    h_partition = build_h_partition(game, pa)
    return h_partition, build_w_partition(game, pa, h_partition)


def decompose_path(h_partition, w_partition, z):
    """ Lists the parts an observed terminal passes through

    :param h_partition: The HPartition
    :param w_partition: The WPartition
    :param z: The observed terminal
    :returns: The PathDecomposition
    """
    steps = []
    for size in range(len(z.history)):
        prefix = z.history[:size]
        part = h_partition.part_of(prefix)
        if part is not None:
            steps.append(PathStep(
                part, h_partition.member(prefix), z.history[size]))
    return PathDecomposition(tuple(steps), w_partition.part_of(z))

# endregion


# region Validation

def _first(pair):
    return pair[0]


#: Outcome of :func:`validate_partitions`
PartitionDiagnostics = namedtuple('PartitionDiagnostics', [
    'passed', 'counterexamples', 'trials'])


class _Validator(object):
    """ Checks the partition properties against their definitions
    """

    def __init__(self, game, pa, h_partition, w_partition, limit):
        self.game = game
        self.pa = pa
        self.h_partition = h_partition
        self.w_partition = w_partition
        self.limit = limit
        self.counterexamples = []

    def fail(self, message):
        if len(self.counterexamples) < self.limit:
            self.counterexamples.append(message)

    def check_coverage(self):
        known, terminals = set(), set()
        for state in walk_states(self.game):
            if state.is_terminal:
                terminals.add(state.history)
            elif state.acting in self.pa:
                known.add(state.history)
        for name, partition, expected in (
                ('correction', self.h_partition, known),
                ('terminal', self.w_partition, terminals)):
            for history in partition.overlaps:
                self.fail('{0} partition holds {1} twice'.format(
                    name, '.'.join(history)))
            held = set(h for part in partition for h in
                       (m.history for m in part.members))
            for history in sorted(expected - held)[:1]:
                self.fail('{0} partition misses {1}'.format(
                    name, '.'.join(history)))
            for history in sorted(held - expected)[:1]:
                self.fail('{0} partition holds foreign state {1}'.format(
                    name, '.'.join(history)))

    def check_prefix_free(self):
        for part in self.h_partition:
            histories = set(m.history for m in part.members)
            for member in part.members:
                for size in range(len(member.history)):
                    if member.history[:size] in histories:
                        self.fail('part {0}: {1} precedes {2}'.format(
                            part.key, '.'.join(member.history[:size]) or '-',
                            '.'.join(member.history)))

    def check_actions(self):
        for part in self.h_partition:
            union = extended_actions(self.game, part.members)
            if set(union) != set(part.actions):
                self.fail('part {0}: actions {1} differ from {2}'.format(
                    part.key, part.actions, union))

    def check_terminal_parts(self):
        for part in self.w_partition:
            acted, prefixes = set(), set()
            for z in part.members:
                size = longest_known_prefix(self.h_partition, z)
                acted.add(size is not None)
                if size is not None:
                    prefixes.add(
                        self.h_partition.part_of(z.history[:size]).key)
            if len(acted) > 1:
                self.fail('terminal part {0}: known players act in some '
                          'members only'.format(part.key))
            if len(prefixes) > 1:
                self.fail('terminal part {0}: prefixes lie in parts '
                          '{1}'.format(part.key, sorted(prefixes)))

    def check_opponent_reach(self, trials, seed):
        infosets = {}
        for state in walk_states(self.game):
            if state.acting in self.pa.opponents:
                key = self.game.infoset_key(state)
                infosets.setdefault(state.acting, {})[key] = \
                    self.game.legal_actions(state)
        tolerance = Defaults.ProbabilityTolerance
        for trial in range(trials):
            rng = np.random.default_rng(
                np.random.SeedSequence(seed, spawn_key=(trial,)))
            profile = dict((p, UniformStrategy(p)) for p in self.game.players)
            for player in sorted(infosets):
                strategy = BehaviorStrategy(player)
                for key in sorted(infosets[player]):
                    actions = infosets[player][key]
                    weights = rng.dirichlet(np.ones(len(actions)))
                    strategy.set_policy(key, dict(
                        zip(actions, (float(w) for w in weights))))
                profile[player] = strategy
            reach = {}
            for state, vector in walk_with_reach(self.game, profile):
                reach[state.history] = vector.product(self.pa.opponents)
            for partition in (self.h_partition, self.w_partition):
                for part in partition:
                    values = [(reach[m.history], m) for m in part.members]
                    low = min(values, key=_first)
                    high = max(values, key=_first)
                    if high[0] - low[0] > tolerance:
                        self.fail(
                            'part {0}: opponent reach {1!r} at {2} differs '
                            'from {3!r} at {4} (trial {5})'.format(
                                part.key, low[0],
                                '.'.join(low[1].history), high[0],
                                '.'.join(high[1].history), trial))


def validate_partitions(game, pa, h_partition, w_partition, trials=100,
                        seed=Defaults.Seed, limit=20):
    """ Checks both partitions against their defining properties

    For ``trials`` random opponent strategies the opponent reach must be
    equal within every part. Parts must not hold a member and one of its
    prefixes, action sets must be the union of the members' actions, and
    terminal parts must agree on their known player prefix.

    :param game: An enumerable game
    :param pa: The known players
    :param h_partition: The HPartition to check
    :param w_partition: The WPartition to check
    :param trials: The number of random opponent strategies
    :param seed: The seed of the random strategies
    :param limit: The largest number of counterexamples reported
    :returns: The PartitionDiagnostics
    """
    validator = _Validator(game, pa, h_partition, w_partition, limit)
    validator.check_coverage()
    validator.check_prefix_free()
    validator.check_actions()
    validator.check_terminal_parts()
    validator.check_opponent_reach(trials, seed)
    passed = not validator.counterexamples
    if passed:
        _logger.info('pa={0}: partitions pass {1} trials'.format(
            pa.code, trials))
    else:
        _logger.warning('pa={0}: {1}'.format(
            pa.code, validator.counterexamples[0]))
    return PartitionDiagnostics(
        passed, tuple(validator.counterexamples), trials)

# endregion


# region Dump

def write_partition(path, partition):
    """ Writes the parts and their member histories as text

    :param path: The destination
    :param partition: An HPartition or WPartition
    """
    builder = TextPayloadBuilder()
    builder.add_comment('pyaivat partition')
    builder.add_header(('game', partition.game.game_id),
                       ('pa', partition.pa.code),
                       ('parts', len(partition)))
    for part in partition:
        builder.add_record(part.key, len(part), *(
            '.'.join(m.history) or '-' for m in part.members))
    builder.write(path)

# endregion


# Exported symbols
__all__ = [
    'PA_CODES', 'PaSpec', 'HPart', 'WPart', 'HPartition', 'WPartition',
    'PathStep', 'PathDecomposition', 'PartitionDiagnostics',
    'masked_walk', 'masked_history', 'known_path',
    'extended_actions',
    'build_h_partition', 'build_w_partition', 'build_partitions',
    'longest_known_prefix', 'decompose_path', 'validate_partitions',
    'write_partition',
]

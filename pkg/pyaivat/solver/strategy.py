# -*- coding: utf-8 -*-

"""
Strategies And Value Functions
------------------------------

A BehaviorStrategy maps information set keys to probability vectors
over the legal actions. A ValueFunction maps (part key, action) pairs to
the estimated value of the evaluated player after that action.

Both serialize to the line formats documented in :mod:`pyaivat.payload`::

    <infoset_key> <action>:<prob> ...
    <part_key> <action>:<chips> ...
"""
from collections import namedtuple
from pyaivat.constants import Defaults, Player
from pyaivat.exceptions import DataCorruptionException
from pyaivat.exceptions import MissingInfosetException
from pyaivat.exceptions import MissingValueException
from pyaivat.exceptions import ParameterException
from pyaivat.payload import TextPayloadBuilder, TextPayloadDecoder

# Logging
import logging
_logger = logging.getLogger(__name__)


#: Outcome of a solver run. ``checkpoints`` is a tuple of
#: (iterations, exploitability) pairs recorded while training.
SolveReport = namedtuple('SolveReport', [
    'iterations', 'exploitability', 'seed', 'checkpoints'])


class BehaviorStrategy(object):
    """ A table driven behaviour strategy

    .. attribute:: owner

       The player (or agent) the strategy belongs to
    """

    def __init__(self, owner=None, table=None):
        """ Initialize a strategy

        :param owner: The owning player id
        :param table: Mapping of infoset key to {action: probability}
        """
        self.owner = owner
        self._table = {}
        for key, distribution in (table or {}).items():
            self._table[key] = dict(distribution)

    def policy(self, key, actions):
        """ Returns the action distribution at an information set

        :param key: The information set key
        :param actions: The legal actions, in canonical order
        :returns: A dict of action to probability, zero for absent actions
        """
        distribution = self._table.get(key)
        if distribution is None:
            raise MissingInfosetException(key)
        return dict((a, distribution.get(a, 0.0)) for a in actions)

    def set_policy(self, key, distribution):
        """ Stores the distribution of an information set

        :param key: The information set key
        :param distribution: Mapping of action to probability
        """
        self._table[key] = dict(distribution)

    def keys(self):
        return sorted(self._table)

    def items(self):
        return [(key, dict(self._table[key])) for key in self.keys()]

    def __contains__(self, key):
        return key in self._table

    def __len__(self):
        return len(self._table)

    def validate(self, tolerance=None):
        """ Checks every vector is non-negative and sums to one

        :param tolerance: The allowed error of the sums
        :returns: A list of offending keys
        """
        tolerance = tolerance or Defaults.StrategyTolerance
        offending = []
        for key, distribution in self._table.items():
            if any(p < 0.0 for p in distribution.values()) or \
                    abs(sum(distribution.values()) - 1.0) > tolerance:
                offending.append(key)
        return sorted(offending)

    def __eq__(self, other):
        return isinstance(other, BehaviorStrategy) and \
            self._table == other._table

    def __repr__(self):
        return '<BehaviorStrategy {0} ({1} infosets)>'.format(
            self.owner, len(self._table))


class ValueFunction(object):
    """ Estimated post-action values u_H(a), shared by all members of
    a part

    .. attribute:: perspective

       The player whose value is estimated

    .. attribute:: pa

       The code of the known player set the parts were built for

    .. attribute:: flagged

       Part keys whose entries were filled by a fallback
    """

    def __init__(self, perspective, pa=None, table=None, flagged=None):
        """ Initialize a value function

        :param perspective: The player whose value is estimated
        :param pa: The known player set code (``c``, ``cx``, ...)
        :param table: Mapping of part key to {action: chips}
        :param flagged: Part keys filled by a fallback
        """
        self.perspective = perspective
        self.pa = pa
        self._table = {}
        for key, values in (table or {}).items():
            self._table[key] = dict(values)
        self.flagged = set(flagged or ())

    def value(self, key, action):
        """ Returns u_H(a)

        :param key: The part key
        :param action: The action
        :returns: The value in chips
        """
        values = self._table.get(key)
        if values is None:
            raise MissingValueException(key)
        if action not in values:
            raise MissingValueException(key, action)
        return values[action]

    def values(self, key):
        """ Returns every entry of a part

        :param key: The part key
        :returns: A dict of action to chips
        """
        values = self._table.get(key)
        if values is None:
            raise MissingValueException(key)
        return dict(values)

    def set_values(self, key, values):
        """ Stores the entries of a part

        :param key: The part key
        :param values: Mapping of action to chips
        """
        self._table[key] = dict(values)

    def keys(self):
        return sorted(self._table)

    def items(self):
        return [(key, dict(self._table[key])) for key in self.keys()]

    def __contains__(self, key):
        return key in self._table

    def __len__(self):
        return len(self._table)

    def negated(self, perspective):
        """ Returns the value function of the other player of a zero-sum
        game (u = -w)

        :param perspective: The other player
        :returns: A new ValueFunction
        """
        table = dict((k, dict((a, -v) for a, v in values.items()))
                     for k, values in self._table.items())
        return ValueFunction(perspective, self.pa, table, self.flagged)

    def __eq__(self, other):
        return isinstance(other, ValueFunction) and \
            self._table == other._table and \
            self.perspective == other.perspective

    def __repr__(self):
        return '<ValueFunction {0} pa={1} ({2} parts)>'.format(
            self.perspective, self.pa, len(self._table))


class ConstantValueFunction(ValueFunction):
    """ A value function answering the same constant everywhere
    """

    def __init__(self, perspective, constant, pa=None):
        ValueFunction.__init__(self, perspective, pa)
        self.constant = float(constant)

    def value(self, key, action):
        return self.constant

    def values(self, key):
        return _ConstantEntries(self.constant)

    def __contains__(self, key):
        return True

    def negated(self, perspective):
        return ConstantValueFunction(perspective, -self.constant, self.pa)


class _ConstantEntries(dict):
    """ An entry table holding every action """

    def __init__(self, constant):
        dict.__init__(self)
        self.constant = constant

    def __missing__(self, action):
        return self.constant

    def __contains__(self, action):
        return True


# region Profiles

def agent_profile(x_strategy, y_strategy):
    """ Builds the profile of a seat extended game

    :param x_strategy: The strategy of agent x (both seats)
    :param y_strategy: The strategy of agent y (both seats)
    :returns: A dict of agent to strategy
    """
    return {Player.X: x_strategy, Player.Y: y_strategy}

# endregion


# region Files

def write_strategy(path, strategy, game_id):
    """ Writes a strategy file

    :param path: The destination
    :param strategy: The BehaviorStrategy to write
    :param game_id: The game the strategy plays
    """
    builder = TextPayloadBuilder()
    builder.add_comment('pyaivat strategy')
    builder.add_header(('game', game_id))
    for key, distribution in strategy.items():
        builder.add_pairs(key, distribution)
    builder.write(path)
    _logger.debug('wrote {0} infosets to {1}'.format(len(strategy), path))


def read_strategy(path, owner=None, game_id=None):
    """ Reads a strategy file

    :param path: The file to read
    :param owner: The owner of the strategy
    :param game_id: The expected game, checked when given
    :returns: The BehaviorStrategy
    """
    decoder = TextPayloadDecoder.from_file(path)
    written = decoder.decode_header().get('game')
    if game_id is not None and written not in (None, game_id):
        raise ParameterException(
            '{0} plays {1}, not {2}'.format(path, written, game_id))
    strategy = BehaviorStrategy(owner)
    for _, key, pairs in decoder.decode_pairs():
        strategy.set_policy(key, pairs)
    offending = strategy.validate()
    if offending:
        raise DataCorruptionException(
            '{0}: infoset {1} is not a distribution'.format(
                path, offending[0]))
    return strategy


def write_value_functions(path, functions, game_id):
    """ Writes a value file with one section per known player set

    :param path: The destination
    :param functions: A dict of pa code to ValueFunction
    :param game_id: The game the values belong to
    """
    builder = TextPayloadBuilder()
    builder.add_comment('pyaivat values')
    builder.add_header(('game', game_id))
    for code in sorted(functions):
        function = functions[code]
        builder.add_section(('pa', code),
                            ('perspective', function.perspective))
        for key, values in function.items():
            builder.add_pairs(key, values)
    builder.write(path)


def read_value_functions(path):
    """ Reads a value file

    :param path: The file to read
    :returns: A dict of pa code to ValueFunction
    """
    decoder = TextPayloadDecoder.from_file(path)
    functions = {}
    for section, key, pairs in decoder.decode_pairs():
        code = section.get('pa')
        if code is None:
            raise DataCorruptionException(
                '{0}: value entry outside a section'.format(path))
        if code not in functions:
            functions[code] = ValueFunction(section.get('perspective'), code)
        functions[code].set_values(key, pairs)
    return functions

# endregion


# Exported symbols
__all__ = [
    'SolveReport', 'BehaviorStrategy', 'ValueFunction',
    'ConstantValueFunction', 'agent_profile', 'write_strategy',
    'read_strategy', 'write_value_functions', 'read_value_functions',
]

# -*- coding: utf-8 -*-

"""
Game State Records
------------------

States are histories: a state is fully determined by the sequence of
actions taken from the root. The records here are immutable after
construction and may be shared freely between workers.
"""
from collections import namedtuple


#: The outcome of ``state_info``. ``utilities`` maps every player to its
#: net chips at a terminal and is None elsewhere; ``infoset_key`` is the
#: acting player's key at a decision state and None elsewhere.
StateInfo = namedtuple('StateInfo', [
    'is_terminal', 'acting_player', 'utilities', 'infoset_key'])


class GameState(object):
    """ Base class of all game states

    .. attribute:: history

       Tuple of action tokens from the root

    .. attribute:: acting

       The acting player id, None at terminals
    """
    __slots__ = ('history', 'acting')

    def __init__(self, history, acting):
        object.__setattr__(self, 'history', tuple(history))
        object.__setattr__(self, 'acting', acting)

    def __setattr__(self, name, value):
        raise AttributeError('game states are immutable')

    def _assign(self, **fields):
        for name, value in fields.items():
            object.__setattr__(self, name, value)

    def __getstate__(self):
        return dict((name, getattr(self, name))
                    for cls in type(self).__mro__
                    for name in getattr(cls, '__slots__', ()))

    def __setstate__(self, state):
        self._assign(**state)

    @property
    def is_terminal(self):
        return self.acting is None

    def is_prefix_of(self, other):
        """ Checks if this state strictly precedes another

        :param other: The later state
        :returns: True if ``self`` is a proper prefix of ``other``
        """
        size = len(self.history)
        return size < len(other.history) and \
            other.history[:size] == self.history

    def __eq__(self, other):
        return isinstance(other, GameState) and \
            self.history == other.history

    def __hash__(self):
        return hash(self.history)

    def __repr__(self):
        return '<{0} {1}>'.format(
            self.__class__.__name__, '.'.join(self.history) or '-')


class ReachVector(object):
    """ Per contributor reach probabilities of a state

    The product over every contributor is pi(h); the product over a
    subset T of contributors is pi_T(h).
    """
    __slots__ = ('_reach',)

    def __init__(self, contributors, reach=None):
        """ Initialize a reach vector

        :param contributors: All player ids, chance included
        :param reach: Optional mapping of contributor to probability
        """
        self._reach = dict((p, 1.0) for p in contributors)
        if reach:
            self._reach.update(reach)

    def extend(self, player, probability):
        """ Returns the reach after ``player`` takes an action

        :param player: The acting contributor
        :param probability: The probability of the action taken
        :returns: A new ReachVector
        """
        result = ReachVector(self._reach, self._reach)
        result._reach[player] *= probability
        return result

    def product(self, players=None):
        """ Returns pi_T(h) for a set of contributors

        :param players: The contributors T, all of them when None
        :returns: The product of their reach
        """
        keys = self._reach if players is None else players
        value = 1.0
        for player in keys:
            value *= self._reach.get(player, 1.0)
        return value

    def __getitem__(self, player):
        return self._reach[player]

    def __iter__(self):
        return iter(self._reach.items())

    def as_dict(self):
        return dict(self._reach)

    def __repr__(self):
        return 'ReachVector({0})'.format(self._reach)


# Exported symbols
__all__ = ['StateInfo', 'GameState', 'ReachVector']

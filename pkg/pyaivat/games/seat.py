# -*- coding: utf-8 -*-

"""
Seat Extended Games
-------------------

Agents alternate positions in real matches. The seat extended game
models this as a single root chance event with outcomes ``x1`` (agent x
takes seat 1) and ``x2`` (agent x takes seat 2), each with probability
one half, followed by the unchanged inner game. Its players are the two
agents ``x`` and ``y`` and utilities are reported per agent.

The inner information set keys already name the seat, so one strategy
table can describe an agent in both positions.
"""
from pyaivat.constants import Player
from pyaivat.exceptions import UsageException
from pyaivat.interfaces import IGame
from pyaivat.games.state import GameState, StateInfo

# Logging
import logging
_logger = logging.getLogger(__name__)

_ASSIGNMENTS = ('x1', 'x2')


class SeatState(GameState):
    """ A state of a seat extended game

    .. attribute:: assignment

       ``x1`` or ``x2`` once the seats are drawn, None at the root

    .. attribute:: inner

       The inner game state, None at the root
    """
    __slots__ = ('assignment', 'inner')

    def __init__(self, history, acting, assignment, inner):
        GameState.__init__(self, history, acting)
        self._assign(assignment=assignment, inner=inner)


class SeatExtendedGame(IGame):
    """ Wraps a two player game with a 50/50 seat assignment
    """

    chance_id = Player.Chance
    players = (Player.X, Player.Y)

    def __init__(self, inner):
        """ Initialize the wrapper

        :param inner: The two player game to extend
        """
        if len(inner.players) != 2:
            raise UsageException('seat extension needs a two player game')
        self.inner = inner
        self.game_id = 'seat({0})'.format(inner.game_id)

    # region Seat mapping

    @staticmethod
    def seat_of(assignment, agent):
        """ Returns the inner seat an agent plays

        :param assignment: ``x1`` or ``x2``
        :param agent: ``x`` or ``y``
        :returns: ``1`` or ``2``
        """
        x_first = assignment == _ASSIGNMENTS[0]
        if (agent == Player.X) == x_first:
            return Player.Seat1
        return Player.Seat2

    @staticmethod
    def agent_at(assignment, seat):
        """ Returns the agent sitting at an inner seat

        :param assignment: ``x1`` or ``x2``
        :param seat: ``1`` or ``2``
        :returns: ``x`` or ``y``
        """
        x_first = assignment == _ASSIGNMENTS[0]
        if (seat == Player.Seat1) == x_first:
            return Player.X
        return Player.Y

    def _wrap(self, assignment, inner):
        if inner.acting is None or inner.acting == Player.Chance:
            acting = inner.acting
        else:
            acting = self.agent_at(assignment, inner.acting)
        return SeatState((assignment,) + inner.history, acting,
                         assignment, inner)

    # endregion

    # region IGame

    def initial_state(self):
        return SeatState((), Player.Chance, None, None)

    def legal_actions(self, state):
        if state.assignment is None:
            return _ASSIGNMENTS
        return self.inner.legal_actions(state.inner)

    def apply_action(self, state, action):
        if state.assignment is None:
            if action not in _ASSIGNMENTS:
                raise UsageException(
                    'illegal action {0!r} at {1!r}'.format(action, state))
            return self._wrap(action, self.inner.initial_state())
        inner = self.inner.apply_action(state.inner, action)
        return self._wrap(state.assignment, inner)

    def state_info(self, state):
        if state.is_terminal:
            return StateInfo(True, None, self.utilities(state), None)
        key = None
        if state.acting != Player.Chance:
            key = self.infoset_key(state)
        return StateInfo(False, state.acting, None, key)

    def chance_distribution(self, state):
        if state.assignment is None:
            return dict((a, 0.5) for a in _ASSIGNMENTS)
        return self.inner.chance_distribution(state.inner)

    def infoset_key(self, state):
        return self.inner.infoset_key(state.inner)

    def mask_action(self, state, action, visible):
        if state.assignment is None:
            return action
        seats = set(self.seat_of(state.assignment, agent)
                    for agent in visible if agent in self.players)
        return self.inner.mask_action(state.inner, action, seats)

    def action_rank(self, action):
        if action in _ASSIGNMENTS:
            return (-1, _ASSIGNMENTS.index(action))
        return self.inner.action_rank(action)

    def max_pot(self):
        return self.inner.max_pot()

    # endregion

    def utilities(self, state):
        """ Returns the net chips of both agents at a terminal

        :param state: A terminal state
        :returns: A dict of agent to chips
        """
        inner = self.inner.state_info(state.inner).utilities
        if inner is None:
            raise UsageException(
                'no utilities at non terminal {0!r}'.format(state))
        return dict((agent, inner[self.seat_of(state.assignment, agent)])
                    for agent in self.players)

    def __repr__(self):
        return '<SeatExtendedGame {0}>'.format(self.game_id)


def extend_with_seat_chance(game):
    """ Builds the seat extended version of a two player game

    :param game: The inner game
    :returns: The SeatExtendedGame
    """
    return SeatExtendedGame(game)


# Exported symbols
__all__ = ['SeatState', 'SeatExtendedGame', 'extend_with_seat_chance']

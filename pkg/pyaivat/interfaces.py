# -*- coding: utf-8 -*-

"""
Pyaivat Interfaces
------------------

A collection of base classes that are used throughout
the pyaivat library.
"""

from abc import ABCMeta, abstractmethod


class Singleton(object):
    """
    Singleton base class
    http://mail.python.org/pipermail/python-list/2007-July/450681.html
    """
    def __new__(cls, *args, **kwargs):
        """ Create a new instance
        """
        if '_inst' not in vars(cls):
            cls._inst = object.__new__(cls)
        return cls._inst


class IGame(metaclass=ABCMeta):
    """ Extensive Form Game Base Class

    A game is an immutable description of a two player zero-sum game
    tree. States are histories of actions from the root; every method
    is a pure function of its arguments.

    .. attribute:: game_id

       Short identifier of the game (``kuhn``, ``leduc``, ``seat(leduc)``)

    .. attribute:: players

       Ordered tuple of the two non-chance player ids

    .. attribute:: chance_id

       The id of the chance player
    """

    game_id = None
    players = ()
    chance_id = None

    @abstractmethod
    def initial_state(self):
        """ Returns the root state (empty history)

        :returns: The root state of the game
        """
        raise NotImplementedError('Method not implemented by derived class')

    @abstractmethod
    def legal_actions(self, state):
        """ Returns the ordered legal actions at a non-terminal state

        :param state: The state to query
        :returns: A tuple of actions in canonical order
        """
        raise NotImplementedError('Method not implemented by derived class')

    @abstractmethod
    def apply_action(self, state, action):
        """ Returns the successor state ``state . action``

        :param state: The state to extend
        :param action: A legal action at that state
        :returns: The successor state
        """
        raise NotImplementedError('Method not implemented by derived class')

    @abstractmethod
    def state_info(self, state):
        """ Returns a StateInfo record for the state

        :param state: The state to query
        :returns: The populated StateInfo
        """
        raise NotImplementedError('Method not implemented by derived class')

    @abstractmethod
    def chance_distribution(self, state):
        """ Returns the outcome distribution at a chance state

        :param state: A state where the chance player acts
        :returns: An ordered dict of action to probability
        """
        raise NotImplementedError('Method not implemented by derived class')

    @abstractmethod
    def infoset_key(self, state):
        """ Returns the acting player's information set key

        :param state: A state where a non-chance player acts
        :returns: The canonical information set key
        """
        raise NotImplementedError('Method not implemented by derived class')

    @abstractmethod
    def mask_action(self, state, action, visible):
        """ Returns the token of an action as seen by an observer who
        knows the public actions and the private cards of the
        ``visible`` players only.

        :param state: The state the action is taken at
        :param action: The action taken
        :param visible: The players whose private cards are revealed
        :returns: The (possibly masked) action token
        """
        raise NotImplementedError('Method not implemented by derived class')

    @abstractmethod
    def action_rank(self, action):
        """ Returns a sort key placing actions in canonical order

        :param action: Any action of the game
        :returns: A comparable rank
        """
        raise NotImplementedError('Method not implemented by derived class')

    @abstractmethod
    def max_pot(self):
        """ Returns the largest amount a player can win or lose

        :returns: The bound on terminal utilities in chips
        """
        raise NotImplementedError('Method not implemented by derived class')

    # region realized methods

    def is_chance(self, state):
        """ Checks if the chance player acts at a state

        :param state: The state to check
        :returns: True if the state is a chance node
        """
        return state.acting == self.chance_id

    def opponent(self, player):
        """ Returns the other non-chance player

        :param player: One of the two players
        :returns: The other player
        """
        first, second = self.players
        return second if player == first else first

    def replay(self, actions):
        """ Applies a sequence of actions from the root

        :param actions: The actions to apply in order
        :returns: The reached state
        """
        state = self.initial_state()
        for action in actions:
            state = self.apply_action(state, action)
        return state

    # endregion


class IEstimator(metaclass=ABCMeta):
    """ Value Estimator Base Class

    An estimator maps one observed episode to a value estimate for the
    evaluated player. Implementations must be pure: the same episode
    always yields the same EstimateSample.
    """

    name = None

    @abstractmethod
    def estimate(self, episode):
        """ Evaluates one episode

        :param episode: The observed EpisodeRecord
        :returns: An EstimateSample
        """
        raise NotImplementedError('Method not implemented by derived class')


class IPayloadBuilder(metaclass=ABCMeta):
    """
    This is an interface to a class that can build a text payload
    for one of the library file formats (strategies, value functions,
    episode logs, samples).
    """

    @abstractmethod
    def build(self):
        """ Return the payload buffer as a list of lines

        :returns: The payload buffer as a list
        """
        raise NotImplementedError('Method not implemented by derived class')


# Exported symbols
__all__ = [
    'Singleton',
    'IGame',
    'IEstimator',
    'IPayloadBuilder',
]

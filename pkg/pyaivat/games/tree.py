# -*- coding: utf-8 -*-

"""
Game Tree Enumeration
---------------------

Exact reach probabilities and full tree walks for games small enough to
enumerate (Kuhn, Leduc and their seat extended versions). These walks are
the oracles the estimators are checked against.

A profile is a mapping of non-chance player id to a strategy object that
answers ``policy(infoset_key, actions)`` with an action to probability
dict (see :class:`pyaivat.solver.strategy.BehaviorStrategy`).
"""
import math
from pyaivat.games.state import ReachVector

# Logging
import logging
_logger = logging.getLogger(__name__)


def policy(game, state, profile):
    """ Returns the action distribution at a non-terminal state

    :param game: The game
    :param state: A non-terminal state
    :param profile: Mapping of player to strategy
    :returns: A dict of action to probability over the legal actions
    """
    if game.is_chance(state):
        return game.chance_distribution(state)
    actions = game.legal_actions(state)
    return profile[state.acting].policy(game.infoset_key(state), actions)


def contributors(game):
    """ Returns every reach contributor, chance included

    :param game: The game
    :returns: A tuple of player ids
    """
    return (game.chance_id,) + tuple(game.players)


def reach_vector(game, state, profile):
    """ Computes the per contributor reach of a state

    :param game: The game
    :param state: The state to reach
    :param profile: Mapping of player to strategy
    :returns: The ReachVector of the state
    """
    reach = ReachVector(contributors(game))
    current = game.initial_state()
    for action in state.history:
        probability = policy(game, current, profile).get(action, 0.0)
        reach = reach.extend(current.acting, probability)
        current = game.apply_action(current, action)
    return reach


def walk_states(game, state=None):
    """ Depth first walk over every state in canonical action order

    :param game: The game
    :param state: The subtree root, the game root when None
    :returns: A generator of states, parents before children
    """
    stack = [game.initial_state() if state is None else state]
    while stack:
        current = stack.pop()
        yield current
        if not current.is_terminal:
            children = [game.apply_action(current, a)
                        for a in game.legal_actions(current)]
            stack.extend(reversed(children))


def walk_with_reach(game, profile, state=None, reach=None):
    """ Depth first walk yielding every state with its reach vector

    :param game: The game
    :param profile: Mapping of player to strategy
    :param state: The subtree root, the game root when None
    :param reach: The reach of the subtree root
    :returns: A generator of (state, ReachVector)
    """
    if state is None:
        state = game.initial_state()
    if reach is None:
        reach = ReachVector(contributors(game))
    stack = [(state, reach)]
    while stack:
        current, current_reach = stack.pop()
        yield current, current_reach
        if current.is_terminal:
            continue
        distribution = policy(game, current, profile)
        children = []
        for action in game.legal_actions(current):
            child = game.apply_action(current, action)
            children.append((child, current_reach.extend(
                current.acting, distribution.get(action, 0.0))))
        stack.extend(reversed(children))


def enumerate_terminals(game, profile):
    """ Streams every terminal state with its reach probability

    :param game: An enumerable game
    :param profile: Mapping of player to strategy
    :returns: A generator of (terminal state, pi(z))
    """
    for state, reach in walk_with_reach(game, profile):
        if state.is_terminal:
            yield state, reach.product()


def expected_value(game, profile, player):
    """ Computes the exact expected value of a player

    :param game: An enumerable game
    :param profile: Mapping of player to strategy
    :param player: The player whose value is computed
    :returns: sum over terminals of pi(z) v_p(z)
    """
    return math.fsum(
        probability * game.state_info(z).utilities[player]
        for z, probability in enumerate_terminals(game, profile))


def state_values(game, profile, player):
    """ Computes the expected value of every state under a profile

    :param game: An enumerable game
    :param profile: Mapping of player to strategy
    :param player: The player whose value is computed
    :returns: A dict of history to E[v_p | h]
    """
    values = {}
    for state in reversed(list(walk_states(game))):
        if state.is_terminal:
            values[state.history] = game.state_info(state).utilities[player]
            continue
        distribution = policy(game, state, profile)
        values[state.history] = math.fsum(
            distribution.get(a, 0.0) * values[state.history + (a,)]
            for a in game.legal_actions(state))
    return values


# Exported symbols
__all__ = [
    'policy', 'contributors', 'reach_vector', 'walk_states',
    'walk_with_reach', 'enumerate_terminals', 'expected_value',
    'state_values',
]

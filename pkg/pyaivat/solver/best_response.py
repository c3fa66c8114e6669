# -*- coding: utf-8 -*-

"""
Best Response
-------------

Exact best response values for enumerable games. The responder picks,
at every one of its information sets, the action with the largest
opponent-reach weighted value over the member states. Deeper
information sets are resolved first by the memoized recursion, which
is sound for games with perfect recall.
"""
import math
from pyaivat.games.tree import policy, walk_with_reach

# Logging
import logging
_logger = logging.getLogger(__name__)


class BestResponse(object):
    """ Computes the best response of one player against fixed
    strategies of every other player
    """

    def __init__(self, game, profile, responder):
        """ Initialize the computation

        :param game: An enumerable game
        :param profile: Mapping of the other players to strategies
        :param responder: The responding player
        """
        self.game = game
        self.profile = profile
        self.responder = responder
        self._values = {}
        self._choices = {}
        self._infosets = {}
        self._outside = {}
        others = [p for p in (game.chance_id,) + tuple(game.players)
                  if p != responder]
        for state, reach in walk_with_reach(game, _Fixed(profile, responder)):
            self._outside[state.history] = reach.product(others)
            if state.acting == responder:
                key = game.infoset_key(state)
                self._infosets.setdefault(key, []).append(state)

    def value(self, state=None):
        """ Returns the responder's expected value below a state

        :param state: The subtree root, the game root when None
        :returns: The value in chips
        """
        if state is None:
            state = self.game.initial_state()
        cached = self._values.get(state.history)
        if cached is not None:
            return cached
        if state.is_terminal:
            result = self.game.state_info(state).utilities[self.responder]
        elif state.acting == self.responder:
            action = self.choice(self.game.infoset_key(state))
            result = self.value(self.game.apply_action(state, action))
        else:
            distribution = policy(self.game, state, self.profile)
            result = math.fsum(
                p * self.value(self.game.apply_action(state, a))
                for a, p in distribution.items() if p > 0.0)
        self._values[state.history] = result
        return result

    def choice(self, key):
        """ Returns the best action at a responder information set

        :param key: The information set key
        :returns: The first action of largest weighted value
        """
        chosen = self._choices.get(key)
        if chosen is not None:
            return chosen
        members = self._infosets[key]
        best = None
        for action in self.game.legal_actions(members[0]):
            total = math.fsum(
                self._outside[h.history] *
                self.value(self.game.apply_action(h, action))
                for h in members)
            if best is None or total > best[0]:
                best = (total, action)
        self._choices[key] = best[1]
        return best[1]


class _Fixed(object):
    """ Profile view answering uniformly for the responder, whose own
    reach is excluded from every weight
    """

    def __init__(self, profile, responder):
        self._profile = profile
        self._responder = responder

    def __getitem__(self, player):
        if player == self._responder:
            return self
        return self._profile[player]

    def policy(self, key, actions):
        return dict((a, 1.0) for a in actions)


def _as_profile(game, opponent_strategy, responder):
    if isinstance(opponent_strategy, dict):
        return opponent_strategy
    return {game.opponent(responder): opponent_strategy}


def best_response_value(game, opponent_strategy, responder):
    """ Computes the value of a best response

    :param game: An enumerable game
    :param opponent_strategy: The opponent's strategy, or a profile
    :param responder: The responding player
    :returns: The responder's best response value in chips per game
    """
    profile = _as_profile(game, opponent_strategy, responder)
    return BestResponse(game, profile, responder).value()


def exploitability(game, profile):
    """ Computes the exploitability of a two player zero-sum profile

    The game value cancels in the sum of both best responses, leaving
    the average best response value.

    :param game: An enumerable game
    :param profile: Mapping of player to strategy
    :returns: Chips per game
    """
    values = [best_response_value(game, profile, p) for p in game.players]
    result = math.fsum(values) / len(values)
    if _logger.isEnabledFor(logging.DEBUG):
        _logger.debug('best responses {0} -> {1}'.format(values, result))
    return result


# Exported symbols
__all__ = [
    'BestResponse', 'best_response_value', 'exploitability',
]

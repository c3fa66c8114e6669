# -*- coding: utf-8 -*-

"""
Exact Value Functions
---------------------

Builds u_H(a) by a full tree walk: the expected value of the evaluated
player over the states that follow the members of H taking a, weighted
by their reach under the profile.

A chance outcome the opponents cannot see (a private card of a known
player) leads to the same masked successor for every card, so the
expectation of such an action is taken over the pooled successors of
all hidden outcomes.

With an observer, the expectation is also pooled over every state the
observer cannot tell from a successor. The chance only table read by
MIVAT is built this way with the evaluated player as observer, so its
value after a deal knows that player's cards and the public board but
not the opponent's cards.
"""
import math
from pyaivat.constants import Defaults
from pyaivat.games.tree import state_values, walk_states, walk_with_reach
from pyaivat.solver.agents import UniformStrategy
from pyaivat.solver.strategy import ValueFunction

# Logging
import logging
_logger = logging.getLogger(__name__)


def _expectations(game, profile, perspective):
    values = state_values(game, profile, perspective)
    reach = dict((state.history, vector.product())
                 for state, vector in walk_with_reach(game, profile))
    return values, reach


def observer_views(game, observer):
    """ Maps every history to the tokens one player observes

    :param game: The game
    :param observer: The observing player
    :returns: A dict of history to tuple of tokens, the other
        players' private cards hidden
    """
    visible = frozenset([observer])
    views = {(): ()}
    for state in walk_states(game):
        if state.is_terminal:
            continue
        view = views[state.history]
        for action in game.legal_actions(state):
            views[state.history + (action,)] = view + (
                game.mask_action(state, action, visible),)
    return views


class _ObserverPool(object):
    """ Groups histories by what an observer sees of them
    """

    def __init__(self, views):
        self.views = views
        self.classes = {}
        for history, view in views.items():
            self.classes.setdefault(view, []).append(history)

    def expand(self, successors):
        """ Returns the successors and every history sharing their view
        """
        seen, result = set(), []
        for history in successors:
            for other in self.classes[self.views[history]]:
                if other not in seen:
                    seen.add(other)
                    result.append(other)
        return result


def masked_successors(game, pa, part, action):
    """ Returns the successors the opponents cannot tell from h.a

    :param game: The game
    :param pa: The known players
    :param part: An HPart
    :param action: An action of the part's extended action set
    :returns: A list of successor histories
    """
    token = None
    for member in part.members:
        if action in game.legal_actions(member):
            token = game.mask_action(member, action, pa.opponents)
            break
    successors = []
    for member in part.members:
        for other in game.legal_actions(member):
            if game.mask_action(member, other, pa.opponents) == token:
                successors.append(member.history + (other,))
    return successors


def _mean(successors, values, reach):
    total = math.fsum(reach[h] for h in successors)
    if total < Defaults.DenominatorFloor:
        return None
    return math.fsum((reach[h] / total) * values[h] for h in successors)


def exact_values(game, profile, h_partition, perspective, observer=None):
    """ Computes the self-play value function of a partition

    Parts the profile never reaches take the values of the uniform
    profile and are flagged.

    :param game: An enumerable game
    :param profile: Mapping of player to strategy
    :param h_partition: The HPartition whose parts are valued
    :param perspective: The player whose value is estimated
    :param observer: When set, each value is conditioned on what this
        player observes of the successor instead of the successor itself
    :returns: The ValueFunction
    """
    pa = h_partition.pa
    values, reach = _expectations(game, profile, perspective)
    pool = None
    if observer is not None:
        pool = _ObserverPool(observer_views(game, observer))
    fallback = None
    function = ValueFunction(perspective, pa.code)
    for part in h_partition:
        entries = {}
        for action in part.actions:
            successors = masked_successors(game, pa, part, action)
            if pool is not None:
                successors = pool.expand(successors)
            value = _mean(successors, values, reach)
            if value is None:
                if fallback is None:
                    uniform = dict((p, UniformStrategy(p))
                                   for p in game.players)
                    fallback = _expectations(game, uniform, perspective)
                value = _mean(successors, *fallback)
                function.flagged.add(part.key)
            entries[action] = value
        function.set_values(part.key, entries)
    if function.flagged:
        _logger.warning('pa={0}: {1} unreached parts use uniform '
                        'values'.format(pa.code, len(function.flagged)))
    _logger.debug('pa={0}: valued {1} parts'.format(pa.code, len(function)))
    return function


# Exported symbols
__all__ = ['observer_views', 'masked_successors', 'exact_values']

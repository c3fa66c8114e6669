# -*- coding: utf-8 -*-

"""
Fixed Limit Research Poker
--------------------------

Kuhn poker and Leduc hold'em share one implementation. A game is
described by its deck, the number of betting rounds, the bet size of
each round, the raise cap and the way private cards are dealt:

* Kuhn: three cards ``Js Qs Ks``, one round, ante 1, bet 1, one bet per
  round. Both private cards are dealt by a single chance event whose
  outcomes are the six ordered deals (``JsQs`` gives ``Js`` to seat 1).
* Leduc: six cards ``Js Jh Qs Qh Ks Kh``, two rounds with bets 2 and 4,
  ante 1, at most two raises per round. Private cards are dealt one
  chance event per seat, then one public board card is dealt between the
  rounds. A pair with the board beats any unpaired card; otherwise the
  higher rank wins; suits never break ties.

Betting tokens are ``f`` (fold), ``k`` (check), ``c`` (call) and ``r``
(bet or raise); the canonical order is fold < check/call < raise. Seat 1
acts first in every round.

Information set keys follow the grammar::

    <seat>|<private_cards>|<board>|<betting>

where ``<betting>`` joins the per round betting strings with ``/``
(``2|Qh|Ks|kk/r`` is seat 2 holding Qh, board Ks, facing a bet in the
second round). Utilities are the net chips won.
"""
from collections import namedtuple
from pyaivat.constants import Action, Player
from pyaivat.exceptions import UsageException
from pyaivat.interfaces import IGame
from pyaivat.games.state import GameState, StateInfo

# Logging
import logging
_logger = logging.getLogger(__name__)


#: The chips at stake: ante per player and the bet size of each round.
Stakes = namedtuple('Stakes', ['ante', 'bets'])

_SEATS = (Player.Seat1, Player.Seat2)
_BETTING_ORDER = (Action.Fold, Action.Check, Action.Call, Action.Raise)


class PokerState(GameState):
    """ A state of a fixed limit poker game

    .. attribute:: hands

       Private cards dealt so far, in seat order

    .. attribute:: board

       Public board cards dealt so far

    .. attribute:: betting

       One betting string per started round

    .. attribute:: committed

       Chips put in the pot by seat 1 and seat 2

    .. attribute:: folded

       The seat that folded, if any
    """
    __slots__ = ('hands', 'board', 'betting', 'committed', 'folded')

    def __init__(self, history, acting, hands, board, betting, committed,
                 folded=None):
        GameState.__init__(self, history, acting)
        self._assign(hands=hands, board=board, betting=betting,
                     committed=committed, folded=folded)

    @property
    def pot(self):
        return sum(self.committed)


class PokerGame(IGame):
    """ A two player fixed limit poker game

    Use :func:`kuhn_poker` and :func:`leduc_holdem` to build the
    standard games.
    """

    chance_id = Player.Chance
    players = _SEATS

    def __init__(self, game_id, ranks, suits, stakes, raise_cap,
                 composite_deal):
        """ Initialize a poker game

        :param game_id: The game identifier
        :param ranks: The ranks from lowest to highest
        :param suits: The suits in deck order
        :param stakes: The Stakes of the game, one bet per round
        :param raise_cap: The largest number of bets and raises per round
        :param composite_deal: Deal both private cards as one event
        """
        self.game_id = game_id
        self.ranks = ranks
        self.deck = tuple(r + s for r in ranks for s in suits)
        self.stakes = stakes
        self.rounds = len(stakes.bets)
        self.raise_cap = raise_cap
        self.composite_deal = composite_deal

    # region IGame

    def initial_state(self):
        ante = self.stakes.ante
        return PokerState((), Player.Chance, (), (), ('',), (ante, ante))

    def legal_actions(self, state):
        if state.is_terminal:
            raise UsageException(
                'no legal actions at terminal {0!r}'.format(state))
        if state.acting == Player.Chance:
            return tuple(self._chance_outcomes(state))
        current = state.betting[-1]
        raises = current.count(Action.Raise) < self.raise_cap
        if state.committed[0] != state.committed[1]:
            actions = (Action.Fold, Action.Call)
        else:
            actions = (Action.Check,)
        return actions + (Action.Raise,) if raises else actions

    def apply_action(self, state, action):
        if action not in self.legal_actions(state):
            raise UsageException(
                'illegal action {0!r} at {1!r}'.format(action, state))
        history = state.history + (action,)
        hands, board = state.hands, state.board
        betting, committed = state.betting, state.committed
        folded = None
        if state.acting == Player.Chance:
            if len(hands) < 2:
                hands = (action[:2], action[2:]) if self.composite_deal \
                    else hands + (action,)
            else:
                board = board + (action,)
                betting = betting + ('',)
        else:
            seat = _SEATS.index(state.acting)
            other = 1 - seat
            chips = list(committed)
            if action == Action.Fold:
                folded = state.acting
            elif action == Action.Call:
                chips[seat] = chips[other]
            elif action == Action.Raise:
                chips[seat] = chips[other] + self.stakes.bets[len(betting) - 1]
            committed = tuple(chips)
            betting = betting[:-1] + (betting[-1] + action,)
        acting = self._acting(hands, betting, folded)
        return PokerState(history, acting, hands, board, betting,
                          committed, folded)

    def state_info(self, state):
        if state.is_terminal:
            return StateInfo(True, None, self.utilities(state), None)
        key = None
        if state.acting != Player.Chance:
            key = self.infoset_key(state)
        return StateInfo(False, state.acting, None, key)

    def chance_distribution(self, state):
        if state.acting != Player.Chance:
            raise UsageException(
                'no chance distribution at {0!r}'.format(state))
        outcomes = self._chance_outcomes(state)
        share = 1.0 / len(outcomes)
        return dict((outcome, share) for outcome in outcomes)

    def infoset_key(self, state):
        seat = _SEATS.index(state.acting)
        return '{0}|{1}|{2}|{3}'.format(
            state.acting, state.hands[seat], ''.join(state.board),
            '/'.join(state.betting))

    def mask_action(self, state, action, visible):
        if state.acting != Player.Chance or len(state.hands) >= 2:
            return action
        if self.composite_deal:
            return ''.join(
                card if seat in visible else Action.Hidden
                for seat, card in zip(_SEATS, (action[:2], action[2:])))
        seat = _SEATS[len(state.hands)]
        return action if seat in visible else Action.Hidden

    def action_rank(self, action):
        if action in _BETTING_ORDER:
            return (0, _BETTING_ORDER.index(action))
        if len(action) == 4:
            return (1, self.deck.index(action[:2]) * len(self.deck) +
                    self.deck.index(action[2:]))
        return (1, self.deck.index(action))

    def max_pot(self):
        return self.stakes.ante + self.raise_cap * sum(self.stakes.bets)

    # endregion

    # region Poker rules

    def utilities(self, state):
        """ Returns the net chips of both seats at a terminal

        :param state: A terminal state
        :returns: A dict of seat to chips
        """
        if not state.is_terminal:
            raise UsageException(
                'no utilities at non terminal {0!r}'.format(state))
        if state.folded is not None:
            loser = _SEATS.index(state.folded)
            amount = float(state.committed[loser])
            sign = (-1.0, 1.0) if loser == 0 else (1.0, -1.0)
        else:
            first = self.hand_strength(state.hands[0], state.board)
            second = self.hand_strength(state.hands[1], state.board)
            amount = float(state.committed[0])
            if first > second:
                sign = (1.0, -1.0)
            elif first < second:
                sign = (-1.0, 1.0)
            else:
                sign = (0.0, 0.0)
        return {Player.Seat1: sign[0] * amount + 0.0,
                Player.Seat2: sign[1] * amount + 0.0}

    def hand_strength(self, card, board):
        """ Ranks a private card against the board

        :param card: The private card
        :param board: The board cards
        :returns: A comparable strength tuple
        """
        rank = self.ranks.index(card[0])
        paired = any(c[0] == card[0] for c in board)
        return (1 if paired else 0, rank)

    def _chance_outcomes(self, state):
        used = set(state.hands) | set(state.board)
        remaining = [card for card in self.deck if card not in used]
        if self.composite_deal and not state.hands:
            return [a + b for a in remaining for b in remaining if a != b]
        return remaining

    def _acting(self, hands, betting, folded):
        if folded is not None:
            return None
        if len(hands) < 2:
            return Player.Chance
        current = betting[-1]
        if current == Action.Check * 2 or current.endswith(Action.Call):
            if len(betting) == self.rounds:
                return None
            return Player.Chance
        return _SEATS[len(current) % 2]

    # endregion

    def __repr__(self):
        return '<PokerGame {0}>'.format(self.game_id)


def kuhn_poker():
    """ Builds Kuhn poker: three cards, ante 1, one bet of 1

    :returns: The Kuhn PokerGame
    """
    return PokerGame('kuhn', 'JQK', 's', Stakes(1, (1,)), 1, True)


def leduc_holdem():
    """ Builds Leduc hold'em: six cards, ante 1, bets 2 and 4,
    at most two raises per round

    :returns: The Leduc PokerGame
    """
    return PokerGame('leduc', 'JQK', 'sh', Stakes(1, (2, 4)), 2, False)


# Exported symbols
__all__ = ['Stakes', 'PokerState', 'PokerGame', 'kuhn_poker', 'leduc_holdem']

"""
Game Test Fixture
--------------------------------
This fixture tests the rules of the built in games.

* Kuhn poker
* Leduc hold'em
* The seat extended wrapper
"""
import pickle
import unittest
from pyaivat.constants import Player
from pyaivat.exceptions import ParameterException, UsageException
from pyaivat.games import create_game, game_names
from pyaivat.games.poker import kuhn_poker, leduc_holdem
from pyaivat.games.seat import extend_with_seat_chance

#---------------------------------------------------------------------------#
# Fixture
#---------------------------------------------------------------------------#


class KuhnPokerTest(unittest.TestCase):

    def setUp(self):
        """ Initializes the test environment """
        self.game = kuhn_poker()

    def tearDown(self):
        """ Cleans up the test environment """
        del self.game

    def test_root_deal(self):
        """ Test the composite deal at the root """
        root = self.game.initial_state()
        self.assertEqual(root.acting, Player.Chance)
        actions = self.game.legal_actions(root)
        self.assertEqual(len(actions), 6)
        self.assertEqual(actions[0], 'JsQs')
        distribution = self.game.chance_distribution(root)
        for action in actions:
            self.assertAlmostEqual(distribution[action], 1.0 / 6)

    def test_betting_actions(self):
        """ Test the betting actions after the deal """
        state = self.game.replay(['JsQs'])
        self.assertEqual(state.acting, Player.Seat1)
        self.assertEqual(self.game.legal_actions(state), ('k', 'r'))
        state = self.game.apply_action(state, 'r')
        self.assertEqual(state.acting, Player.Seat2)
        self.assertEqual(self.game.legal_actions(state), ('f', 'c'))

    def test_terminal_utilities(self):
        """ Test the chips won at showdowns and folds """
        cases = [
            (('JsQs', 'k', 'k'), -1.0),
            (('KsJs', 'r', 'f'), 1.0),
            (('KsQs', 'r', 'c'), 2.0),
            (('JsQs', 'k', 'r', 'f'), -1.0),
            (('QsKs', 'k', 'r', 'c'), -2.0),
        ]
        for history, expected in cases:
            state = self.game.replay(history)
            info = self.game.state_info(state)
            self.assertTrue(info.is_terminal)
            self.assertEqual(info.utilities[Player.Seat1], expected)
            self.assertEqual(info.utilities[Player.Seat2], -expected)

    def test_infoset_keys(self):
        """ Test the information set key grammar """
        state = self.game.replay(['JsQs'])
        self.assertEqual(self.game.infoset_key(state), '1|Js||')
        state = self.game.apply_action(state, 'k')
        self.assertEqual(self.game.infoset_key(state), '2|Qs||k')
        info = self.game.state_info(state)
        self.assertFalse(info.is_terminal)
        self.assertEqual(info.infoset_key, '2|Qs||k')

    def test_mask_action(self):
        """ Test hiding the private cards of visible seats """
        root = self.game.initial_state()
        self.assertEqual(
            self.game.mask_action(root, 'JsQs', {Player.Seat2}), '??Qs')
        self.assertEqual(
            self.game.mask_action(root, 'JsQs', {Player.Seat1}), 'Js??')
        self.assertEqual(self.game.mask_action(root, 'JsQs', set()), '????')
        state = self.game.replay(['JsQs'])
        self.assertEqual(self.game.mask_action(state, 'k', set()), 'k')

    def test_action_rank(self):
        """ Test the canonical order fold < check/call < raise """
        ranks = [self.game.action_rank(a) for a in ('f', 'k', 'c', 'r')]
        self.assertEqual(ranks, sorted(ranks))
        self.assertTrue(self.game.action_rank('JsQs') <
                        self.game.action_rank('QsJs'))

    def test_usage_errors(self):
        """ Test operations outside their preconditions """
        terminal = self.game.replay(['JsQs', 'k', 'k'])
        self.assertRaises(UsageException, self.game.legal_actions, terminal)
        state = self.game.replay(['JsQs'])
        self.assertRaises(UsageException, self.game.apply_action, state, 'f')
        self.assertRaises(UsageException,
                          self.game.chance_distribution, state)
        self.assertRaises(UsageException, self.game.utilities, state)

    def test_state_immutable(self):
        """ Test states reject assignment """
        state = self.game.replay(['JsQs'])

        def assign():
            state.acting = Player.Seat2
        self.assertRaises(AttributeError, assign)

    def test_state_pickle(self):
        """ Test states survive a pickle round trip """
        state = self.game.replay(['JsQs', 'k'])
        copy = pickle.loads(pickle.dumps(state))
        self.assertEqual(copy, state)
        self.assertEqual(copy.acting, state.acting)
        self.assertEqual(copy.hands, state.hands)
        self.assertEqual(copy.committed, state.committed)

    def test_prefix(self):
        """ Test the strict prefix relation of histories """
        early = self.game.replay(['JsQs'])
        late = self.game.replay(['JsQs', 'k'])
        self.assertTrue(early.is_prefix_of(late))
        self.assertFalse(late.is_prefix_of(early))
        self.assertFalse(early.is_prefix_of(early))


class LeducHoldemTest(unittest.TestCase):

    def setUp(self):
        """ Initializes the test environment """
        self.game = leduc_holdem()

    def tearDown(self):
        """ Cleans up the test environment """
        del self.game

    def test_private_deals(self):
        """ Test one chance event per private card """
        root = self.game.initial_state()
        self.assertEqual(len(self.game.legal_actions(root)), 6)
        state = self.game.apply_action(root, 'Js')
        self.assertEqual(state.acting, Player.Chance)
        self.assertEqual(len(self.game.legal_actions(state)), 5)
        self.assertFalse('Js' in self.game.legal_actions(state))

    def test_raise_cap(self):
        """ Test no third raise in a round """
        state = self.game.replay(['Js', 'Qh', 'r', 'r'])
        self.assertEqual(self.game.legal_actions(state), ('f', 'c'))

    def test_board_deal(self):
        """ Test the board card follows the first round """
        state = self.game.replay(['Js', 'Qh', 'k', 'k'])
        self.assertEqual(state.acting, Player.Chance)
        self.assertEqual(len(self.game.legal_actions(state)), 4)
        state = self.game.replay(['Js', 'Qh', 'r', 'c', 'Ks', 'r'])
        self.assertEqual(self.game.infoset_key(state), '2|Qh|Ks|rc/r')

    def test_showdown_pair(self):
        """ Test a pair with the board beats a higher card """
        state = self.game.replay(['Qs', 'Kh', 'r', 'c', 'Qh', 'r', 'c'])
        utilities = self.game.state_info(state).utilities
        self.assertEqual(utilities[Player.Seat1], 7.0)
        self.assertEqual(utilities[Player.Seat2], -7.0)

    def test_showdown_tie(self):
        """ Test suits never break ties """
        state = self.game.replay(['Js', 'Jh', 'k', 'k', 'Qs', 'k', 'k'])
        utilities = self.game.state_info(state).utilities
        self.assertEqual(utilities[Player.Seat1], 0.0)

    def test_fold_round_two(self):
        """ Test a fold gives up the committed chips """
        state = self.game.replay(['Js', 'Kh', 'r', 'c', 'Qs', 'r', 'f'])
        utilities = self.game.state_info(state).utilities
        self.assertEqual(utilities[Player.Seat1], 3.0)

    def test_max_pot(self):
        """ Test the largest chips at stake """
        self.assertEqual(self.game.max_pot(), 13)
        self.assertEqual(kuhn_poker().max_pot(), 2)


class SeatExtendedGameTest(unittest.TestCase):

    def setUp(self):
        """ Initializes the test environment """
        self.game = extend_with_seat_chance(kuhn_poker())

    def tearDown(self):
        """ Cleans up the test environment """
        del self.game

    def test_seat_chance(self):
        """ Test the 50/50 seat assignment """
        root = self.game.initial_state()
        self.assertEqual(self.game.legal_actions(root), ('x1', 'x2'))
        distribution = self.game.chance_distribution(root)
        self.assertEqual(distribution, {'x1': 0.5, 'x2': 0.5})
        self.assertEqual(self.game.players, (Player.X, Player.Y))

    def test_agents_at_seats(self):
        """ Test the agents take the seats of the assignment """
        state = self.game.replay(['x2', 'JsQs'])
        self.assertEqual(state.acting, Player.Y)
        self.assertEqual(self.game.infoset_key(state), '1|Js||')
        state = self.game.replay(['x1', 'JsQs'])
        self.assertEqual(state.acting, Player.X)

    def test_utilities_follow_seats(self):
        """ Test the agent utilities of both assignments """
        first = self.game.replay(['x1', 'KsQs', 'r', 'c'])
        second = self.game.replay(['x2', 'KsQs', 'r', 'c'])
        self.assertEqual(self.game.utilities(first)[Player.X], 2.0)
        self.assertEqual(self.game.utilities(second)[Player.X], -2.0)
        self.assertEqual(self.game.utilities(second)[Player.Y], 2.0)

    def test_mask_by_agent(self):
        """ Test masking maps the visible agents to their seats """
        state = self.game.replay(['x2'])
        self.assertEqual(
            self.game.mask_action(state, 'JsQs', {Player.X}), '??Qs')
        root = self.game.initial_state()
        self.assertEqual(self.game.mask_action(root, 'x2', set()), 'x2')

    def test_illegal_assignment(self):
        """ Test an unknown seat assignment is rejected """
        root = self.game.initial_state()
        self.assertRaises(UsageException, self.game.apply_action, root, 'x3')

    def test_state_pickle(self):
        """ Test wrapped states survive a pickle round trip """
        state = self.game.replay(['x2', 'JsQs', 'k'])
        copy = pickle.loads(pickle.dumps(state))
        self.assertEqual(copy, state)
        self.assertEqual(copy.assignment, 'x2')
        self.assertEqual(copy.inner, state.inner)


class GameFactoryTest(unittest.TestCase):

    def test_create_game(self):
        """ Test building games by name """
        self.assertEqual(game_names(), ['kuhn', 'leduc'])
        self.assertEqual(create_game('kuhn').game_id, 'kuhn')
        self.assertEqual(create_game('leduc', True).game_id, 'seat(leduc)')
        self.assertRaises(ParameterException, create_game, 'holdem')

#---------------------------------------------------------------------------#
# Main
#---------------------------------------------------------------------------#
if __name__ == "__main__":
    unittest.main()

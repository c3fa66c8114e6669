import unittest
from pyaivat.games.poker import kuhn_poker
from pyaivat.interfaces import *


class _SingleInstance(Singleton):
    pass


class _Partial(IEstimator):

    def estimate(self, episode):
        return IEstimator.estimate(self, episode)


class InterfaceTest(unittest.TestCase):
    """
    This is the unittest for the pyaivat.interfaces module
    """

    def setUp(self):
        """ Initializes the test environment """
        self.game = kuhn_poker()

    def tearDown(self):
        """ Cleans up the test environment """
        pass

    def test_singleton_interface(self):
        """ Test that the singleton interface works """
        first = _SingleInstance()
        second = _SingleInstance()
        self.assertEqual(first, second)

    def test_abstract_interfaces(self):
        """ Test that the base classes cannot be instantiated """
        self.assertRaises(TypeError, IGame)
        self.assertRaises(TypeError, IEstimator)
        self.assertRaises(TypeError, IPayloadBuilder)
        self.assertRaises(NotImplementedError, _Partial().estimate, None)

    def test_realized_game_methods(self):
        """ Test the methods every game inherits """
        root = self.game.initial_state()
        self.assertTrue(self.game.is_chance(root))
        self.assertEqual(self.game.opponent('1'), '2')
        self.assertEqual(self.game.opponent('2'), '1')
        state = self.game.replay(['JsQs', 'k'])
        self.assertEqual(state.history, ('JsQs', 'k'))
        self.assertFalse(self.game.is_chance(state))

#---------------------------------------------------------------------------#
# Main
#---------------------------------------------------------------------------#
if __name__ == "__main__":
    unittest.main()

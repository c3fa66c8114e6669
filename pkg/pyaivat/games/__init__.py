# -*- coding: utf-8 -*-

"""
Pyaivat Games
-------------

The games the estimators run on, and the factory that builds them from
their command line names.
"""
from pyaivat.exceptions import ParameterException
from pyaivat.games.poker import kuhn_poker, leduc_holdem
from pyaivat.games.seat import extend_with_seat_chance

__builders = {
    'kuhn': kuhn_poker,
    'leduc': leduc_holdem,
}


def create_game(name, seat_extended=False):
    """ Builds a game from its name

    :param name: ``kuhn`` or ``leduc``
    :param seat_extended: Wrap the game in the 50/50 seat assignment
    :returns: The requested game
    """
    builder = __builders.get(name)
    if builder is None:
        raise ParameterException('unknown game {0!r}'.format(name))
    game = builder()
    if seat_extended:
        game = extend_with_seat_chance(game)
    return game


def game_names():
    """ Returns the names accepted by :func:`create_game`
    """
    return sorted(__builders)


# Exported symbols
__all__ = ['create_game', 'game_names']

# -*- coding: utf-8 -*-

"""
Pyaivat Utilities
-----------------

A collection of small numeric and formatting helpers shared by the
games, solvers and estimators.
"""
import math
from pyaivat.constants import Defaults
from pyaivat.exceptions import DataCorruptionException


# region Formatting

def format_probability(value):
    """ Formats a float so that it parses back to the same float

    :param value: The value to format
    :returns: The shortest round trip representation
    """
    return repr(float(value))


def format_sample(value, digits=None):
    """ Formats an estimate with a fixed number of significant digits

    :param value: The value to format
    :param digits: The significant digits (Defaults.SignificantDigits)
    :returns: The formatted value
    """
    digits = digits or Defaults.SignificantDigits
    return '{0:.{1}g}'.format(value, digits)


def parse_pairs(tokens):
    """ Parses ``<action>:<number>`` tokens into an ordered dict

    :param tokens: The tokens to parse
    :returns: A dict of action to float in token order
    """
    result = {}
    for token in tokens:
        action, sep, number = token.rpartition(':')
        if not sep or not action:
            raise DataCorruptionException(
                'malformed action entry {0!r}'.format(token))
        try:
            result[action] = float(number)
        except ValueError:
            raise DataCorruptionException(
                'malformed number in entry {0!r}'.format(token))
    return result

# endregion


# region Numerics

def weighted_mean(weights, values, what='weighted mean'):
    """ Computes sum(w * v) / sum(w) as a sum of normalized weights

    Writing the mean as ``sum((w / total) * v)`` keeps a single term
    exact: ``(w / w) * v == v``.

    :param weights: The non-negative weights
    :param values: The values, aligned with weights
    :param what: A description used in the error message
    :returns: The weighted mean
    """
    weights = list(weights)
    total = math.fsum(weights)
    if total < Defaults.DenominatorFloor:
        raise DataCorruptionException(
            'zero denominator computing ' + str(what))
    return math.fsum((w / total) * v for w, v in zip(weights, values))


def sample_index(probabilities, draw):
    """ Inverse CDF sampling over an ordered probability vector

    :param probabilities: The probabilities in canonical order
    :param draw: A uniform draw in [0, 1)
    :returns: The index of the sampled entry
    """
    cumulative = 0.0
    last = None
    for index, probability in enumerate(probabilities):
        if probability <= 0.0:
            continue
        cumulative += probability
        last = index
        if draw < cumulative:
            return index
    if last is None:
        raise DataCorruptionException('cannot sample an all zero vector')
    return last


def uniform(actions):
    """ Returns the uniform distribution over actions

    :param actions: The actions to mix over
    :returns: A dict of action to probability
    """
    actions = tuple(actions)
    share = 1.0 / len(actions)
    return dict((action, share) for action in actions)

# endregion


# Exported symbols
__all__ = [
    'format_probability', 'format_sample', 'parse_pairs',
    'weighted_mean', 'sample_index', 'uniform',
]

# -*- coding: utf-8 -*-

"""
Pyaivat Exceptions
------------------

Custom exceptions raised by the games, solvers and estimators.
"""


class AivatException(Exception):
    """ Base aivat exception """

    def __init__(self, string):
        """ Initialize the exception
        :param string: The message to append to the error
        """
        Exception.__init__(self, string)
        self.string = string

    def __str__(self):
        return 'AIVAT Error: ' + str(self.string)


class ParameterException(AivatException):
    """ Error resulting from invalid parameter """

    def __init__(self, string=''):
        """ Initialize the exception
        :param string: The message to append to the error
        """
        message = '[Invalid Parameter] ' + str(string)
        AivatException.__init__(self, message)


class UsageException(AivatException):
    """ Error resulting from calling an operation outside its
    precondition (an action on a terminal state, an illegal action, ...)
    """

    def __init__(self, string=''):
        """ Initialize the exception
        :param string: The message to append to the error
        """
        message = '[Usage] ' + str(string)
        AivatException.__init__(self, message)


class DataCorruptionException(AivatException):
    """ Error resulting from inconsistent data (files, logs, reach) """

    def __init__(self, string=''):
        """ Initialize the exception
        :param string: The message to append to the error
        """
        message = '[Data Corruption] ' + str(string)
        AivatException.__init__(self, message)


class MissingInfosetException(DataCorruptionException):
    """ A strategy has no entry for an information set on a path """

    def __init__(self, key):
        """ Initialize the exception
        :param key: The information set key that was not found
        """
        self.key = key
        DataCorruptionException.__init__(
            self, 'strategy has no entry for infoset ' + str(key))


class MissingValueException(DataCorruptionException):
    """ A value function has no entry for a part or action """

    def __init__(self, key, action=None):
        """ Initialize the exception
        :param key: The part key that was not found
        :param action: The action that was not found, if any
        """
        self.key = key
        self.action = action
        message = 'value function has no entry for part ' + str(key)
        if action is not None:
            message += ' action ' + str(action)
        DataCorruptionException.__init__(self, message)


class OracleFailureException(AivatException):
    """ Error resulting from a failed unbiasedness check """

    def __init__(self, string=''):
        """ Initialize the exception
        :param string: The message to append to the error
        """
        message = '[Oracle] ' + str(string)
        AivatException.__init__(self, message)


# Exported symbols
__all__ = [
    'AivatException',
    'ParameterException',
    'UsageException',
    'DataCorruptionException',
    'MissingInfosetException',
    'MissingValueException',
    'OracleFailureException',
]

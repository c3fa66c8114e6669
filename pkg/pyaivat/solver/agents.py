# -*- coding: utf-8 -*-

"""
Built In Agents
---------------

Rule based strategies that answer every information set without a
table. They are used as baseline opponents and as placeholders for
players whose strategy does not matter to a computation.
"""
from pyaivat.constants import Action, Agent
from pyaivat.exceptions import ParameterException
from pyaivat.solver.strategy import BehaviorStrategy
from pyaivat.utilities import uniform


class RuleStrategy(BehaviorStrategy):
    """ Base class of the rule based agents

    A rule strategy covers every information set, so ``policy`` never
    raises a missing infoset error.
    """

    name = None

    def __init__(self, owner=None):
        BehaviorStrategy.__init__(self, owner)

    def policy(self, key, actions):
        raise NotImplementedError('Method not implemented by derived class')

    def __contains__(self, key):
        return True

    def __repr__(self):
        return '<{0} {1}>'.format(self.__class__.__name__, self.owner)


class UniformStrategy(RuleStrategy):
    """ Mixes uniformly over every legal action
    """

    name = Agent.Uniform

    def policy(self, key, actions):
        return uniform(actions)


class CallRaiseStrategy(RuleStrategy):
    """ Calls (or checks) and raises with equal probability and never
    folds. Plays the passive action with probability one when raising is
    not allowed.
    """

    name = Agent.CallRaise

    def policy(self, key, actions):
        distribution = dict((a, 0.0) for a in actions)
        passive = [a for a in actions if a in (Action.Check, Action.Call)]
        support = passive + [a for a in actions if a == Action.Raise]
        if not support:
            return uniform(actions)
        distribution.update(uniform(support))
        return distribution


__agents = {
    UniformStrategy.name: UniformStrategy,
    CallRaiseStrategy.name: CallRaiseStrategy,
}


def fixed_agent(kind, owner=None):
    """ Builds a rule based agent from its name

    :param kind: ``uniform`` or ``callraise``
    :param owner: The owning player
    :returns: The RuleStrategy
    """
    agent = __agents.get(kind)
    if agent is None:
        raise ParameterException('unknown agent {0!r}'.format(kind))
    return agent(owner)


def agent_names():
    """ Returns the names accepted by :func:`fixed_agent`
    """
    return sorted(__agents)


# Exported symbols
__all__ = [
    'RuleStrategy', 'UniformStrategy', 'CallRaiseStrategy',
    'fixed_agent', 'agent_names',
]

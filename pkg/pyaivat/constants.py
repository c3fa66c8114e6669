# -*- coding: utf-8 -*-

"""
Constants For Games, Solvers and Estimators
-------------------------------------------

This is the single location for storing default
values for the solvers, the simulator and the estimators.
"""
from pyaivat.interfaces import Singleton


class Defaults(Singleton):
    """ A collection of pyaivat default values

    .. attribute:: Iterations

       The default number of MCCFR iterations (100000)

    .. attribute:: Seed

       The default master seed for solving and simulation (7)

    .. attribute:: Games

       The default number of simulated games (100000)

    .. attribute:: Checkpoints

       The MCCFR iteration counts at which exploitability is recorded

    .. attribute:: ProbabilityTolerance

       How far a probability vector may sum away from one (1e-12)

    .. attribute:: StrategyTolerance

       How far a stored strategy vector may sum away from one (1e-9)

    .. attribute:: EnumerationTolerance

       Allowed error of an enumerated expectation (1e-9)

    .. attribute:: LemmaTolerance

       Allowed error of a per-part correction expectation (1e-10)

    .. attribute:: DenominatorFloor

       Reach sums below this are treated as zero (1e-300)

    .. attribute:: SignificantDigits

       Digits written for estimate samples (12)

    .. attribute:: ConfidenceZ

       The normal quantile used for 95% intervals (1.96)

    .. attribute:: LogVersion

       The episode log format version written and accepted (1)

    .. attribute:: Workers

       The default number of worker processes (1)

    .. attribute:: ChunkSize

       Episodes handed to a worker at a time (2000)
    """
    Iterations = 100000
    Seed = 7
    Games = 100000
    Checkpoints = (1000, 10000, 100000)
    ProbabilityTolerance = 1e-12
    StrategyTolerance = 1e-9
    EnumerationTolerance = 1e-9
    LemmaTolerance = 1e-10
    DenominatorFloor = 1e-300
    SignificantDigits = 12
    ConfidenceZ = 1.96
    LogVersion = 1
    Workers = 1
    ChunkSize = 2000
    StrategyFile = 'strategy.txt'
    ValueFile = 'values.txt'
    LearnedValueFile = 'values-learned.txt'
    EpisodeFile = 'episodes.txt'
    SampleFile = 'samples.txt'
    ReportFile = 'report.csv'
    TableFile = 'report.txt'


class Player(Singleton):
    """ The player identifiers

    .. attribute:: Chance

       The chance player p_c

    .. attribute:: Seat1

       The first seat of a poker game (acts first every round)

    .. attribute:: Seat2

       The second seat of a poker game

    .. attribute:: X

       The evaluated agent of a seat extended game

    .. attribute:: Y

       The other agent of a seat extended game
    """
    Chance = 'c'
    Seat1 = '1'
    Seat2 = '2'
    X = 'x'
    Y = 'y'


class Action(Singleton):
    """ The betting action tokens, in canonical order

    .. attribute:: Fold
    .. attribute:: Check
    .. attribute:: Call
    .. attribute:: Raise

    .. note:: check and call share the middle rank of the
       canonical order fold < call/check < raise.
    """
    Fold = 'f'
    Check = 'k'
    Call = 'c'
    Raise = 'r'
    Hidden = '??'


class Estimator(Singleton):
    """ The estimator names accepted by the command line

    .. attribute:: Chips

       The basic chip count

    .. attribute:: Mivat

       Chance correction terms only

    .. attribute:: Io

       Imaginary observations over the evaluated agent's strategy

    .. attribute:: MivatIo

       MIVAT values averaged over imaginary observations

    .. attribute:: Aivat

       Base value over imaginary observations plus correction terms
    """
    Chips = 'chips'
    Mivat = 'mivat'
    Io = 'io'
    MivatIo = 'mivat_io'
    Aivat = 'aivat'
    All = ('chips', 'mivat', 'io', 'mivat_io', 'aivat')


class Agent(Singleton):
    """ The built in agent names

    .. attribute:: Uniform

       Mixes uniformly over the legal actions

    .. attribute:: CallRaise

       Mixes uniformly over call/check and raise, never folds
    """
    Uniform = 'uniform'
    CallRaise = 'callraise'


class ExitCode(Singleton):
    """ The command line exit codes
    """
    Success = 0
    Usage = 1
    DataCorruption = 2
    OracleFailure = 3


# Exported Identifiers
__all__ = [
    'Defaults',
    'Player',
    'Action',
    'Estimator',
    'Agent',
    'ExitCode',
]

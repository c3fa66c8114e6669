# -*- coding: utf-8 -*-

"""
Pyaivat Solver
--------------

Strategies, value functions, built in agents and best responses. The
MCCFR trainer lives in :mod:`pyaivat.solver.mccfr` and the exact value
function extraction in :mod:`pyaivat.solver.values`.
"""
from pyaivat.solver.strategy import BehaviorStrategy
from pyaivat.solver.strategy import ValueFunction
from pyaivat.solver.strategy import ConstantValueFunction
from pyaivat.solver.strategy import SolveReport
from pyaivat.solver.agents import fixed_agent
from pyaivat.solver.best_response import best_response_value
from pyaivat.solver.best_response import exploitability


# Exported symbols
__all__ = [
    'BehaviorStrategy',
    'ValueFunction',
    'ConstantValueFunction',
    'SolveReport',
    'fixed_agent',
    'best_response_value',
    'exploitability',
]

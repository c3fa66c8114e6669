# -*- coding: utf-8 -*-

"""
Pyaivat: Agent Evaluation With Variance Reduction
-------------------------------------------------

Value estimators for two player extensive form games (chip count, MIVAT,
imaginary observations and AIVAT), the Kuhn and Leduc poker games they are
exercised on, an external sampling MCCFR solver and exact enumeration
oracles that check the estimators are unbiased.

Released under the the BSD license
"""

from pyaivat.version import Version
__version__ = Version.get_current_version().short()
__author__ = 'Pyaivat Developers'
__author_email__ = 'pyaivat@users.noreply.github.com'

# Block unhandled logging
import logging as __logging
__logging.getLogger(__name__).addHandler(__logging.NullHandler())

"""Quantum state transfer in a three-cavity chain with end qubits and an
optional Kerr medium on the middle cavity.

Thin wrapper over the compiled core; see the project README for usage.
"""

from kerrqst._core import *  # noqa: F401,F403
from kerrqst._core import __doc__  # noqa: F401

__version__ = "0.1.0"

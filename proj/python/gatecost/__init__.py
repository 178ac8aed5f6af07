"""Hamiltonian gate protocols, marginal-information bounds and protocol costs."""

from gatecost._core import *  # noqa: F401,F403
from gatecost._core import __doc__  # noqa: F401

__version__ = "0.1.0"

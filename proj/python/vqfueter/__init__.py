"""Fueter-variable calculus for the quaternionic global operator V_q.

Thin wrapper around the C++ extension; see the project README for the
operations exposed here (monomials, series algebra, kernels, Blaschke
factors, state-space realizations, and the verification suites).
"""

from ._vqfueter import *  # noqa: F401,F403
from ._vqfueter import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"

"""Exact piecewise-linear homeomorphisms of [0, 1] and invariants of Thompson-like groups."""

from .exactnum import Q
from .plmap import IDENTITY, Interval, PLError, PLHomeo, commutator, compose, conjugate, invert

__all__ = ["Q", "IDENTITY", "Interval", "PLError", "PLHomeo", "commutator", "compose", "conjugate", "invert"]
__version__ = "0.1.0"

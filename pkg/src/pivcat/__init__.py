"""Exact computer algebra for pivotal pairs, their intertwiner categories,
and the associated matrix Hopf algebras.

Everything is computed over Q or a prime field with zero tolerance: checks
either pass exactly or report the offending residual.
"""

from . import exact, graded, hopf, intertwiners, monad, pairs, report, terms

__all__ = ["exact", "graded", "hopf", "intertwiners", "monad", "pairs",
           "report", "terms"]

__version__ = "0.1.0"

"""
Error hierarchy shared by every layer.

Each exception carries the exit status the command line reports for it,
so commands never translate errors by hand.
"""

from typing import Any


class ArcLabError(Exception):
    """Base class for all domain failures."""
    
    exit_code: int = 2


class FieldError(ArcLabError, ValueError):
    """Invalid field parameters: non-prime p, h < 1, bad modulus, order guard."""


class FieldArithmeticError(ArcLabError, ZeroDivisionError):
    """Arithmetic with no defined result, such as the inverse of zero."""


class DimensionError(ArcLabError, ValueError):
    """Vector counts or lengths do not match the ambient dimension."""


class DependentPointsError(ArcLabError, ValueError):
    """Points that must be linearly independent are not."""


class NotAnArcError(ArcLabError, ValueError):
    """
    A point sequence violates the arc property where it is required.
    
    Attributes:
        witness: Index set of a singular k-subset, when one is known.
    """
    
    exit_code = 1
    
    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        super().__init__(message)
        self.witness = witness


class ConfigurationError(ArcLabError, ValueError):
    """
    A lemma configuration or Segre query breaks its hypotheses.
    
    Attributes:
        index: Offending position (1-based factor index for Segre queries).
        details: Extra context for reports.
    """
    
    def __init__(self, message: str, index: int | None = None, **details: Any):
        super().__init__(message)
        self.index = index
        self.details = details


class NoValidConfigurationError(ArcLabError):
    """The arc is too small for the footprint of the requested lemma."""


class FormatError(ArcLabError, ValueError):
    """Malformed matrix text or JSON payload."""


class BudgetExhaustedError(ArcLabError):
    """
    The search ran out of its node or time budget before completing.
    
    Attributes:
        nodes: Nodes visited before the budget ran out.
    """
    
    exit_code = 3
    
    def __init__(self, message: str, nodes: int = 0):
        super().__init__(message)
        self.nodes = nodes

    def __reduce__(self):
        return (self.__class__, (str(self), self.nodes))

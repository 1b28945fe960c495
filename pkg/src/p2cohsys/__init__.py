"""Exact numerical invariants of coherent systems of rank 2 on P^2."""
from .core import AlphaLinear, CsType, SubsystemData
from .errors import (
    CriticalInputError,
    EmptyGrassmannianError,
    FeasibilityError,
    GenerationError,
    InconsistencyError,
    NegativeDimensionError,
    P2CohsysError,
    PreconditionError,
    RangeError,
)
from .exactnum import Ordering, QPoly

__version__ = "0.1.0"

__all__ = [
    "AlphaLinear",
    "CsType",
    "SubsystemData",
    "Ordering",
    "QPoly",
    "P2CohsysError",
    "PreconditionError",
    "FeasibilityError",
    "NegativeDimensionError",
    "EmptyGrassmannianError",
    "RangeError",
    "CriticalInputError",
    "GenerationError",
    "InconsistencyError",
]

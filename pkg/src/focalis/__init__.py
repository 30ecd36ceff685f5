"""Exact focal loci, degree formulas and inverse focal constructions over Q(i)."""

from .errors import (
    ConsistencyError,
    FocalisError,
    ParseError,
    PreconditionError,
    RetryExhaustedError,
    UnsupportedError,
)
from .euclid import QuadraticSpace, normal_field
from .variety import ImplicitHypersurface, ParametricVariety

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "FocalisError",
    "ImplicitHypersurface",
    "ParametricVariety",
    "ParseError",
    "PreconditionError",
    "QuadraticSpace",
    "RetryExhaustedError",
    "UnsupportedError",
    "normal_field",
]

"""Finite-model workbench for rough sets over proto-transitive approximation spaces."""

from roughprax.errors import (
    CapExceeded,
    FormatError,
    NotPRAXError,
    RoughError,
    UniverseMismatch,
)
from roughprax.relation import BinaryRelation, PropertyReport, Universe, classify
from roughprax.approx import NeighborhoodMap, OperatorExpr, neighborhoods

__version__ = "0.1.0"

__all__ = [
    "BinaryRelation",
    "CapExceeded",
    "FormatError",
    "NeighborhoodMap",
    "NotPRAXError",
    "OperatorExpr",
    "PropertyReport",
    "RoughError",
    "Universe",
    "UniverseMismatch",
    "classify",
    "neighborhoods",
]

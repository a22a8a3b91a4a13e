"""Exact exponential Riordan arrays built from Jacobi elliptic functions."""
from .errors import (
    BadLinearTerm,
    DegenerateHankel,
    DomainError,
    InvalidPair,
    NoSolution,
    NonzeroInnerConstant,
    NotTridiagonal,
    OrderTooLow,
    RiordanError,
    SingularAtOrigin,
    UnknownName,
    ZeroNormalizer,
)
from .elliptic import catalog_array, jacobi_series
from .matrices import LTMatrix
from .polys import ParamPoly
from .riordan import (
    RiordanArray,
    SubgroupTag,
    build_array,
    ftra_apply,
    inverse,
    multiply,
    row_sums,
)
from .series import Series

__version__ = "0.1.0"

__all__ = [
    "ParamPoly",
    "Series",
    "LTMatrix",
    "RiordanArray",
    "SubgroupTag",
    "build_array",
    "multiply",
    "inverse",
    "ftra_apply",
    "row_sums",
    "catalog_array",
    "jacobi_series",
    "RiordanError",
    "DomainError",
    "NonzeroInnerConstant",
    "BadLinearTerm",
    "InvalidPair",
    "NotTridiagonal",
    "DegenerateHankel",
    "UnknownName",
    "SingularAtOrigin",
    "OrderTooLow",
    "NoSolution",
    "ZeroNormalizer",
]

"""Exact partition and Schur functor calculus.

Littlewood-Richardson and Kronecker multiplicities, Schur functors of graded
objects over ℚ, hook vanishing, and prime tensor ideals of the free
semisimple category on one object, each checked against an independently
computed oracle.
"""

from .errors import (
    BoundExceeded,
    EmptyIdeal,
    EmptyPartition,
    ImproperIdeal,
    InvalidSplit,
    ParseError,
    SchurCalcError,
    SizeMismatch,
    ZeroObject,
)
from .partitions import Partition, parse_partition, transpose
from .report import VerificationReport
from .schur_calculus import GradedObject

__all__ = [
    "BoundExceeded",
    "EmptyIdeal",
    "EmptyPartition",
    "GradedObject",
    "ImproperIdeal",
    "InvalidSplit",
    "ParseError",
    "Partition",
    "SchurCalcError",
    "SizeMismatch",
    "VerificationReport",
    "ZeroObject",
    "parse_partition",
    "transpose",
]

"""Weights, blocks and radicals of Ariki-Koike algebras over prime fields."""

from .blocks import (
    BlockClass,
    ResidueParams,
    WeightOneReport,
    classify_weight_one,
    conjugate_params,
    content,
    find_block,
    mirror_block,
    paired_sums,
    partition_into_blocks,
    weight,
)
from .errors import AKError, CapExceeded, InternalError, ParseError, PreconditionError, TheoremViolation
from .ffield import FieldContext, FieldElement, quantum_characteristic
from .partitions import MultiPartition, dominates, enumerate_multipartitions, parse_multipartition

__version__ = "0.1.0"

__all__ = [
    "AKError", "BlockClass", "CapExceeded", "FieldContext", "FieldElement", "InternalError",
    "MultiPartition", "ParseError", "PreconditionError", "ResidueParams", "TheoremViolation",
    "WeightOneReport", "classify_weight_one", "conjugate_params", "content", "dominates",
    "enumerate_multipartitions", "find_block", "mirror_block", "paired_sums",
    "parse_multipartition", "partition_into_blocks", "quantum_characteristic", "weight",
]

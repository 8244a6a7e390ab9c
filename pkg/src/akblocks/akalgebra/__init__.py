"""Explicit construction of Ariki-Koike algebras and their cellular structure."""

from .analysis import (
    AlgebraAnalysis,
    BlockAnalysis,
    BlockVerdict,
    radical_powers,
    socle_and_central_ideals,
    verify_weight_one_block,
)
from .cellular import (
    Cellular,
    DualBasis,
    GramPair,
    check_cellularity,
    check_trace,
    djm_basis,
    gram_matrices,
    k_lambda,
    lambda_sets,
    trace_and_dual,
)
from .hecke import DIM_CAP, AKAlgebra, AKParams, build_algebra
from .structure import (
    CellModule,
    cell_and_simple_modules,
    center,
    center_and_blocks,
    radical,
)

__all__ = [
    "AKAlgebra", "AKParams", "AlgebraAnalysis", "BlockAnalysis", "BlockVerdict", "CellModule",
    "Cellular", "DIM_CAP", "DualBasis", "GramPair", "build_algebra", "cell_and_simple_modules",
    "center", "center_and_blocks", "check_cellularity", "check_trace", "djm_basis",
    "gram_matrices", "k_lambda", "lambda_sets", "radical", "radical_powers",
    "socle_and_central_ideals", "trace_and_dual", "verify_weight_one_block",
]

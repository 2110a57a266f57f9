"""Quaternion Sylvester equation solvers.

Matrices are numpy float64 arrays of shape (n, m, 4); the trailing axis holds
the components (w, x, y, z). Chains and polynomial coefficient lists use
shape (k, 4).
"""

from ._quatsylv import (
    NoSolutionError,
    Quaternion,
    SingularCaseError,
    UnsupportedShapeError,
    analyze,
    chain_matrix,
    interpolate,
    jordan_block,
    null_basis,
    oracle_solve,
    particular_solution,
    scalar_sylvester,
    similar,
    solve,
    uniqueness_check,
)

__all__ = [
    "NoSolutionError",
    "Quaternion",
    "SingularCaseError",
    "UnsupportedShapeError",
    "analyze",
    "chain_matrix",
    "interpolate",
    "jordan_block",
    "null_basis",
    "oracle_solve",
    "particular_solution",
    "scalar_sylvester",
    "similar",
    "solve",
    "uniqueness_check",
]

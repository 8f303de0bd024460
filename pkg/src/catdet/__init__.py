"""Exact-integer determinant identities on deformed Pascal triangles.

Catalan numbers from Hessenberg determinants, constrained lattice-path
counts, and Toeplitz-Hessenberg minors of power-series reciprocals.
"""

from .builders import (
    PascalTable,
    build_deformed_pascal,
    build_path_matrix,
    build_toeplitz_hessenberg,
    pascal_table,
)
from .catalan import catalan_det, catalan_mingantu, catalan_mingantu_prefix
from .combinat import binomial, catalan_closed
from .exceptions import (
    CapacityError,
    CatdetError,
    DomainError,
    RangeError,
    ValidationError,
)
from .hessmat import (
    DenseIntMatrix,
    HessenbergMatrix,
    det_bareiss,
    det_hessenberg_recurrence,
    principal_minors,
)
from .lattice import (
    BoundaryPair,
    count_dyck,
    count_paths_det,
    count_paths_dp,
    enumerate_paths,
)
from .series import (
    TruncatedSeries,
    binomial_power,
    convolve,
    reciprocal,
    reciprocal_via_minors,
    verify_convolution_identity,
    verify_recurrence_identity,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryPair",
    "CapacityError",
    "CatdetError",
    "DenseIntMatrix",
    "DomainError",
    "HessenbergMatrix",
    "PascalTable",
    "RangeError",
    "TruncatedSeries",
    "ValidationError",
    "binomial",
    "binomial_power",
    "build_deformed_pascal",
    "build_path_matrix",
    "build_toeplitz_hessenberg",
    "catalan_closed",
    "catalan_det",
    "catalan_mingantu",
    "catalan_mingantu_prefix",
    "convolve",
    "count_dyck",
    "count_paths_det",
    "count_paths_dp",
    "det_bareiss",
    "det_hessenberg_recurrence",
    "enumerate_paths",
    "pascal_table",
    "principal_minors",
    "reciprocal",
    "reciprocal_via_minors",
    "verify_convolution_identity",
    "verify_recurrence_identity",
]

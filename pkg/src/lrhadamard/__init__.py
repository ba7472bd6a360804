"""Exact Littlewood-Richardson arithmetic on Grassmannian boxes.

Schur classes of a k x c box are multiplied by evaluating them on
shuffles of a fixed staircase point, inverting the evaluation matrix
once, and pulling entrywise products back to the Schur basis.  A
classical tableau-counting oracle is included for cross-checking.
"""

from .boxes import (
    Box,
    Partition,
    conjugate,
    enumerate_box_partitions,
    fits_in_box,
    format_partition,
    normalize_partition,
    parse_partition,
    rho,
    ShufflePoint,
    shuffle_points,
)
from .exact import (
    DimensionMismatchError,
    RationalMatrix,
    SingularMatrixError,
    hadamard,
    identity,
    mat_det,
    mat_invert,
    mat_mul,
    mat_vec_mul,
)
from .lr import lr_coefficient, lr_expand, truncate_to_box
from .ring import (
    DEFAULT_DIMENSION_CAP,
    PartitionOutOfBoxError,
    ProductExpansion,
    ResourceLimitError,
    RingContext,
    build_context,
    clifford_product,
    cup_product,
    ev_rho,
    full_lr_box,
    minimal_box,
)
from .schur import (
    RepeatedCoordinatesError,
    TooLargeError,
    schur_bialternant,
    schur_jacobi_trudi,
    schur_tableaux_sum,
)

__version__ = "0.1.0"

__all__ = [
    "Box",
    "DEFAULT_DIMENSION_CAP",
    "DimensionMismatchError",
    "Partition",
    "PartitionOutOfBoxError",
    "ProductExpansion",
    "RationalMatrix",
    "RepeatedCoordinatesError",
    "ResourceLimitError",
    "RingContext",
    "ShufflePoint",
    "SingularMatrixError",
    "TooLargeError",
    "build_context",
    "clifford_product",
    "conjugate",
    "cup_product",
    "enumerate_box_partitions",
    "ev_rho",
    "fits_in_box",
    "format_partition",
    "full_lr_box",
    "hadamard",
    "identity",
    "lr_coefficient",
    "lr_expand",
    "mat_det",
    "mat_invert",
    "mat_mul",
    "mat_vec_mul",
    "minimal_box",
    "normalize_partition",
    "parse_partition",
    "rho",
    "schur_bialternant",
    "schur_jacobi_trudi",
    "schur_tableaux_sum",
    "shuffle_points",
    "truncate_to_box",
    "__version__",
]

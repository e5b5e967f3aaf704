"""Integer matrices, normal forms and p-power lattices."""
from .matrix import (
    IntMatrix, SingularMatrixError, bareiss_det, hnf, hnf_of_rows, is_unimodular,
    random_unimodular, row_hnf, snf, vp,
)
from .plattice import (
    HomothetyClass, PLattice, compositions, containing_arrays, dual_basis, hnf_block,
    minimal_rep, smith_exponents_batch, smith_increments, sublattice_arrays,
    sublattices_p_index, superlattices_p_index,
)

__all__ = [
    "IntMatrix", "SingularMatrixError", "bareiss_det", "hnf", "hnf_of_rows", "row_hnf",
    "snf", "vp", "is_unimodular", "random_unimodular", "PLattice", "HomothetyClass",
    "minimal_rep", "smith_increments", "sublattices_p_index", "superlattices_p_index",
    "compositions", "containing_arrays", "sublattice_arrays", "hnf_block",
    "smith_exponents_batch", "dual_basis",
]

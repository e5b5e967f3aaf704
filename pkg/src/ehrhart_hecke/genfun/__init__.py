"""Generating functions: Hermite-Smith, Satake, zeta functions and their checks."""
from .closed import ClosedForm
from .hs import (
    MultiDegreeTable, hs_closed, hs_enumerate, hs_enumerate_symbolic, hs_primitive,
    hs_unprimitive, primitive_direct, table_series_equal,
)
from .satake import R_closed, andrianov_sum, phi_map, psi_nl, satake_truncation_check
from .primitive_closed import W_nI, hs_bar_closed, zeta_C_closed
from .zeta import (
    ZetaA, closed_series, zeta_A_closed, zeta_C_in_t, zeta_check, zeta_series_bruteforce,
)
from .checks import (
    NoClosedFormError, SimplicialComplex, corollary_B_check, eulerian_check, hs_bar_check,
    reciprocity_check,
    R_ones_at_p1, sr_check, sr_hilbert,
)

__all__ = [
    "ClosedForm", "MultiDegreeTable", "hs_closed", "hs_enumerate", "hs_enumerate_symbolic",
    "hs_primitive", "hs_unprimitive", "primitive_direct", "table_series_equal",
    "R_closed", "andrianov_sum", "phi_map", "psi_nl", "satake_truncation_check",
    "W_nI", "hs_bar_closed", "zeta_C_closed",
    "ZetaA", "closed_series", "zeta_A_closed", "zeta_C_in_t", "zeta_check",
    "zeta_series_bruteforce",
    "NoClosedFormError", "SimplicialComplex", "corollary_B_check", "eulerian_check", "hs_bar_check",
    "reciprocity_check", "R_ones_at_p1", "sr_check", "sr_hilbert",
]

"""Hecke cosets of GL_n and GSp_2n and their action on Ehrhart polynomials."""
from .action import (
    EigenReport, building_dot, building_json, building_values, eigen_check, ehrhart_at,
    hecke_act, hecke_act_at, nu_A, nu_A_formula, nu_A_grassmannian, nu_C, nu_C_k0_formula,
    ring_multisets, tamagawa_check, typeA_zeta_coeffs,
)
from .cosets import (
    CosetSet, J_matrix, similitude, similitude_lattices, symplectic_basis, typeA_cosets,
    typeC_cosets, type_c_diag, type_c_smith,
)

__all__ = [
    "CosetSet", "EigenReport", "J_matrix", "similitude", "similitude_lattices",
    "symplectic_basis", "typeA_cosets", "typeC_cosets", "type_c_diag", "type_c_smith",
    "hecke_act", "hecke_act_at", "ehrhart_at", "nu_A", "nu_A_formula", "nu_A_grassmannian",
    "nu_C", "nu_C_k0_formula", "eigen_check", "tamagawa_check", "typeA_zeta_coeffs",
    "building_values", "building_dot", "building_json", "ring_multisets",
]

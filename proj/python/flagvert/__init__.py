"""Vertex functions, elliptic stable envelopes, and Macdonald difference
operators for the cotangent bundle of the full flag variety."""

from ._flagvert import (
    ParamSet,
    sample_params,
    stab_matrix,
    verify_diagonal,
    verify_limits,
    verify_macdonald,
    verify_main_theorem,
    verify_oracles,
    verify_quasiperiodicity,
    verify_stab_inverse,
    verify_triangularity,
    vertex_limit,
    vertex_series,
)

__all__ = [
    "ParamSet",
    "sample_params",
    "stab_matrix",
    "verify_diagonal",
    "verify_limits",
    "verify_macdonald",
    "verify_main_theorem",
    "verify_oracles",
    "verify_quasiperiodicity",
    "verify_stab_inverse",
    "verify_triangularity",
    "vertex_limit",
    "vertex_series",
]

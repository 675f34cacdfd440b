"""Max-plus linear algebra for 2x2 commuting matrices.

Given a finite 2x2 matrix ``A``, the set of vectors ``x = (b11, b12, b21, b22)``
whose matrix commutes with ``A`` is a tropical polyhedral cone.  This package
builds the two-sided system describing it, returns its basis of scaled
extremals, checks that basis against brute-force enumeration, and projects
the four-extremal cases onto a barycentric triangle.
"""

from tropcommute.semiring import BOTTOM, DEFAULT_TOL, oplus, otimes, trop_eq
from tropcommute.matrix import (
    DimensionError,
    TropMatrix,
    TropVector,
    mat_eq,
    mat_oplus,
    mat_otimes,
    parse_matrix,
    vec_to_mat2,
)
from tropcommute.cone import in_span, is_extremal, is_independent, scale, support
from tropcommute.commute import (
    CaseTag,
    ConeBasis,
    basis_commuting_cone,
    build_system,
    classify,
    commutes,
    enumerate_commuting,
    is_solution,
    verify_basis,
)

__all__ = [
    "BOTTOM",
    "DEFAULT_TOL",
    "CaseTag",
    "ConeBasis",
    "DimensionError",
    "TropMatrix",
    "TropVector",
    "basis_commuting_cone",
    "build_system",
    "classify",
    "commutes",
    "enumerate_commuting",
    "in_span",
    "is_extremal",
    "is_independent",
    "is_solution",
    "mat_eq",
    "mat_oplus",
    "mat_otimes",
    "oplus",
    "otimes",
    "parse_matrix",
    "scale",
    "support",
    "trop_eq",
    "vec_to_mat2",
    "verify_basis",
]

__version__ = "0.1.0"

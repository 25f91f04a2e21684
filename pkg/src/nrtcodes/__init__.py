"""Exact computations for linear codes in the Niederreiter-Rosenbloom-Tsfasman
metric: shape enumerators, the MacWilliams transform, invariant theory of the
associated matrix groups and constructions of self-dual codes."""

from .core import (NrtCode, NrtWord, ShapeVector, code_from_rows, codes_equivalent,
                   dual_code, enumerate_codewords, is_self_dual, is_self_orthogonal,
                   nrt_inner, nrt_weight, parity_profile, shape)
from .shape_enum import (ShapeEnumerator, macwilliams_transform, normalized_T,
                         shape_enumerator, theta_matrix, verify_theta_properties)

__version__ = "0.1.0"

__all__ = [
    "NrtCode", "NrtWord", "ShapeEnumerator", "ShapeVector", "code_from_rows",
    "codes_equivalent", "dual_code", "enumerate_codewords", "is_self_dual",
    "is_self_orthogonal", "macwilliams_transform", "normalized_T", "nrt_inner",
    "nrt_weight", "parity_profile", "shape", "shape_enumerator", "theta_matrix",
    "verify_theta_properties",
]

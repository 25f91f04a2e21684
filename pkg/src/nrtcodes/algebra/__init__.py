"""Exact scalar, matrix and polynomial arithmetic."""

from fractions import Fraction as Rational

from .field import FieldElement, field_arith, is_prime
from .matrix import DenseMatrix
from .poly import MultiPoly, jacobian_matrix, monomials, parse_poly, substitute_linear
from .quad import Quad
from .univariate import RationalFunction, UniPoly, det_poly, series_expand

QuadElement = Quad

__all__ = [
    "Rational", "FieldElement", "field_arith", "is_prime", "DenseMatrix",
    "MultiPoly", "jacobian_matrix", "monomials", "parse_poly",
    "substitute_linear", "Quad", "QuadElement", "RationalFunction", "UniPoly",
    "det_poly", "series_expand",
]

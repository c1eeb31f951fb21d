"""Exact rational scalars, polynomials, linear forms and linear algebra."""

from fractions import Fraction

from .linalg import (
    RationalMatrix,
    RrefResult,
    inverse,
    nullspace_basis,
    primitive_integer_vector,
    rank,
    rref,
    solve,
)
from .linear_form import LinearForm, reduce_mod_linear
from .polynomial import (
    Polynomial,
    as_rational,
    default_variable_names,
    format_rational,
    monomials_of_degree,
    parse_polynomial,
)

Rational = Fraction

__all__ = [
    "Fraction",
    "LinearForm",
    "Polynomial",
    "Rational",
    "RationalMatrix",
    "RrefResult",
    "as_rational",
    "default_variable_names",
    "format_rational",
    "inverse",
    "monomials_of_degree",
    "nullspace_basis",
    "parse_polynomial",
    "primitive_integer_vector",
    "rank",
    "reduce_mod_linear",
    "rref",
    "solve",
]

"""Python access to the qsheaf library.

Field elements come back as lists of rational coefficients of
x^0 .. x^(deg Phi_N - 1); ``to_fractions`` converts them.
"""

from fractions import Fraction

from ._qsheaf import (
    ContractViolation,
    ParameterError,
    arrangement_cohomology,
    conformal_blocks,
    dim_L,
    dim_f,
    field,
    gram,
    tor_dims,
    verify,
)


def to_fractions(coeffs):
    return [Fraction(c) for c in coeffs]


__all__ = [
    "ContractViolation",
    "ParameterError",
    "arrangement_cohomology",
    "conformal_blocks",
    "dim_L",
    "dim_f",
    "field",
    "gram",
    "to_fractions",
    "tor_dims",
    "verify",
]

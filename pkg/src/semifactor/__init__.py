"""Exact factorization invariants in concrete semidomains.

Polynomials over N0, N0[x, 1/x] and Q>=0[x]; the Puiseux monoid generated by
the powers of a rational r; its monoid semiring; and N0 together with the
rationals >= k.
"""

from .errors import CapacityError, DomainError, ParseError, SemifactorError
from .invariants import (
    FactorizationReport,
    StructureMismatch,
    elasticity,
    elasticity_family,
    equal_length_distinct_witness,
    factorization_report,
    family_member_is_nonneg,
    family_polynomial,
    length_bound_check,
    length_set,
)
from .poly import LaurentPolynomial, Polynomial, format_laurent, format_poly, parse_laurent, parse_poly
from .semidomain import (
    Factorization,
    Ring,
    atoms_dividing,
    enumerate_divisors,
    enumerate_factorizations,
    is_atom,
    is_unit,
)
from .zx_factor import irreducible_factors_zx, is_irreducible_zx

__all__ = [
    "CapacityError",
    "DomainError",
    "ParseError",
    "SemifactorError",
    "FactorizationReport",
    "StructureMismatch",
    "elasticity",
    "elasticity_family",
    "equal_length_distinct_witness",
    "factorization_report",
    "family_member_is_nonneg",
    "family_polynomial",
    "length_bound_check",
    "length_set",
    "LaurentPolynomial",
    "Polynomial",
    "format_laurent",
    "format_poly",
    "parse_laurent",
    "parse_poly",
    "Factorization",
    "Ring",
    "atoms_dividing",
    "enumerate_divisors",
    "enumerate_factorizations",
    "is_atom",
    "is_unit",
    "irreducible_factors_zx",
    "is_irreducible_zx",
]

"""Length sets, elasticity and related statistics on top of the factorization engine."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, SemifactorError
from .numbers import big_omega
from .poly import Polynomial, is_nonneg, poly_product
from .semidomain import (
    Element,
    Factorization,
    Ring,
    atoms_dividing,
    enumerate_divisors,
    enumerate_factorizations,
)
from .zx_factor import DEFAULT_KRONECKER_CAP


class StructureMismatch(SemifactorError):
    """The engine disagrees with a structure predicted in closed form."""


def length_set(ring, f: Element, deg_cap: int = DEFAULT_KRONECKER_CAP) -> list[int]:
    """Sorted set of factorization lengths; a unit has ``[0]``."""
    return sorted({z.length for z in enumerate_factorizations(ring, f, deg_cap)})


def elasticity_of_lengths(lengths) -> Fraction:
    lengths = list(lengths)
    if not lengths:
        raise DomainError("empty length set")
    if min(lengths) == 0:
        return Fraction(1)
    return Fraction(max(lengths), min(lengths))


def elasticity(ring, f: Element, deg_cap: int = DEFAULT_KRONECKER_CAP) -> Fraction:
    """max L(f) / min L(f) as an exact rational; units have elasticity 1."""
    return elasticity_of_lengths(length_set(ring, f, deg_cap))


def equal_length_distinct_witness(
    ring, f: Element, deg_cap: int = DEFAULT_KRONECKER_CAP
) -> tuple[Factorization, Factorization] | None:
    """The canonically smallest pair of distinct factorizations of equal length, if any."""
    zs = enumerate_factorizations(ring, f, deg_cap)
    if zs == [] or zs[0].length == 0:
        raise DomainError("witness search needs a nonzero nonunit")
    for i, z in enumerate(zs):
        for w in zs[i + 1 :]:
            if z.length == w.length:
                return z, w
    return None


@dataclass
class FactorizationReport:
    """Everything the engine knows about one element, ready for serialization."""

    ring: Ring
    element: Element
    divisors: list[Polynomial]
    atoms: list[Polynomial]
    factorizations: list[Factorization]
    lengths: list[int] = field(init=False)
    elasticity: Fraction = field(init=False)
    complete: bool = True
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.lengths = sorted({z.length for z in self.factorizations})
        self.elasticity = elasticity_of_lengths(self.lengths)


def factorization_report(ring, f: Element, deg_cap: int = DEFAULT_KRONECKER_CAP) -> FactorizationReport:
    ring = Ring.parse(ring)
    zs = enumerate_factorizations(ring, f, deg_cap)
    return FactorizationReport(
        ring=ring,
        element=f,
        divisors=enumerate_divisors(ring, f, deg_cap),
        atoms=atoms_dividing(ring, f, deg_cap),
        factorizations=zs,
    )


def family_polynomial(n: int, k: int) -> Polynomial:
    """(x + n)^n (x^2 - x + 1) (x + 1)^k."""
    return Polynomial((n, 1)) ** n * Polynomial((1, -1, 1)) * Polynomial((1, 1)) ** k


def elasticity_family(n: int, k: int, deg_cap: int = DEFAULT_KRONECKER_CAP) -> FactorizationReport:
    """Factor (x+n)^n (x^2-x+1) (x+1)^k in N0[x] and check its two-factorization shape.

    Expected: ``[(x+n)^n (x^2-x+1)] * [x+1]^k`` of length k+1 and
    ``[x+n]^n * [x^3+1] * [x+1]^(k-1)`` of length k+n.  Raises
    :class:`StructureMismatch` if the engine finds anything else.
    """
    if n < 2 or k < 1:
        raise DomainError("need n >= 2 and k >= 1")
    f = family_polynomial(n, k)
    report = factorization_report(Ring.NN_POLY, f, deg_cap)
    xn, x1 = Polynomial((n, 1)), Polynomial((1, 1))
    big = xn**n * Polynomial((1, -1, 1))
    expected = sorted(
        [
            Factorization(Ring.NN_POLY, tuple(sorted([big] + [x1] * k, key=Polynomial.sort_key))),
            Factorization(
                Ring.NN_POLY,
                tuple(sorted([xn] * n + [Polynomial((1, 0, 0, 1))] + [x1] * (k - 1), key=Polynomial.sort_key)),
            ),
        ],
        key=Factorization.sort_key,
    )
    if report.factorizations != expected:
        raise StructureMismatch(f"unexpected factorizations of f_{{{n},{k}}}: {[str(z) for z in report.factorizations]}")
    if report.lengths != sorted({k + 1, k + n}):
        raise StructureMismatch(f"unexpected lengths {report.lengths}")
    report.extra = {"n": n, "k": k}
    return report


def length_bound_check(f: Polynomial, deg_cap: int = DEFAULT_KRONECKER_CAP) -> bool:
    """max L(f) in N0[x] is at most Omega(leading coefficient) + deg f."""
    if f.is_zero:
        raise DomainError("zero has no lengths")
    if not is_nonneg(f):
        raise DomainError(f"{f} is not in N0[x]")
    return max(length_set(Ring.NN_POLY, f, deg_cap)) <= big_omega(f.lc) + f.degree


def family_member_is_nonneg(n: int, m: int) -> bool:
    """Whether (x + n)^m (x^2 - x + 1) has only nonnegative coefficients."""
    return is_nonneg(poly_product([Polynomial((n, 1)) ** m, Polynomial((1, -1, 1))]))

"""Divisors, atoms and factorization sets in N0[x], N0[x, 1/x] and Q>=0[x].

Every nonzero element f is written through its Z[x] factorization as

    f = c * P_1^E_1 * ... * P_m^E_m

with P_i primitive irreducible (positive leading coefficient).  By Gauss's
lemma a divisor of f in Z[x] with positive leading coefficient is d * P^e with
d | c and e <= E componentwise, and it divides f inside the semidomain exactly
when both P^e and P^(E-e) have nonnegative coefficients (a positive constant
never changes signs).  So every question below reduces to a finite scan over
exponent vectors e.  Keys ``(d, e)`` stand for the element ``d * P^e``.

Units: {1} in N0[x]; {x^n} in the Laurent ring, so only the order-0 body
matters; positive rationals in Q>=0[x], so the constant d is dropped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import lcm
from typing import Union

from .errors import DomainError
from .numbers import divisors as nat_divisors
from .poly import (
    LaurentPolynomial,
    Polynomial,
    content_primitive,
    is_nonneg,
    laurent_normalize,
    poly_product,
)
from .zx_factor import DEFAULT_KRONECKER_CAP, irreducible_factors_zx

Element = Union[Polynomial, LaurentPolynomial]


class Ring(enum.Enum):
    NN_POLY = "nn-poly"
    NN_LAURENT = "nn-laurent"
    QP_POLY = "qp-poly"

    @classmethod
    def parse(cls, name) -> Ring:
        if isinstance(name, Ring):
            return name
        try:
            return cls(str(name).lower().replace("_", "-"))
        except ValueError:
            raise DomainError(f"unknown ring {name!r}") from None


@dataclass(frozen=True)
class Factorization:
    """A multiset of atoms, stored sorted in canonical order with repetition."""

    ring: Ring
    atoms: tuple[Polynomial, ...]

    @property
    def length(self) -> int:
        return len(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def counts(self) -> list[tuple[Polynomial, int]]:
        out: list[tuple[Polynomial, int]] = []
        for a in self.atoms:
            if out and out[-1][0] == a:
                out[-1] = (a, out[-1][1] + 1)
            else:
                out.append((a, 1))
        return out

    def product(self) -> Polynomial:
        return poly_product(self.atoms)

    def sort_key(self):
        return tuple(a.sort_key() for a in self.atoms)

    def __str__(self):
        if not self.atoms:
            return "1"
        return " * ".join(f"({a})" if len(a.coeffs) > 1 else str(a) for a in self.atoms)


def _to_body(ring: Ring, f: Element) -> Polynomial:
    """The polynomial whose divisor structure represents f in ``ring``."""
    if isinstance(f, LaurentPolynomial):
        if f.is_zero:
            raise DomainError("zero has no divisors or factorizations")
        if ring is not Ring.NN_LAURENT:
            if f.shift < 0:
                raise DomainError(f"{f} has negative exponents; not an element of {ring.value}")
            f = f.body.shift(f.shift)
    if isinstance(f, LaurentPolynomial):
        body = f.body
    else:
        if f.is_zero:
            raise DomainError("zero has no divisors or factorizations")
        body = laurent_normalize(f)[1] if ring is Ring.NN_LAURENT else f
    if not is_nonneg(body):
        raise DomainError(f"{body} has a negative coefficient; not an element of {ring.value}")
    if ring is Ring.QP_POLY:
        den = lcm(*(Fraction(c).denominator for c in body.coeffs))
        body = content_primitive(body.scale(den))[1]
    elif not body.is_integral:
        raise DomainError(f"{body} has non-integer coefficients; not an element of {ring.value}")
    return body


class _Structure:
    """Z[x] data for one body polynomial, shared by all queries on it."""

    def __init__(self, ring: Ring, body: Polynomial, deg_cap: int):
        fac = irreducible_factors_zx(body, deg_cap)
        self.ring = ring
        self.content = 1 if ring is Ring.QP_POLY else fac.content_value
        self.primes = [p for p, _ in fac.factors]
        self.exps = tuple(e for _, e in fac.factors)
        self._power: dict[tuple[int, ...], Polynomial] = {}
        self._nonneg: dict[tuple[int, ...], bool] = {}
        for e in product(*(range(k + 1) for k in self.exps)):
            poly = poly_product(p**k for p, k in zip(self.primes, e))
            self._power[e] = poly
            self._nonneg[e] = is_nonneg(poly)
        self.top = (self.content, self.exps)
        self._atom_cache: dict = {}

    def element(self, key) -> Polynomial:
        d, e = key
        return self._power[e].scale(d)

    @staticmethod
    def _sub(a, b):
        return tuple(x - y for x, y in zip(a, b))

    def divides(self, small, big) -> bool:
        (d1, e1), (d2, e2) = small, big
        if d2 % d1 or any(x > y for x, y in zip(e1, e2)):
            return False
        return self._nonneg[e1] and self._nonneg[self._sub(e2, e1)]

    def divisor_keys(self, key):
        d, e = key
        out = []
        for dd in nat_divisors(d):
            for ee in product(*(range(k + 1) for k in e)):
                if self._nonneg[ee] and self._nonneg[self._sub(e, ee)]:
                    out.append((dd, ee))
        return out

    def quotient(self, big, small):
        return (big[0] // small[0], self._sub(big[1], small[1]))

    def is_unit(self, key) -> bool:
        return key[0] == 1 and not any(key[1])

    def is_atom(self, key) -> bool:
        if key in self._atom_cache:
            return self._atom_cache[key]
        if self.is_unit(key):
            res = False
        else:
            res = all(self.is_unit(k) or k == key for k in self.divisor_keys(key))
        self._atom_cache[key] = res
        return res

    def sort_key(self, key):
        return self.element(key).sort_key()

    def factorizations(self, key) -> list[tuple]:
        """All factorizations of ``key`` as nondecreasing tuples of atom keys."""
        atoms = sorted((k for k in self.divisor_keys(key) if self.is_atom(k)), key=self.sort_key)
        memo: dict = {}

        def rec(g, start):
            if (g, start) in memo:
                return memo[g, start]
            if self.is_unit(g):
                return [()]
            out = []
            for j in range(start, len(atoms)):
                a = atoms[j]
                if self.divides(a, g):
                    for rest in rec(self.quotient(g, a), j):
                        out.append((a,) + rest)
            memo[g, start] = out
            return out

        return rec(key, 0)


@lru_cache(maxsize=512)
def _structure(ring: Ring, body: Polynomial, deg_cap: int) -> _Structure:
    return _Structure(ring, body, deg_cap)


def _prepare(ring, f: Element, deg_cap: int) -> _Structure:
    ring = Ring.parse(ring)
    return _structure(ring, _to_body(ring, f), deg_cap)


def enumerate_divisors(ring, f: Element, deg_cap: int = DEFAULT_KRONECKER_CAP) -> list[Polynomial]:
    """All divisors of f in ``ring``, one canonical representative per associate class.

    Representatives: the divisor itself in N0[x]; its order-0 body in the
    Laurent ring; the primitive polynomial with positive leading coefficient in
    Q>=0[x].  Returned in canonical (degree, coefficients) order.
    """
    st = _prepare(ring, f, deg_cap)
    return sorted((st.element(k) for k in st.divisor_keys(st.top)), key=Polynomial.sort_key)


def is_atom(ring, f: Element, deg_cap: int = DEFAULT_KRONECKER_CAP) -> bool:
    st = _prepare(ring, f, deg_cap)
    return st.is_atom(st.top)


def is_unit(ring, f: Element) -> bool:
    ring = Ring.parse(ring)
    body = _to_body(ring, f)
    if ring is Ring.QP_POLY:
        return body.degree == 0
    return body == Polynomial((1,))


def enumerate_factorizations(ring, f: Element, deg_cap: int = DEFAULT_KRONECKER_CAP) -> list[Factorization]:
    """The full set of factorizations of f, canonically ordered.

    A unit yields the single empty factorization.
    """
    ring = Ring.parse(ring)
    st = _prepare(ring, f, deg_cap)
    out = [Factorization(ring, tuple(st.element(k) for k in z)) for z in st.factorizations(st.top)]
    return sorted(out, key=Factorization.sort_key)


def atoms_dividing(ring, f: Element, deg_cap: int = DEFAULT_KRONECKER_CAP) -> list[Polynomial]:
    """The atoms (canonical representatives) that divide f."""
    st = _prepare(ring, f, deg_cap)
    keys = [k for k in st.divisor_keys(st.top) if st.is_atom(k)]
    return sorted((st.element(k) for k in keys), key=Polynomial.sort_key)


"""Exact integers, rationals, and elementary number theory.

Naturals and integers are plain Python ``int`` and rationals are
:class:`fractions.Fraction`; both are arbitrary precision and always exact.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterator

from .errors import CapacityError, DomainError, ParseError

#: trial division refuses inputs at or above this bound
DEFAULT_FACTOR_CAP = 2**64

PrimeFactorization = tuple[tuple[int, int], ...]


def nat_gcd(a: int, b: int) -> int:
    """gcd of two naturals, with ``nat_gcd(0, 0) == 0``."""
    if a < 0 or b < 0:
        raise DomainError("nat_gcd expects naturals")
    return math.gcd(a, b)


def gcd_many(values) -> int:
    g = 0
    for v in values:
        g = math.gcd(g, v)
    return g


def _check_positive(n: int, cap: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected an integer, got {n!r}")
    if n <= 0:
        raise DomainError("0 has no prime factorization" if n == 0 else f"{n} is not a natural")
    if n >= cap:
        raise CapacityError(f"{n} exceeds the trial-division cap {cap}")


def factor_nat(n: int, cap: int = DEFAULT_FACTOR_CAP) -> PrimeFactorization:
    """Prime factorization of ``n >= 1`` as ``((p1, e1), (p2, e2), ...)``, primes increasing."""
    _check_positive(n, cap)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def big_omega(n: int, cap: int = DEFAULT_FACTOR_CAP) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    return sum(e for _, e in factor_nat(n, cap))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factor_nat(n) == ((n, 1),)


def prime_list(fac: PrimeFactorization) -> list[int]:
    """Expand a factorization into the sorted list of primes with repetition."""
    return [p for p, e in fac for _ in range(e)]


def factorization_from_counter(c: Counter) -> PrimeFactorization:
    return tuple(sorted((p, e) for p, e in c.items() if e))


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n >= 1``, increasing."""
    divs = [1]
    for p, e in factor_nat(abs(n)):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def iter_divisors_signed(n: int) -> Iterator[int]:
    """Positive then negative divisors of a nonzero integer."""
    ds = divisors(abs(n))
    yield from ds
    yield from (-d for d in ds)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or ``"-p/q"`` into a Fraction."""
    s = text.strip()
    try:
        num, _, den = s.partition("/")
        if not num.strip().lstrip("+-").isdigit() or (den and not den.strip().isdigit()):
            raise ValueError
        q = Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational: {text!r}", 0) from None
    return q


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

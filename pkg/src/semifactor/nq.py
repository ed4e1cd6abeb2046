"""The positive semiring N0 ∪ Q>=k (k >= 2), the rational slice of N0 ∪ R>=k.

Its only unit is 1 and its nonunits above 1 are the integers >= 2 and the
rationals >= k.  A product of two nonunits is at least min(4, 2k, k^2), so
atoms are decided by a finite search: integer cofactors up to q/2, and one
rational split, which exists exactly when q >= k^2.

Every element has finitely many factorization *lengths* but q >= k^2 has
infinitely many factorizations: (k+1)^2 = (mu (k+1)) (mu^-1 (k+1)) for every
rational mu > 1 close enough to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt

from .errors import DomainError


@dataclass(frozen=True)
class NQParams:
    k: int

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise DomainError(f"k must be an integer >= 2, got {self.k!r}")


def nq_is_member(params: NQParams, q) -> bool:
    q = Fraction(q)
    return (q >= 0 and q.denominator == 1) or q >= params.k


def _nonunit_member(params: NQParams, q: Fraction) -> bool:
    return q > 1 and nq_is_member(params, q)


def _check(params: NQParams, q) -> Fraction:
    q = Fraction(q)
    if not nq_is_member(params, q):
        raise DomainError(f"{q} is not in N0 ∪ Q>={params.k}")
    return q


def integer_splits(params: NQParams, q: Fraction) -> list[tuple[int, Fraction]]:
    """Pairs (m, q/m) with m an integer >= 2 and q/m a nonunit member."""
    return [(m, q / m) for m in range(2, floor(q / 2) + 1) if _nonunit_member(params, q / m)]


def nq_is_atom(params: NQParams, q) -> bool:
    """Whether q is an atom, decided by direct search (no closed-form atom set)."""
    q = _check(params, q)
    if q <= 1:
        return False
    if q >= params.k**2:
        return False
    return not integer_splits(params, q)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    return Fraction(a, b) if a * a == q.numerator and b * b == q.denominator else None


def mu_sequence_start(params: NQParams, root: Fraction) -> int:
    """Least c0 with k < root/mu and root*mu < k + 2 for mu = 1 + 1/c0.

    Both bounds tend to root as mu -> 1, so c0 exists exactly when
    k < root < k + 2 (root = k + 1 is the classical case).
    """
    k = params.k
    if not k < root < k + 2:
        raise DomainError(f"no admissible mu for root {root}")
    c0 = 1
    while True:
        mu = 1 + Fraction(1, c0)
        if root / mu > k and root * mu < k + 2:
            return c0
        c0 += 1


def rational_split_candidates(params: NQParams, q: Fraction, limit: int):
    """Deterministic divisors d for two-atom splits q = d * (q/d).

    Squares of roots in (k, k+2) use the mu sequence; otherwise d runs
    through the open interval where both d and q/d lie in [k, k^2).
    Candidates still have to pass the atom test.
    """
    k = params.k
    if q < k * k:
        return
    root = _rational_sqrt(q)
    if root is not None and k < root < k + 2:
        c0 = mu_sequence_start(params, root)
        for j in range(limit):
            yield root / (1 + Fraction(1, j + c0))
        return
    lo, hi = max(Fraction(k), q / k**2), min(Fraction(k * k), q / k)
    if lo > hi:
        return
    if lo == hi:
        yield lo
        return
    for j in range(limit):
        yield lo + (hi - lo) / (j + 2)


@dataclass(frozen=True)
class NQSample:
    factorizations: list[tuple[Fraction, ...]]
    is_atom: bool


def _integer_peelings(params: NQParams, q: Fraction, start: int = 2):
    """Factorizations using integer atoms (nondecreasing) and at most one other atom."""
    out = []
    if nq_is_atom(params, q):
        out.append((q,))
    for m in range(start, floor(q / 2) + 1):
        rest = q / m
        if nq_is_atom(params, m) and _nonunit_member(params, rest):
            for tail in _integer_peelings(params, rest, m):
                if all(x.denominator != 1 or x >= m for x in tail):
                    out.append(tuple(sorted((Fraction(m),) + tail)))
    return out


def _two_atom_splits(params: NQParams, q: Fraction, limit: int):
    for d in rational_split_candidates(params, q, limit):
        e = q / d
        if nq_is_member(params, d) and nq_is_member(params, e) and nq_is_atom(params, d) and nq_is_atom(params, e):
            yield tuple(sorted((d, e)))


def nq_factorization_sample(params: NQParams, q, count: int, mu_limit: int = 1000) -> NQSample:
    """Up to ``count`` distinct factorizations of q, two-atom splits first.

    Order: integer two-atom splits, rational two-atom splits, longer
    factorizations from integer peeling, and finally those peelings with one
    pair of atoms re-split rationally.
    """
    q = _check(params, q)
    if q <= 1:
        raise DomainError(f"{q} is zero or a unit")
    if nq_is_atom(params, q):
        return NQSample([], True)
    seen: dict[tuple[Fraction, ...], None] = {}
    peel = sorted(set(_integer_peelings(params, q)), key=lambda z: (len(z), z))
    for z in peel:
        if len(z) == 2:
            seen[z] = None
    for z in _two_atom_splits(params, q, mu_limit):
        if len(seen) >= count:
            break
        seen[z] = None
    for z in peel:
        seen.setdefault(z, None)
    for z in peel:
        if len(seen) >= count:
            break
        for i in range(len(z)):
            for j in range(i + 1, len(z)):
                rest = z[:i] + z[i + 1 : j] + z[j + 1 :]
                for pair in _two_atom_splits(params, z[i] * z[j], mu_limit):
                    if len(seen) >= count:
                        break
                    seen.setdefault(tuple(sorted(rest + pair)), None)
    return NQSample(list(seen)[:count], False)


def nq_length_set_bounded(params: NQParams, q, max_len: int = 32, split_tries: int = 3) -> list[int]:
    """A sound subset of the length set of q.

    Exhaustive integer splits plus a few rational two-way splits, to depth
    ``max_len``.
    """
    q = _check(params, q)
    if q == 1:
        return [0]
    if q == 0:
        raise DomainError("0 has no factorizations")
    memo: dict[Fraction, frozenset[int]] = {}

    def lengths(x: Fraction, budget: int) -> frozenset[int]:
        if budget <= 0:
            return frozenset()
        if x in memo:
            return memo[x]
        out = set()
        if nq_is_atom(params, x):
            out.add(1)
        for m, rest in integer_splits(params, x):
            if nq_is_atom(params, m):
                out |= {1 + n for n in lengths(rest, budget - 1)}
        accepted = 0
        for d in rational_split_candidates(params, x, 50):
            if accepted >= split_tries:
                break
            if nq_is_member(params, d) and nq_is_atom(params, d) and _nonunit_member(params, x / d):
                accepted += 1
                out |= {1 + n for n in lengths(x / d, budget - 1)}
        res = frozenset(n for n in out if n <= max_len)
        memo[x] = res
        return res

    return sorted(lengths(q, max_len))

"""The additive monoid S_r generated by the powers of a rational 0 < r < 1.

Write r = n/d in lowest terms (n >= 2).  Every member q has a canonical digit
vector (c_0, ..., c_m): q = sum c_j r^j, c_j < n below the top index, and m
the least exponent with denom(q) | d^m.  Clearing denominators,

    q * d^m = sum_j c_j n^j d^(m-j),

and reducing mod n pins down c_0 (d is invertible mod n); subtracting and
dividing by n repeats the argument one level up.  So membership is a linear
scan, and the identity n r^j = d r^(j+1) is what the carries implement.

Elements whose canonical digits are *all* below n (top included) have a finite
divisor set, and every divisor lives at depth <= m; :func:`divisors`
enumerates it by choosing one summand digit by digit and tracking carries.
Elements with a top digit >= n have infinitely many divisors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import CapacityError, DomainError

DEFAULT_DEPTH_CAP = 64


@dataclass(frozen=True)
class PuiseuxParams:
    r: Fraction

    def __post_init__(self):
        r = Fraction(self.r)
        object.__setattr__(self, "r", r)
        if not 0 < r < 1:
            raise DomainError(f"r = {r} must lie strictly between 0 and 1")
        if r.numerator < 2:
            raise DomainError(f"numerator of r = {r} must be at least 2")

    @property
    def n(self) -> int:
        return self.r.numerator

    @property
    def d(self) -> int:
        return self.r.denominator


@dataclass(frozen=True)
class PuiseuxElement:
    """A member of S_r with its canonical digit vector (low index first)."""

    value: Fraction
    coeffs: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self):
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class ChainWitness:
    """a_0, a_1, ... with a_i = a_{i+1} + gaps[i] and every gap a nonzero member."""

    params: PuiseuxParams
    elements: tuple[PuiseuxElement, ...]
    gaps: tuple[PuiseuxElement, ...]

    def verify(self) -> bool:
        if len(self.elements) != len(self.gaps) + 1:
            return False
        for a, b, g in zip(self.elements, self.elements[1:], self.gaps):
            if a.value != b.value + g.value or g.value == 0:
                return False
            if is_member(self.params, g.value) is None:
                return False
        return len({a.value for a in self.elements}) == len(self.elements)


def value_of(params: PuiseuxParams, coeffs: Sequence[int]) -> Fraction:
    return sum((Fraction(c) * params.r**j for j, c in enumerate(coeffs)), Fraction(0))


def min_depth(params: PuiseuxParams, q: Fraction) -> int | None:
    """Least m with denom(q) | d^m, or None if no such m exists."""
    rest, m = Fraction(q).denominator, 0
    while rest > 1:
        g = gcd(rest, params.d)
        if g == 1:
            return None
        rest //= g
        m += 1
    return m


def digits_at_depth(params: PuiseuxParams, q: Fraction, m: int) -> tuple[int, ...] | None:
    """Canonical digits of q written at depth m (m >= min depth), or None if q is not a member."""
    n, d = params.n, params.d
    total = Fraction(q) * d**m
    if total.denominator != 1:
        raise DomainError(f"{q} cannot be written at depth {m}")
    t = total.numerator
    dinv = pow(d, -1, n)
    out = []
    for j in range(m):
        c = t * pow(dinv, m - j, n) % n
        t = t - c * d ** (m - j)
        if t < 0:
            return None
        t //= n
        out.append(c)
    out.append(t)
    return tuple(out)


def is_member(params: PuiseuxParams, q, depth_cap: int = DEFAULT_DEPTH_CAP) -> PuiseuxElement | None:
    """The canonical element for q if q lies in S_r, else None."""
    q = Fraction(q)
    if q < 0:
        raise DomainError(f"{q} is negative")
    m = min_depth(params, q)
    if m is None:
        return None
    if m > depth_cap:
        raise CapacityError(f"{q} needs depth {m} > cap {depth_cap}")
    cs = digits_at_depth(params, q, m)
    return None if cs is None else PuiseuxElement(q, cs)


def element(params: PuiseuxParams, q, depth_cap: int = DEFAULT_DEPTH_CAP) -> PuiseuxElement:
    """Like :func:`is_member` but raises DomainError for non-members."""
    e = is_member(params, q, depth_cap)
    if e is None:
        raise DomainError(f"{Fraction(q)} is not in S_{params.r}")
    return e


def from_coeffs(params: PuiseuxParams, coeffs: Sequence[int]) -> PuiseuxElement:
    if any(c < 0 for c in coeffs):
        raise DomainError("coefficients must be natural numbers")
    return element(params, value_of(params, coeffs), depth_cap=max(len(coeffs), DEFAULT_DEPTH_CAP))


def generator(params: PuiseuxParams, k: int) -> PuiseuxElement:
    """r^k."""
    return from_coeffs(params, [0] * k + [1])


def divides(params: PuiseuxParams, a: PuiseuxElement, b: PuiseuxElement, depth_cap: int = DEFAULT_DEPTH_CAP) -> bool:
    """Whether b - a lies in S_r."""
    if b.value < a.value:
        return False
    return is_member(params, b.value - a.value, depth_cap) is not None


def has_finite_divisors(params: PuiseuxParams, a: PuiseuxElement) -> bool:
    return all(c < params.n for c in a.coeffs)


def divisors(params: PuiseuxParams, a: PuiseuxElement) -> list[PuiseuxElement]:
    """All divisors of a, increasing, for a whose canonical digits are all below n."""
    if not has_finite_divisors(params, a):
        raise DomainError(f"{a} has a top digit >= {params.n}: its divisor set is infinite")
    n, d = params.n, params.d
    cs = a.coeffs
    m = len(cs) - 1
    found: list[tuple[int, ...]] = []

    def walk(j, carry, prefix):
        if j == m:
            room = cs[m] - d * carry
            for top in range(room + 1):
                found.append(prefix + (top,))
            return
        base = cs[j] - d * carry
        for beta in range(n):
            other = (base - beta) % n
            new_carry = (beta + other + d * carry - cs[j]) // n
            walk(j + 1, new_carry, prefix + (beta,))

    walk(0, 0, ())
    values = sorted({value_of(params, v) for v in found})
    return [element(params, v) for v in values]


def atom_test(params: PuiseuxParams, k: int) -> bool:
    """Whether r^k is an atom, decided from its (finite) divisor set."""
    g = generator(params, k)
    return [e.value for e in divisors(params, g)] == [Fraction(0), g.value]


@dataclass(frozen=True)
class MCDResult:
    """A maximal common divisor plus the data certifying maximality."""

    value: PuiseuxElement
    remainders: tuple[PuiseuxElement, ...]
    distinguished: PuiseuxElement
    candidates_checked: int


def mcd(params: PuiseuxParams, *elements: PuiseuxElement, depth_cap: int = DEFAULT_DEPTH_CAP) -> MCDResult:
    """A maximal common divisor of the given members.

    Align everything at the largest depth, take the smallest top digit as a
    first common divisor y, then keep adding the largest nonzero common
    divisor of the remainders.  One remainder has all digits below n, so its
    finite divisor set contains every candidate; the loop stops when none is
    left, which is exactly the maximality certificate.
    """
    if not elements:
        raise DomainError("mcd of an empty family")
    top = max(e.depth for e in elements)
    aligned = [digits_at_depth(params, e.value, top) for e in elements]
    low = min(cs[-1] for cs in aligned)
    y = Fraction(low) * params.r**top
    pick = next(i for i, cs in enumerate(aligned) if cs[-1] == low)
    dist = element(params, elements[pick].value - y, depth_cap)
    pool = [t for t in divisors(params, dist) if t.value != 0]
    checked = 0
    while True:
        rems = [e.value - y for e in elements]
        best = None
        for t in reversed(pool):
            if t.value > min(rems):
                continue
            checked += 1
            if all(is_member(params, rv - t.value, depth_cap) is not None for rv in rems):
                best = t
                break
        if best is None:
            break
        y += best.value
    return MCDResult(
        value=element(params, y, depth_cap),
        remainders=tuple(element(params, rv, depth_cap) for rv in rems),
        distinguished=element(params, elements[pick].value - y, depth_cap),
        candidates_checked=checked,
    )


def accp_chain(params: PuiseuxParams, depth: int) -> ChainWitness:
    """a_i = n r^i with gaps (d - n) r^(i+1), for i = 0..depth."""
    if depth < 1:
        raise DomainError("depth must be at least 1")
    n, d = params.n, params.d
    elems = tuple(from_coeffs(params, [0] * i + [n]) for i in range(depth + 1))
    gaps = tuple(from_coeffs(params, [0] * (i + 1) + [d - n]) for i in range(depth))
    return ChainWitness(params, elems, gaps)


def representations(
    params: PuiseuxParams, s: PuiseuxElement, extra_depth: int = 2, budget: int = 10_000
) -> tuple[list[tuple[int, ...]], bool]:
    """Factorizations of s into atoms r^j, as coefficient vectors.

    When every digit of s is below n, all factorizations live at depth <= the
    depth of s and the list is complete.  Otherwise s has infinitely many and
    only those of depth <= depth(s) + extra_depth are listed; the flag is
    False then, and also when ``budget`` vectors were produced.
    """
    complete = has_finite_divisors(params, s)
    D = s.depth + (0 if complete else extra_depth)
    n, d = params.n, params.d
    total = s.value * d**D
    out: list[tuple[int, ...]] = []
    dinv = pow(d, -1, n)

    def walk(j, t, prefix):
        if len(out) >= budget:
            return
        if j == D:
            out.append(prefix + (t,))
            return
        w = d ** (D - j)
        c = t * pow(dinv, D - j, n) % n
        while c * w <= t:
            walk(j + 1, (t - c * w) // n, prefix + (c,))
            c += n

    walk(0, total.numerator, ())
    if len(out) >= budget:
        complete = False
    return out, complete

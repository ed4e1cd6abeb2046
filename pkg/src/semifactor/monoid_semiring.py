"""The semiring E(S_r): finite N-combinations of symbols e^s, s in S_r.

Multiplication is convolution on exponents.  Elements are stored as sorted
``(exponent, coefficient)`` pairs with exact rational exponents, so two
representations of the same member of S_r always collide.

Text form: ``c1*e(p/q) + c2*e(p/q) + ...``; a bare integer ``c`` means
``c*e(0)`` and ``e(p/q)`` has coefficient 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import puiseux
from .errors import DomainError, ParseError
from .numbers import factor_nat, format_rational, parse_rational, prime_list
from .puiseux import DEFAULT_DEPTH_CAP, PuiseuxElement, PuiseuxParams


@dataclass(frozen=True)
class MonoidSemiringElement:
    params: PuiseuxParams
    terms: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        merged: dict[Fraction, int] = {}
        for s, c in self.terms:
            s = Fraction(s)
            if c < 0:
                raise DomainError("coefficients must be natural numbers")
            merged[s] = merged.get(s, 0) + c
        terms = tuple(sorted((s, c) for s, c in merged.items() if c))
        for s, _ in terms:
            if puiseux.is_member(self.params, s) is None:
                raise DomainError(f"exponent {s} is not in S_{self.params.r}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_dict(cls, params, mapping) -> MonoidSemiringElement:
        return cls(params, tuple(mapping.items()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        return self.terms == ((Fraction(0), 1),)

    @property
    def coeff_sum(self) -> int:
        return sum(c for _, c in self.terms)

    @property
    def is_monomial(self) -> bool:
        """A single e^t with coefficient 1."""
        return len(self.terms) == 1 and self.terms[0][1] == 1

    def support(self) -> list[Fraction]:
        return [s for s, _ in self.terms]

    def __mul__(self, other):
        return ms_mul(self, other)

    def sort_key(self):
        return (self.coeff_sum, len(self.terms), self.terms)

    def __str__(self):
        return format_ms(self)


def _check_same(a: MonoidSemiringElement, b: MonoidSemiringElement) -> None:
    if a.params != b.params:
        raise DomainError("elements live over different S_r")


def _conv(a_terms, b_terms) -> dict[Fraction, int]:
    out: dict[Fraction, int] = {}
    for s, c in a_terms:
        for t, k in b_terms:
            out[s + t] = out.get(s + t, 0) + c * k
    return out


def ms_mul(a: MonoidSemiringElement, b: MonoidSemiringElement) -> MonoidSemiringElement:
    _check_same(a, b)
    return MonoidSemiringElement.from_dict(a.params, _conv(a.terms, b.terms))


def ms_one(params: PuiseuxParams) -> MonoidSemiringElement:
    return MonoidSemiringElement(params, ((Fraction(0), 1),))


def ms_monomial(params: PuiseuxParams, s, c: int = 1) -> MonoidSemiringElement:
    return MonoidSemiringElement(params, ((Fraction(s), c),))


def _divide_terms(b_terms, a_terms) -> dict[Fraction, int] | None:
    """Exact quotient in the rational group ring with nonnegative integer coefficients.

    Long division from the top exponent.  A negative intermediate coefficient
    can never be repaired (later steps only subtract), so it ends the search.
    """
    rem = dict(b_terms)
    top_a, lc_a = a_terms[-1]
    quo: dict[Fraction, int] = {}
    while rem:
        beta = max(rem)
        c, r = divmod(rem[beta], lc_a)
        if r or c <= 0:
            return None
        t = beta - top_a
        quo[t] = c
        for alpha, k in a_terms:
            e = t + alpha
            v = rem.get(e, 0) - c * k
            if v < 0:
                return None
            if v:
                rem[e] = v
            else:
                rem.pop(e, None)
    return quo


def ms_divides(a: MonoidSemiringElement, b: MonoidSemiringElement) -> MonoidSemiringElement | None:
    """The quotient h with a*h == b, or None when a does not divide b."""
    _check_same(a, b)
    if a.is_zero or b.is_zero:
        raise DomainError("divisibility is tested between nonzero elements")
    quo = _divide_terms(b.terms, a.terms)
    if quo is None:
        return None
    for s in quo:
        if s < 0 or puiseux.is_member(a.params, s) is None:
            return None
    return MonoidSemiringElement.from_dict(a.params, quo)


def ms_normal_decomposition(
    f: MonoidSemiringElement, depth_cap: int = DEFAULT_DEPTH_CAP
) -> tuple[int, PuiseuxElement, MonoidSemiringElement]:
    """``(d, s, g)`` with ``f == d * e^s * g``; d the coefficient gcd, s an mcd of the exponents."""
    if f.is_zero:
        raise DomainError("zero has no normal decomposition")
    params = f.params
    d = 0
    for _, c in f.terms:
        d = gcd(d, c)
    exps = [puiseux.element(params, s, depth_cap) for s in f.support()]
    s = puiseux.mcd(params, *exps, depth_cap=depth_cap).value
    g = MonoidSemiringElement(params, tuple((e - s.value, c // d) for e, c in f.terms))
    return d, s, g


# -- factorization of the "g part" -------------------------------------------


@dataclass(frozen=True)
class MSFactorization:
    atoms: tuple[MonoidSemiringElement, ...]

    @property
    def length(self) -> int:
        return len(self.atoms)

    def product(self, params: PuiseuxParams) -> MonoidSemiringElement:
        out = ms_one(params)
        for a in self.atoms:
            out = ms_mul(out, a)
        return out

    def sort_key(self):
        return tuple(a.sort_key() for a in self.atoms)

    def __str__(self):
        return " * ".join(f"({a})" for a in self.atoms) or "1"


class _GPartSearch:
    """Divisor and factorization search for elements with content 1 and no e^t divisor.

    Shift an element so its least exponent is 0.  If h * h' = g in the
    rational group ring, the shifted h is supported inside the shifted g
    (no cancellation among positive coefficients), so candidate shapes are a
    finite family.  The actual divisor is e^mu times a shape, where mu must
    divide the least exponent of g in S_r.
    """

    def __init__(self, params: PuiseuxParams, depth_cap: int, extra_depth: int, budget: int):
        self.params = params
        self.depth_cap = depth_cap
        self.extra_depth = extra_depth
        self.budget = budget
        self.complete = True
        self._div_cache: dict = {}
        self._atom_cache: dict = {}

    def _shifts(self, low: Fraction) -> list[Fraction]:
        if low == 0:
            return [Fraction(0)]
        p = self.params
        el = puiseux.element(p, low, self.depth_cap)
        if puiseux.has_finite_divisors(p, el):
            return [t.value for t in puiseux.divisors(p, el)]
        # infinite divisor set: scan members up to a fixed extra depth only
        self.complete = False
        depth = el.depth + self.extra_depth
        step = Fraction(1, p.d**depth)
        out, k = [], 0
        while k * step <= low and len(out) < self.budget:
            t = k * step
            if puiseux.is_member(p, t) is not None and puiseux.is_member(p, low - t) is not None:
                out.append(t)
            k += 1
        return out

    def proper_divisors(self, g: MonoidSemiringElement) -> list[MonoidSemiringElement]:
        """Divisors h of g with 1 < coeff_sum(h) < coeff_sum(g)."""
        if g in self._div_cache:
            return self._div_cache[g]
        p = self.params
        low = g.terms[0][0]
        shifted = [(s - low, c) for s, c in g.terms]
        sigma = g.coeff_sum
        rest_exps = [s for s, _ in shifted[1:]]
        rest_caps = [c for _, c in shifted[1:]]
        found: dict = {}
        for c0 in range(1, shifted[0][1] + 1):
            for cs in product(*(range(k + 1) for k in rest_caps)):
                total = c0 + sum(cs)
                if total < 2 or total >= sigma or sigma % total:
                    continue
                shape = ((Fraction(0), c0),) + tuple((s, c) for s, c in zip(rest_exps, cs) if c)
                quo = _divide_terms(shifted, shape)
                if quo is None or min(quo) != 0:
                    continue
                co_shape = sorted(quo.items())
                for mu in self._shifts(low):
                    h_terms = [(s + mu, c) for s, c in shape]
                    k_terms = [(s + low - mu, c) for s, c in co_shape]
                    if all(puiseux.is_member(p, s) is not None for s, _ in h_terms + k_terms):
                        h = MonoidSemiringElement(p, tuple(h_terms))
                        found[h] = None
        out = sorted(found, key=MonoidSemiringElement.sort_key)
        self._div_cache[g] = out
        return out

    def is_atom(self, g: MonoidSemiringElement) -> bool:
        if g not in self._atom_cache:
            self._atom_cache[g] = not g.is_one and not self.proper_divisors(g)
        return self._atom_cache[g]

    def factorizations(self, g: MonoidSemiringElement) -> list[tuple[MonoidSemiringElement, ...]]:
        if g.is_one:
            return [()]
        atoms = [h for h in self.proper_divisors(g) if self.is_atom(h)]
        if self.is_atom(g):
            atoms.append(g)
        atoms.sort(key=MonoidSemiringElement.sort_key)
        memo: dict = {}

        def rec(x, start):
            if x.is_one:
                return [()]
            if (x, start) in memo:
                return memo[x, start]
            out = []
            for j in range(start, len(atoms)):
                q = ms_divides(atoms[j], x)
                if q is not None:
                    for rest in rec(q, j):
                        out.append((atoms[j],) + rest)
                        if len(out) >= self.budget:
                            self.complete = False
                            break
            memo[x, start] = out
            return out

        return rec(g, 0)


def ms_is_atom(f: MonoidSemiringElement, depth_cap: int = DEFAULT_DEPTH_CAP) -> bool:
    """Atom test; decided exactly when the exponent side stays finite."""
    zs, _ = ms_factorizations(f, depth_cap=depth_cap)
    return len(zs) == 1 and zs[0].length == 1


def ms_factorizations(
    f: MonoidSemiringElement,
    budget: int = 10_000,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    extra_depth: int = 2,
) -> tuple[list[MSFactorization], bool]:
    """Factorizations of f built from its normal decomposition ``d * e^s * g``.

    The constant d factors into primes, e^s into e^(r^j) along the
    factorizations of s in S_r, and g through an exhaustive divisor search
    (lengths there are at most log2 of the coefficient sum).  The flag is
    False when the S_r side is infinite or a budget was hit.
    """
    if f.is_zero or f.is_one:
        raise DomainError("factorizations are defined for nonzero nonunits")
    p = f.params
    d, s, g = ms_normal_decomposition(f, depth_cap)
    const_atoms = [ms_monomial(p, 0, q) for q in (prime_list(factor_nat(d)) if d > 1 else [])]
    reps, complete = puiseux.representations(p, s, extra_depth=extra_depth, budget=budget)
    exp_parts = []
    for vec in reps:
        exp_parts.append([ms_monomial(p, p.r**j) for j, c in enumerate(vec) for _ in range(c)])
    search = _GPartSearch(p, depth_cap, extra_depth, budget)
    g_parts = search.factorizations(g)
    complete = complete and search.complete
    out = {}
    for ep, gp in product(exp_parts, g_parts):
        atoms = tuple(sorted(const_atoms + ep + list(gp), key=MonoidSemiringElement.sort_key))
        out[atoms] = None
        if len(out) >= budget:
            complete = False
            break
    zs = sorted((MSFactorization(a) for a in out), key=MSFactorization.sort_key)
    return zs, complete


# -- text ---------------------------------------------------------------------

_TERM = re.compile(r"\s*(?:(\d+)\s*(?:\*\s*(?=e))?)?(?:e\s*\(\s*([^)]*?)\s*\))?\s*")


def parse_ms(params: PuiseuxParams, text: str) -> MonoidSemiringElement:
    """Parse ``"c1*e(p/q) + c2*e(p/q) + ..."``."""
    if not text or not text.strip():
        raise ParseError("empty element", 0)
    terms = []
    pos = 0
    for chunk in text.split("+"):
        m = _TERM.fullmatch(chunk)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ParseError(f"malformed term {chunk.strip()!r}", pos)
        c = int(m.group(1)) if m.group(1) is not None else 1
        s = parse_rational(m.group(2)) if m.group(2) is not None else Fraction(0)
        terms.append((s, c))
        pos += len(chunk) + 1
    return MonoidSemiringElement(params, tuple(terms))


def format_ms(f: MonoidSemiringElement) -> str:
    if f.is_zero:
        return "0"
    parts = []
    for s, c in f.terms:
        if s == 0:
            parts.append(str(c))
        elif c == 1:
            parts.append(f"e({format_rational(s)})")
        else:
            parts.append(f"{c}*e({format_rational(s)})")
    return " + ".join(parts)

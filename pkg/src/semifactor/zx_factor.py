"""Complete factorization in Z[x] by rational roots plus Kronecker's method.

Linear factors are peeled off first through the rational root test.  What
remains has no integer root, so every evaluation point used by the Kronecker
search gives a nonzero value with a finite divisor set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import CapacityError, DomainError
from .numbers import PrimeFactorization, divisors, factor_nat
from .poly import Polynomial, content_primitive, exact_div_zx, poly_product

DEFAULT_KRONECKER_CAP = 16


@dataclass(frozen=True)
class IrreducibleFactorizationZX:
    """``unit * content * prod(p**e for p, e in factors)``."""

    unit: int
    content: PrimeFactorization
    factors: tuple[tuple[Polynomial, int], ...]

    @property
    def content_value(self) -> int:
        out = 1
        for p, e in self.content:
            out *= p**e
        return out

    def expand(self) -> Polynomial:
        return poly_product(p**e for p, e in self.factors).scale(self.unit * self.content_value)

    def primitive_factors(self) -> list[Polynomial]:
        """Factors listed with repetition, in canonical order."""
        return [p for p, e in self.factors for _ in range(e)]


def _rational_root_factors(f: Polynomial) -> tuple[list[Polynomial], Polynomial]:
    """Strip all linear factors ``b*x - a`` from a primitive f with f(0) != 0."""
    found = []
    c0 = abs(f.coeffs[0])
    for b in divisors(abs(f.lc)):
        for a in divisors(c0):
            for sa in (a, -a):
                if Fraction(sa, b).denominator != b:
                    continue
                lin = Polynomial((-sa, b))
                while f.degree >= 1:
                    q = exact_div_zx(f, lin)
                    if q is None:
                        break
                    found.append(lin)
                    f = q
    return found, f


def _eval_points():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _lagrange_basis(xs) -> tuple[list[list[int]], int]:
    """Integer numerators N_i and common denominator D with L_i = N_i / D."""
    n = len(xs)
    polys, dens = [], []
    for i, xi in enumerate(xs):
        num = Polynomial((1,))
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Polynomial((-xj, 1))
                den *= xi - xj
        polys.append(num)
        dens.append(den)
    big = 1
    for d in dens:
        big = big * abs(d) // gcd(big, abs(d))
    rows = [[c * (big // d) for c in (list(p.coeffs) + [0] * (n - len(p.coeffs)))] for p, d in zip(polys, dens)]
    return rows, big


def _kronecker_find(f: Polynomial, d: int) -> Polynomial | None:
    """A factor of f of exact degree d (positive leading coefficient), or None."""
    pool = []
    gen = _eval_points()
    while len(pool) < d + 3:
        a = next(gen)
        v = f(a)
        if v != 0:
            pool.append((len(divisors(abs(v))), len(pool), a, v))
    ranked = sorted(pool)
    chosen = sorted(ranked[: d + 1], key=lambda t: t[1])
    checks = [(t[2], t[3]) for t in ranked[d + 1 :]]
    while len(checks) < 4:
        a = next(gen)
        if f(a) != 0:
            checks.append((a, f(a)))
    xs = [t[2] for t in chosen]
    rows, den = _lagrange_basis(xs)
    choices = [divisors(abs(chosen[0][3]))]
    for t in chosen[1:]:
        ds = divisors(abs(t[3]))
        choices.append(ds + [-v for v in ds])
    lc = f.lc
    n = d + 1
    for ys in product(*choices):
        top = sum(y * row[d] for y, row in zip(ys, rows))
        if top == 0 or top % den:
            continue
        top //= den
        if lc % top:
            continue
        coeffs = []
        for j in range(n):
            s = sum(y * row[j] for y, row in zip(ys, rows))
            if s % den:
                break
            coeffs.append(s // den)
        if len(coeffs) != n:
            continue
        g = Polynomial(coeffs)
        if any(g(a) == 0 or v % g(a) for a, v in checks):
            continue
        if g.lc < 0:
            g = -g
        if exact_div_zx(f, g) is not None:
            return g
    return None


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_divmod(a, b, p):
    a = a[:]
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv % p
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] = (a[k + j] - c * bj) % p
    return _trim(q), _trim(a[: len(b) - 1])


def _mod_gcd(a, b, p):
    while b:
        a, b = b, _mod_divmod(a, b, p)[1]
    return a


def _mod_mulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _mod_divmod(_trim(out), m, p)[1]


def _mod_powmod(base, e, m, p):
    out, b = [1], base
    while e:
        if e & 1:
            out = _mod_mulmod(out, b, m, p)
        b = _mod_mulmod(b, b, m, p)
        e >>= 1
    return out


def _ddf_degrees(f: Polynomial, p: int) -> list[int] | None:
    """Degrees of the irreducible factors of f mod p, or None if f mod p is not squarefree."""
    a = _trim([c % p for c in f.coeffs])
    if len(a) != len(f.coeffs):
        return None
    deriv = _trim([(i * c) % p for i, c in enumerate(a)][1:])
    if not deriv or len(_mod_gcd(a, deriv, p)) > 1:
        return None
    degs = []
    h = [0, 1]
    i = 0
    while len(a) - 1 >= 2 * (i + 1):
        i += 1
        h = _mod_powmod(h, p, a, p)
        diff = h + [0] * (2 - len(h)) if len(h) < 2 else h[:]
        diff[1] = (diff[1] - 1) % p
        g = _mod_gcd(a, _trim(diff), p)
        k = len(g) - 1
        if k > 0:
            degs += [i] * (k // i)
            a = _mod_divmod(a, g, p)[0]
            h = _mod_divmod(h, a, p)[1] if len(a) > 1 else h
    if len(a) > 1:
        degs.append(len(a) - 1)
    return degs


_SMALL_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)


def _feasible_degrees(f: Polynomial) -> set[int]:
    """Degrees a factor of f in Z[x] could have, judged from factor patterns mod p.

    Pure pruning: Kronecker still decides every degree that survives.
    """
    allowed = set(range(f.degree + 1))
    used = 0
    for p in _SMALL_PRIMES:
        degs = _ddf_degrees(f, p)
        if degs is None:
            continue
        sums = {0}
        for d in degs:
            sums |= {s + d for s in sums}
        allowed &= sums
        used += 1
        if used == 5:
            break
    return allowed


def _kronecker_split(f: Polynomial) -> list[Polynomial]:
    """Irreducible factors (with repetition) of a primitive f without linear factors."""
    out = []
    d = 2
    allowed = _feasible_degrees(f)
    while f.degree >= 2 * d:
        g = _kronecker_find(f, d) if d in allowed else None
        if g is None:
            d += 1
            continue
        out.append(g)
        f = exact_div_zx(f, g)
        allowed = _feasible_degrees(f)
    if f.degree >= 1:
        out.append(f)
    return out


def irreducible_factors_zx(f: Polynomial, deg_cap: int = DEFAULT_KRONECKER_CAP) -> IrreducibleFactorizationZX:
    """Canonical factorization of a nonzero integer polynomial into irreducibles."""
    if f.is_zero:
        raise DomainError("the zero polynomial has no factorization")
    if not f.is_integral:
        raise DomainError("expected an integer polynomial")
    if f.degree > deg_cap:
        raise CapacityError(f"degree {f.degree} exceeds the Kronecker cap {deg_cap}")
    unit = -1 if f.lc < 0 else 1
    c, p = content_primitive(f)
    parts: list[Polynomial] = []
    k = p.ord
    parts += [Polynomial((0, 1))] * k
    p = p.shift(-k)
    if p.degree >= 1:
        linear, rest = _rational_root_factors(p)
        parts += [g if g.lc > 0 else -g for g in linear]
        if rest.degree >= 1:
            parts += _kronecker_split(rest if rest.lc > 0 else -rest)
    counts: dict[Polynomial, int] = {}
    for g in parts:
        counts[g] = counts.get(g, 0) + 1
    factors = tuple(sorted(counts.items(), key=lambda t: t[0].sort_key()))
    return IrreducibleFactorizationZX(unit, factor_nat(c), factors)


def is_irreducible_zx(f: Polynomial, deg_cap: int = DEFAULT_KRONECKER_CAP) -> bool:
    """Whether the primitive part of f is irreducible in Q[x]."""
    if f.is_zero or f.degree < 1:
        raise DomainError("irreducibility is tested for polynomials of degree >= 1")
    fac = irreducible_factors_zx(f, deg_cap)
    return len(fac.factors) == 1 and fac.factors[0][1] == 1

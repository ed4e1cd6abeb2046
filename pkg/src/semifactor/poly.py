"""Dense univariate polynomials over the integers and rationals.

Coefficients are stored low-to-high in a tuple, trailing zeros stripped, so
``Polynomial((2, 3, 1))`` is ``x^2 + 3x + 2``.  Coefficients are ``int``
unless a rational operation (division over Q) produced genuine fractions.

Text grammar (whitespace-insensitive)::

    poly  := ['-'] term (('+' | '-') term)*
    term  := coeff | [coeff ['*']] 'x' ['^' exp]
    coeff := nat
    exp   := nat            (Laurent input also accepts '-' nat)
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

from .errors import CapacityError, DomainError, ParseError
from .numbers import format_rational, gcd_many

DEFAULT_DEG_CAP = 64


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Polynomial:
    """Immutable polynomial with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        return cls([0] * k + [c])

    # -- basic attributes --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def ord(self) -> int:
        """Index of the lowest nonzero coefficient."""
        if self.is_zero:
            raise DomainError("ord of the zero polynomial is undefined")
        return next(i for i, c in enumerate(self.coeffs) if c != 0)

    @property
    def lc(self):
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        return poly_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative power")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> Polynomial:
        """Multiply by x^k (k >= 0) or exactly divide by x^-k."""
        if k >= 0:
            return Polynomial((0,) * k + self.coeffs)
        if any(c != 0 for c in self.coeffs[:-k]):
            raise DomainError(f"not divisible by x^{-k}")
        return Polynomial(self.coeffs[-k:])

    def scale(self, c) -> Polynomial:
        return Polynomial(c * a for a in self.coeffs)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def sort_key(self):
        """Canonical order: degree first, then coefficients from the top down."""
        return (self.degree, tuple(reversed(self.coeffs)))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def _coerce(v) -> Polynomial:
    if isinstance(v, Polynomial):
        return v
    if isinstance(v, (int, Fraction)):
        return Polynomial((v,))
    raise TypeError(f"cannot treat {v!r} as a polynomial")


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact convolution product."""
    if f.is_zero or g.is_zero:
        return ZERO
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return Polynomial(out)


def poly_product(factors: Iterable[Polynomial]) -> Polynomial:
    out = ONE
    for f in factors:
        out = out * f
    return out


def poly_divmod_q(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division with remainder in Q[x]: ``f = q*g + r`` with ``deg r < deg g``."""
    if g.is_zero:
        raise DomainError("division by the zero polynomial")
    rem = [Fraction(c) for c in f.coeffs]
    dg, lc = g.degree, Fraction(g.lc)
    quo = [Fraction(0)] * max(len(rem) - dg, 0)
    for k in range(len(rem) - dg - 1, -1, -1):
        c = rem[k + dg] / lc
        quo[k] = c
        if c:
            for j, b in enumerate(g.coeffs):
                rem[k + j] -= c * b
    return Polynomial(quo), Polynomial(rem[:dg] if dg > 0 else [])


def exact_div_zx(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Return ``f / g`` if it lies in Z[x], else ``None``."""
    if g.is_zero:
        raise DomainError("division by the zero polynomial")
    if f.is_zero:
        return ZERO
    if g.degree > f.degree:
        return None
    rem = list(f.coeffs)
    dg, lc = g.degree, g.lc
    quo = [0] * (len(rem) - dg)
    for k in range(len(rem) - dg - 1, -1, -1):
        c, r = divmod(rem[k + dg], lc)
        if r:
            return None
        quo[k] = c
        if c:
            for j, b in enumerate(g.coeffs):
                rem[k + j] -= c * b
    if any(rem[:dg]):
        return None
    return Polynomial(quo)


def content_primitive(f: Polynomial) -> tuple[int, Polynomial]:
    """Split an integer polynomial into (gcd of coefficients, primitive part).

    The primitive part carries a positive leading coefficient.
    """
    if f.is_zero:
        raise DomainError("the zero polynomial has no content")
    if not f.is_integral:
        raise DomainError("content is defined here for integer polynomials only")
    c = gcd_many(abs(a) for a in f.coeffs)
    if f.lc < 0:
        return c, Polynomial(-a // c for a in f.coeffs)
    return c, Polynomial(a // c for a in f.coeffs)


def is_nonneg(f: Polynomial) -> bool:
    return all(c >= 0 for c in f.coeffs)


def check_degree(f: Polynomial, cap: int) -> None:
    if f.degree > cap:
        raise CapacityError(f"degree {f.degree} exceeds cap {cap}")


# -- Laurent polynomials ------------------------------------------------------


class LaurentPolynomial:
    """``x^shift * body`` with ``body`` zero or of order 0."""

    __slots__ = ("shift", "body")

    def __init__(self, shift: int, body: Polynomial):
        if body.is_zero:
            shift = 0
        else:
            k = body.ord
            body, shift = body.shift(-k), shift + k
        object.__setattr__(self, "shift", shift)
        object.__setattr__(self, "body", body)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    @classmethod
    def from_poly(cls, f: Polynomial) -> LaurentPolynomial:
        return cls(0, f)

    @property
    def is_zero(self) -> bool:
        return self.body.is_zero

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            other = LaurentPolynomial.from_poly(other)
        return LaurentPolynomial(self.shift + other.shift, self.body * other.body)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            other = LaurentPolynomial.from_poly(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return (self.shift, self.body) == (other.shift, other.body)

    def __hash__(self):
        return hash(("Laurent", self.shift, self.body.coeffs))

    def terms(self):
        """(exponent, coefficient) pairs, lowest exponent first, zeros skipped."""
        return [(self.shift + i, c) for i, c in enumerate(self.body.coeffs) if c != 0]

    def __repr__(self):
        return f"LaurentPolynomial({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


def laurent_normalize(f: LaurentPolynomial | Polynomial) -> tuple[int, Polynomial]:
    """``(shift, body)`` with ``body`` of order 0 and ``x^shift * body == f``."""
    if isinstance(f, Polynomial):
        f = LaurentPolynomial.from_poly(f)
    if f.is_zero:
        raise DomainError("the zero Laurent polynomial has no normal form")
    return f.shift, f.body


# -- formatting ---------------------------------------------------------------


def _format_terms(terms) -> str:
    """``terms``: (exponent, coefficient) pairs, highest exponent first."""
    if not terms:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(terms):
        neg = c < 0
        a = -c if neg else c
        if e == 0:
            body = format_rational(a)
        else:
            xpart = "x" if e == 1 else f"x^{e}"
            if a == 1:
                body = xpart
            elif isinstance(a, Fraction) and a.denominator != 1:
                body = f"({format_rational(a)})*{xpart}"
            else:
                body = f"{format_rational(a)}{xpart}"
        if idx == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


def format_poly(f: Polynomial) -> str:
    return _format_terms([(i, c) for i, c in reversed(list(enumerate(f.coeffs))) if c != 0])


def format_laurent(f: LaurentPolynomial) -> str:
    return _format_terms(list(reversed(f.terms())))


# -- parsing ------------------------------------------------------------------



def _parse_terms(text: str, allow_negative_exp: bool, deg_cap: int) -> dict[int, int]:
    if not text or not text.strip():
        raise ParseError("empty polynomial", 0)
    pos, n = 0, len(text)
    acc: dict[int, int] = {}

    def skip_ws(p):
        while p < n and text[p].isspace():
            p += 1
        return p

    def read_nat(p):
        p = skip_ws(p)
        m = re.compile(r"\d+").match(text, p)
        if not m:
            raise ParseError("expected a natural number", p)
        return int(m.group()), m.end()

    first = True
    while True:
        pos = skip_ws(pos)
        sign = 1
        if pos < n and text[pos] in "+-":
            if text[pos] == "+" and first:
                raise ParseError("unexpected '+'", pos)
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise ParseError("expected '+' or '-'", pos)
        if pos >= n:
            raise ParseError("expected a term", pos)
        coeff, have_coeff = 1, False
        if text[pos].isdigit():
            coeff, pos = read_nat(pos)
            have_coeff = True
            pos = skip_ws(pos)
            if pos < n and text[pos] == "*":
                pos = skip_ws(pos + 1)
                if pos >= n or text[pos] != "x":
                    raise ParseError("expected 'x' after '*'", pos)
        exp = 0
        if pos < n and text[pos] == "x":
            pos = skip_ws(pos + 1)
            exp = 1
            if pos < n and text[pos] == "^":
                pos = skip_ws(pos + 1)
                esign = 1
                if pos < n and text[pos] == "-":
                    if not allow_negative_exp:
                        raise ParseError("negative exponent outside Laurent input", pos)
                    esign = -1
                    pos += 1
                exp, pos = read_nat(pos)
                exp *= esign
        elif not have_coeff:
            raise ParseError("expected a coefficient or 'x'", pos)
        if abs(exp) > deg_cap:
            raise CapacityError(f"exponent {exp} exceeds cap {deg_cap}")
        acc[exp] = acc.get(exp, 0) + sign * coeff
        first = False
        pos = skip_ws(pos)
        if pos >= n:
            break
    return acc


def parse_poly(text: str, deg_cap: int = DEFAULT_DEG_CAP) -> Polynomial:
    """Parse an integer polynomial such as ``"x^2 + 3x + 2"``."""
    acc = _parse_terms(text, False, deg_cap)
    top = max(acc)
    return Polynomial(acc.get(i, 0) for i in range(top + 1))


def parse_laurent(text: str, deg_cap: int = DEFAULT_DEG_CAP) -> LaurentPolynomial:
    """Parse a Laurent polynomial; ``x^-2`` style exponents are allowed."""
    acc = _parse_terms(text, True, deg_cap)
    lo, hi = min(acc), max(acc)
    return LaurentPolynomial(lo, Polynomial(acc.get(i, 0) for i in range(lo, hi + 1)))

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semifactor.errors import CapacityError, DomainError, ParseError
from semifactor.poly import (
    LaurentPolynomial,
    Polynomial,
    content_primitive,
    exact_div_zx,
    format_laurent,
    format_poly,
    is_nonneg,
    laurent_normalize,
    parse_laurent,
    parse_poly,
    poly_divmod_q,
    poly_mul,
)

P = Polynomial
F51 = P((1, 1, 1, 1, 1, 1))

int_polys = st.lists(st.integers(-9, 9), min_size=1, max_size=6).map(P)
nonzero_polys = int_polys.filter(lambda f: not f.is_zero)


def test_mul_examples():
    assert poly_mul(P((1, 1)), P((2, 1))) == P((2, 3, 1))
    assert poly_mul(F51, P((1,))) == F51
    assert poly_mul(P((1, 1, 1)), P((1, 0, 0, 1))) == F51


def test_divmod_examples():
    assert poly_divmod_q(P((2, 3, 1)), P((1, 1))) == (P((2, 1)), P(()))
    assert poly_divmod_q(P((1, 0, 1)), P((0, 1))) == (P((0, 1)), P((1,)))
    assert poly_divmod_q(F51, P((1, 0, 0, 1))) == (P((1, 1, 1)), P(()))
    with pytest.raises(DomainError):
        poly_divmod_q(F51, P(()))
    q, r = poly_divmod_q(P((1, 1)), P((2,)))
    assert q == P((Fraction(1, 2), Fraction(1, 2))) and r.is_zero


def test_exact_div_zx():
    assert exact_div_zx(F51, P((1, 1))) == P((1, 0, 1, 0, 1))
    assert exact_div_zx(P((1, 1)), P((2,))) is None
    assert exact_div_zx(P((1, 0, 1)), P((1, 1))) is None


def test_content_primitive():
    assert content_primitive(P((6, 6))) == (6, P((1, 1)))
    assert content_primitive(P((1, 1))) == (1, P((1, 1)))
    assert content_primitive(P((2, 0, 4))) == (2, P((1, 0, 2)))
    assert content_primitive(P((-2, -4))) == (2, P((1, 2)))
    with pytest.raises(DomainError):
        content_primitive(P(()))


def test_nonneg():
    assert not is_nonneg(P((1, -1, 1)))
    assert is_nonneg(P((1, 1, 1)))
    assert is_nonneg(P(()))


def test_degree_and_ord():
    f = P((0, 0, 3, 1))
    assert (f.degree, f.ord, f.lc) == (3, 2, 1)
    assert P(()).degree == -1


def test_parse_examples():
    assert parse_poly("x^2 + 3x + 2").coeffs == (2, 3, 1)
    assert parse_poly("x^5+x^4+x^3+x^2+x+1") == F51
    assert parse_poly("-x + 1") == P((1, -1))
    assert parse_poly("2*x^2") == P((0, 0, 2))
    assert parse_poly(" x ^ 2 - x ^ 2 ") == P(())


@pytest.mark.parametrize("bad", ["", "   ", "x^", "+x", "x + ", "2 3", "y", "x^2 x", "x^-1"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_poly("x + y")
    assert info.value.position == 4


def test_parse_capacity():
    with pytest.raises(CapacityError):
        parse_poly("x^65")
    assert parse_poly("x^65", deg_cap=100).degree == 65


def test_format():
    assert format_poly(P((2, 3, 1))) == "x^2 + 3x + 2"
    assert format_poly(P((1, -1, 1))) == "x^2 - x + 1"
    assert format_poly(P((0, -1))) == "-x"
    assert format_poly(P(())) == "0"
    assert format_poly(P((1, 1))) == "x + 1"


def test_laurent():
    f = parse_laurent("x^-2 + x^-1")
    assert laurent_normalize(f) == (-2, P((1, 1)))
    assert laurent_normalize(P((0, 0, 0, 1))) == (3, P((1,)))
    assert laurent_normalize(P((0, 1, 1))) == (1, P((1, 1)))
    assert LaurentPolynomial(5, P(())) == LaurentPolynomial(0, P(()))
    assert LaurentPolynomial(-1, P((0, 1))) == LaurentPolynomial(0, P((1,)))
    g = parse_laurent("x^-1 + 2 + x")
    assert g.shift == -1 and g.body == P((1, 2, 1))
    assert parse_laurent(format_laurent(g)) == g
    with pytest.raises(DomainError):
        laurent_normalize(P(()))


@given(int_polys, int_polys)
def test_gauss_multiplicativity(f, g):
    if f.is_zero or g.is_zero:
        return
    cf, pf = content_primitive(f)
    cg, pg = content_primitive(g)
    cfg, pfg = content_primitive(f * g)
    assert cfg == cf * cg
    assert pfg == pf * pg


@given(int_polys)
def test_round_trip(f):
    assert parse_poly(format_poly(f)) == f


@given(nonzero_polys, nonzero_polys)
def test_ord_deg_additive(f, g):
    h = f * g
    assert h.degree == f.degree + g.degree
    assert h.ord == f.ord + g.ord


@given(nonzero_polys, nonzero_polys)
def test_divmod_identity(f, g):
    q, r = poly_divmod_q(f, g)
    assert q * g + r == f
    assert r.degree < g.degree

import random
from math import comb, isqrt

import pytest
from hypothesis import given, settings, strategies as st

from oracles import exact_quotient, trim
from semifactor.errors import CapacityError, DomainError
from semifactor.numbers import divisors
from semifactor.poly import Polynomial as P, poly_product
from semifactor.zx_factor import irreducible_factors_zx, is_irreducible_zx


def factors(f):
    return [(g.coeffs, e) for g, e in irreducible_factors_zx(f).factors]


def test_cyclotomic_product():
    fac = irreducible_factors_zx(P((1, 1, 1, 1, 1, 1)))
    assert fac.content == ()
    assert [(g.coeffs, e) for g, e in fac.factors] == [((1, 1), 1), ((1, -1, 1), 1), ((1, 1, 1), 1)]
    assert fac.expand() == P((1, 1, 1, 1, 1, 1))


def test_content_is_separated():
    fac = irreducible_factors_zx(P((6, 6)))
    assert fac.content == ((2, 1), (3, 1))
    assert factors(P((6, 6))) == [((1, 1), 1)]


def test_biquadratic():
    assert factors(P((1, 0, 1, 0, 1))) == [((1, -1, 1), 1), ((1, 1, 1), 1)]


@pytest.mark.parametrize(
    "cs,irr",
    [((1, 0, 1), True), ((2, 3, 1), False), ((1, -1, 1), True), ((0, 1), True), ((2, 2), True), ((0, 0, 1), False)],
)
def test_is_irreducible(cs, irr):
    assert is_irreducible_zx(P(cs)) is irr


def test_repeated_and_x_factors():
    f = P((0, 0, 1)) * P((1, 1)) ** 3 * P((1, 0, 1)) ** 2
    assert factors(f) == [((0, 1), 2), ((1, 1), 3), ((1, 0, 1), 2)]


def test_negative_leading_coefficient():
    fac = irreducible_factors_zx(P((-2, -2)))
    assert fac.unit == -1 and fac.content_value == 2
    assert fac.expand() == P((-2, -2))


def test_swinnerton_dyer_style_degree_eight():
    # x^8 - 40x^6 + 352x^4 - 960x^2 + 576 is irreducible over Q but splits mod every prime
    f = P((576, 0, -960, 0, 352, 0, -40, 0, 1))
    assert is_irreducible_zx(f)


def test_degree_sixteen_products():
    # each part is irreducible mod 2 with odd leading coefficient, hence irreducible over Q
    parts = [P((1, 1, 0, 1)), P((1, 1, 0, 3)), P((1, 1, 0, 0, 1)), P((1, 0, 1, 0, 0, 1))]
    f = poly_product(parts)
    assert f.degree == 15
    got = sorted(g.coeffs for g, _ in irreducible_factors_zx(f).factors)
    want = sorted(g.coeffs for g in parts)
    assert got == want


def test_errors():
    with pytest.raises(DomainError):
        irreducible_factors_zx(P(()))
    with pytest.raises(CapacityError):
        irreducible_factors_zx(P((1,) * 18))
    assert irreducible_factors_zx(P((1,) * 18), deg_cap=20).expand() == P((1,) * 18)
    with pytest.raises(DomainError):
        is_irreducible_zx(P((5,)))


def test_soundness_random():
    rng = random.Random(7)
    for _ in range(500):
        deg = rng.randint(0, 6)
        cs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.choice([i for i in range(-9, 10) if i])]
        f = P(cs)
        fac = irreducible_factors_zx(f)
        assert fac.expand() == f
        for g, _ in fac.factors:
            assert g.lc > 0
        assert irreducible_factors_zx(f) == fac


def _small_factor_exists(f):
    """Search Z[x] factors of degree 1 .. deg f // 2 inside a Mignotte-type box."""
    n = len(f) - 1
    norm = isqrt(sum(c * c for c in f)) + 1
    lead, const = abs(f[-1]), abs(f[0])
    if const == 0:
        return n > 1
    for d in range(1, n // 2 + 1):
        bound = [comb(d, i) * norm for i in range(d + 1)]
        for a in divisors(lead):
            for b in divisors(const):
                for sb in (1, -1):
                    mids = [range(-bound[i], bound[i] + 1) for i in range(1, d)]

                    def rec(i, acc):
                        if i == d:
                            g = trim([sb * b] + acc + [a])
                            return exact_quotient(tuple(f), g) is not None
                        return any(rec(i + 1, acc + [m]) for m in mids[i - 1])

                    if rec(1, []):
                        return True
    return False


def test_irreducible_reports_have_no_small_factor():
    rng = random.Random(11)
    checked = 0
    for _ in range(400):
        deg = rng.randint(1, 4)
        cs = [rng.randint(-3, 3) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
        f = P(cs)
        fac = irreducible_factors_zx(f)
        if len(fac.factors) == 1 and fac.factors[0][1] == 1 and fac.content == ():
            checked += 1
            assert not _small_factor_exists(cs), cs
    assert checked > 50


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=2, max_size=4), min_size=1, max_size=3))
def test_products_refactor(parts):
    polys = [P(p) for p in parts if P(p).degree >= 1]
    if not polys:
        return
    f = poly_product(polys)
    fac = irreducible_factors_zx(f)
    assert fac.expand() == f
    assert sum(e for _, e in fac.factors) >= len(polys)

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import nn_divisors, nn_factorizations, nn_is_atom, nonunique_corpus, random_corpus
from semifactor.errors import DomainError
from semifactor.numbers import is_prime
from semifactor.poly import LaurentPolynomial, Polynomial as P, parse_laurent, parse_poly
from semifactor.semidomain import (
    Ring,
    atoms_dividing,
    enumerate_divisors,
    enumerate_factorizations,
    is_atom,
    is_unit,
)

F51 = parse_poly("x^5+x^4+x^3+x^2+x+1")
ALL = list(Ring)


def coeffs(polys):
    return [g.coeffs for g in polys]


def zset(ring, f):
    return {tuple(a.coeffs for a in z.atoms) for z in enumerate_factorizations(ring, f)}


def test_divisors_examples():
    assert coeffs(enumerate_divisors(Ring.NN_POLY, P((1, 2, 1)))) == [(1,), (1, 1), (1, 2, 1)]
    assert coeffs(enumerate_divisors(Ring.NN_POLY, F51)) == [
        (1,), (1, 1), (1, 1, 1), (1, 0, 0, 1), (1, 0, 1, 0, 1), (1, 1, 1, 1, 1, 1)
    ]
    # x^2+x+1 is not a divisor here: its cofactor x^2-x+1 leaves the semiring
    assert coeffs(enumerate_divisors(Ring.QP_POLY, P((1, 0, 1, 0, 1)))) == [(1,), (1, 0, 1, 0, 1)]


def test_atom_examples():
    assert is_atom(Ring.NN_POLY, P((1, 0, 1, 0, 1)))
    assert is_atom(Ring.NN_POLY, P((1, 0, 0, 1)))
    assert not is_atom(Ring.NN_POLY, P((4,)))
    assert is_atom(Ring.NN_POLY, P((5,)))
    assert not is_atom(Ring.QP_POLY, P((4,)))
    assert not is_atom(Ring.NN_LAURENT, P((0, 1)))


def test_factorization_examples():
    assert zset(Ring.NN_POLY, F51) == {((1, 1), (1, 0, 1, 0, 1)), ((1, 1, 1), (1, 0, 0, 1))}
    assert zset(Ring.NN_POLY, P((6, 6))) == {((2,), (3,), (1, 1))}
    assert zset(Ring.QP_POLY, P((6, 6))) == {((1, 1),)}
    assert zset(Ring.NN_LAURENT, parse_laurent("x^-1 + 1")) == {((1, 1),)}
    assert zset(Ring.NN_POLY, P((1,))) == {()}


def test_same_answer_across_rings_for_example():
    for ring in ALL:
        assert zset(ring, F51) == {((1, 1), (1, 0, 1, 0, 1)), ((1, 1, 1), (1, 0, 0, 1))}


def test_canonical_order():
    zs = enumerate_factorizations(Ring.NN_POLY, F51)
    assert [str(z) for z in zs] == ["(x + 1) * (x^4 + x^2 + 1)", "(x^2 + x + 1) * (x^3 + 1)"]
    assert coeffs(atoms_dividing(Ring.NN_POLY, F51)) == [(1, 1), (1, 1, 1), (1, 0, 0, 1), (1, 0, 1, 0, 1)]


def test_units():
    assert is_unit(Ring.NN_POLY, P((1,)))
    assert not is_unit(Ring.NN_POLY, P((2,)))
    assert is_unit(Ring.QP_POLY, P((7,)))
    assert is_unit(Ring.NN_LAURENT, P((0, 0, 1)))
    assert is_unit(Ring.NN_LAURENT, LaurentPolynomial(-3, P((1,))))


def test_domain_errors():
    for ring in ALL:
        with pytest.raises(DomainError):
            enumerate_divisors(ring, P(()))
        with pytest.raises(DomainError):
            enumerate_factorizations(ring, P((1, -1, 1)))
    with pytest.raises(DomainError):
        is_atom(Ring.NN_POLY, parse_laurent("x^-1 + 1"))
    with pytest.raises(DomainError):
        Ring.parse("z-poly")


def test_rational_coefficients_in_qp():
    f = P((1, 1)).scale(Fraction(1, 2))
    assert is_atom(Ring.QP_POLY, f)
    with pytest.raises(DomainError):
        is_atom(Ring.NN_POLY, f)


def test_constants_are_atoms_iff_prime():
    for c in range(1, 40):
        assert is_atom(Ring.NN_POLY, P((c,))) == is_prime(c)


CORPUS = random_corpus()


@pytest.mark.parametrize("cs", CORPUS)
def test_oracle_agreement(cs):
    f = P(cs)
    assert {g.coeffs for g in enumerate_divisors(Ring.NN_POLY, f)} == set(nn_divisors(cs))
    assert zset(Ring.NN_POLY, f) == nn_factorizations(cs)
    assert is_atom(Ring.NN_POLY, f) == nn_is_atom(cs)


@pytest.mark.parametrize("cs", nonunique_corpus())
def test_oracle_agreement_nonunique(cs):
    f = P(cs)
    assert {g.coeffs for g in enumerate_divisors(Ring.NN_POLY, f)} == set(nn_divisors(cs))
    assert zset(Ring.NN_POLY, f) == nn_factorizations(cs)


def test_nonunique_corpus_is_nonunique():
    counts = [len(enumerate_factorizations(Ring.NN_POLY, P(cs))) for cs in nonunique_corpus()]
    assert sum(c >= 2 for c in counts) >= len(counts) // 2


@pytest.mark.parametrize("cs", CORPUS)
def test_soundness(cs):
    f = P(cs)
    for ring in (Ring.NN_POLY, Ring.NN_LAURENT):
        for z in enumerate_factorizations(ring, f):
            assert all(is_atom(ring, a) for a in z.atoms)
            want = f if ring is Ring.NN_POLY else f.shift(-f.ord)
            assert z.product() == want


@pytest.mark.parametrize("cs", [c for c in CORPUS if c[0] != 0])
def test_laurent_poly_correspondence(cs):
    f = P(cs)
    assert len(enumerate_factorizations(Ring.NN_LAURENT, f)) == len(enumerate_factorizations(Ring.NN_POLY, f))
    if is_atom(Ring.NN_POLY, f):
        assert is_atom(Ring.NN_LAURENT, f)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.lists(st.integers(0, 3), min_size=1, max_size=4))
def test_product_divisible_by_factors(a, b):
    f, g = P(a), P(b)
    if f.is_zero or g.is_zero:
        return
    h = f * g
    divs = set(enumerate_divisors(Ring.NN_POLY, h))
    assert f in divs and g in divs

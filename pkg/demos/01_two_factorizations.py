"""
Two factorizations of one polynomial
====================================

Over the integers x^5 + x^4 + x^3 + x^2 + x + 1 splits uniquely into
(x + 1)(x^2 + x + 1)(x^2 - x + 1).  Inside N0[x] the middle factor with a
minus sign is not available, so it has to be absorbed by one of its
neighbours, and there are two ways to do that.
"""

from semifactor import (
    Ring,
    enumerate_divisors,
    enumerate_factorizations,
    equal_length_distinct_witness,
    irreducible_factors_zx,
    is_atom,
    parse_poly,
)

f = parse_poly("x^5 + x^4 + x^3 + x^2 + x + 1")

# the ambient factorization in Z[x]
fac = irreducible_factors_zx(f)
print("over Z:", " * ".join(f"({g})" for g, _ in fac.factors))

# only sub-products whose cofactor is also nonnegative survive as divisors
print("divisors in N0[x]:", [str(g) for g in enumerate_divisors(Ring.NN_POLY, f)])

for z in enumerate_factorizations(Ring.NN_POLY, f):
    print("  factorization:", z, " length", z.length)

# every factor that appears is an atom, even x^4 + x^2 + 1 which is reducible over Z
for a in ["x + 1", "x^2 + x + 1", "x^3 + 1", "x^4 + x^2 + 1"]:
    print(f"  {a:>14} atom in N0[x]: {is_atom(Ring.NN_POLY, parse_poly(a))}")

# same length, different atoms: N0[x] is not length-factorial
z, w = equal_length_distinct_witness(Ring.NN_POLY, f)
print("witness pair:", z, "|", w)

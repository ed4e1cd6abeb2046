"""
Same polynomial, three semirings
================================

N0[x] has only the unit 1.  The Laurent semiring N0[x, 1/x] also inverts the
monomials x^n, and Q>=0[x] inverts every positive rational constant.  More
units means fewer distinct atoms, so the factorization sets shrink.
"""

from semifactor import Ring, enumerate_factorizations, is_atom, parse_laurent, parse_poly

f = parse_poly("6x^3 + 6x^2")
for ring in Ring:
    zs = enumerate_factorizations(ring, f)
    print(f"{ring.value:>10}:", "; ".join(str(z) for z in zs))

# x^2 + x + 1 divides x^4 + x^2 + 1 over Z but not in any of these semirings:
# the cofactor x^2 - x + 1 has a negative coefficient
g = parse_poly("x^4 + x^2 + 1")
print("\nx^4 + x^2 + 1 atom in:", [r.value for r in Ring if is_atom(r, g)])

# Laurent inputs may carry negative exponents; only the order-0 body matters
h = parse_laurent("x^-3 + 2x^-2 + x^-1")
print("x^-3 + 2x^-2 + x^-1 =", "; ".join(str(z) for z in enumerate_factorizations(Ring.NN_LAURENT, h)))

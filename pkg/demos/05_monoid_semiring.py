"""
Polynomials with exponents in the monoid
========================================

Elements are finite sums c * e(s) with s in the monoid generated by powers
of r.  Each one splits as d * e(s) * g: a content d, a monomial, and a part g
with coprime coefficients and no monomial divisor.  The g part has bounded
factorization length (log2 of its coefficient sum); the monomial part
inherits the infinite behaviour of the exponent monoid.
"""

from fractions import Fraction as Q

from semifactor import monoid_semiring as ms
from semifactor import puiseux as pz

p = pz.PuiseuxParams(Q(2, 3))
E = lambda text: ms.parse_ms(p, text)  # noqa: E731

a, b = E("1 + e(2/3)"), E("1 + e(4/9)")
f = ms.ms_mul(a, b)
print("(1 + e(2/3)) (1 + e(4/9)) =", ms.format_ms(f))
print("division recovers the cofactor:", ms.format_ms(ms.ms_divides(a, f)))

g0 = E("2*e(2/3) + 2*e(4/3)")
d, s, g = ms.ms_normal_decomposition(g0)
print(f"\n{ms.format_ms(g0)} = {d} * e({s}) * ({ms.format_ms(g)})")

for text in ["1 + e(2/3)", "1 + 2*e(2/3) + e(4/3)", "e(2/3) + e(4/3)", "6*e(2)"]:
    zs, complete = ms.ms_factorizations(E(text))
    print(f"\n{text}: {len(zs)} factorization(s), complete={complete}")
    for z in zs[:4]:
        print("   ", z)

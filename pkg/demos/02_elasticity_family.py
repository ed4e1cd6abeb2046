"""
Elasticities from a two-parameter family
========================================

f = (x + n)^n (x^2 - x + 1) (x + 1)^k has exactly two factorizations in
N0[x], of lengths k + 1 and k + n.  Their ratio (k + n)/(k + 1) reaches every
rational >= 1 as n and k vary.

The whole thing hinges on when (x + n)^m (x^2 - x + 1) loses its negative
coefficient: exactly at m = n.
"""

from fractions import Fraction

from semifactor import elasticity_family, family_member_is_nonneg

print("sign threshold: smallest m with (x+n)^m (x^2-x+1) nonnegative")
for n in range(2, 7):
    m = next(m for m in range(10) if family_member_is_nonneg(n, m))
    print(f"  n={n}: m={m}")

print()
print(" n  k  lengths   elasticity")
for n in range(2, 6):
    for k in range(1, 4):
        rep = elasticity_family(n, k)
        print(f" {n}  {k}  {str(rep.lengths):9} {rep.elasticity}")

# pick n, k to hit a target ratio p/q > 1: k + 1 = q*t, k + n = p*t
target = Fraction(7, 4)
t = 1
while target.denominator * t - 1 < 1 or target.numerator * t - target.denominator * t + 1 < 2:
    t += 1
k = target.denominator * t - 1
n = target.numerator * t - k
rep = elasticity_family(n, k)
print(f"\ntarget {target}: n={n}, k={k} gives elasticity {rep.elasticity}")
for z in rep.factorizations:
    print("  ", z)

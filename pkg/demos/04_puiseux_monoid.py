"""
The monoid generated by powers of 2/3
=====================================

S = <1, 2/3, 4/9, ...> under addition.  Every member has a unique digit
vector with digits below 2 except possibly the last; membership is a
digit-by-digit carry computation.  The identity 2 r^j = 3 r^(j+1) makes the
chain 2, 4/3, 8/9, ... strictly ascending as principal ideals, so the
ascending chain condition fails, yet every pair of elements still has a
maximal common divisor.
"""

from fractions import Fraction as Q

from semifactor import puiseux as pz

p = pz.PuiseuxParams(Q(2, 3))

for q in [Q(4, 9), Q(1, 3), Q(2), Q(26, 9)]:
    e = pz.is_member(p, q)
    print(f"{str(q):>5}: " + (f"digits {e.coeffs}" if e else "not a member"))

# 2 has infinitely many divisors: r^k divides it for every k
two = pz.element(p, 2)
print("\nr^k divides 2 for k < 10:", all(pz.divides(p, pz.generator(p, k), two) for k in range(10)))

w = pz.accp_chain(p, 6)
print("\nchain:", ", ".join(str(a) for a in w.elements))
print("gaps: ", ", ".join(str(g) for g in w.gaps))
print("verified:", w.verify())

res = pz.mcd(p, pz.element(p, Q(4, 3)), pz.element(p, 2), pz.element(p, Q(26, 9)))
print("\nmcd(4/3, 2, 26/9) =", res.value, " remainders", [str(x) for x in res.remainders])
print("candidates ruled out by the certificate search:", res.candidates_checked)

print("\nr^n atoms for n <= 8:", all(pz.atom_test(p, n) for n in range(9)))

"""
Finitely many lengths, infinitely many factorizations
=====================================================

In N0 ∪ Q>=2 every nonunit is at least 2, so a factorization of q has at
most log2(q) atoms.  But the atoms fill the whole interval [2, 4), and
9 = (3 mu)(3 / mu) is a factorization for every rational mu > 1 close to 1.
"""

from fractions import Fraction as Q

from semifactor import nq

p = nq.NQParams(2)
for q in [Q(9, 4), 3, 4, Q(7, 2), 9]:
    print(f"{str(q):>4} atom: {nq.nq_is_atom(p, q)}")

sample = nq.nq_factorization_sample(p, 9, 12)
print("\nfactorizations of 9:")
for z in sample.factorizations:
    print("   ", " * ".join(str(a) for a in z))

lengths = nq.nq_length_set_bounded(p, 9)
print("\nlengths of 9 found:", lengths, " elasticity >=", Q(max(lengths), min(lengths)))
print("lengths of 64 found:", nq.nq_length_set_bounded(p, 64))

"""
Arithmetic of a block monoid
============================

Zero-sum sequences over the nonzero elements of a cyclic group of order 3
form the smallest monoid with interesting factorization theory.  This walk
computes its atoms and the classical invariants of the element 1^3 2^3.
"""

from factorinv import BlockMonoid, delta_of_set, make_group, subset_nonzero

G = make_group([3])
B = BlockMonoid(G, subset_nonzero(G))

print("atoms of B(C3 \\ {0}):")
for atom in B.atoms():
    print("   ", atom)

# The element 1^3 2^3 factors as (1*2)^3 and as (1^3)(2^3): lengths 3 and 2.
P = B.presented()
v = B.vector_of(B.sequence([(1,)] * 3 + [(2,)] * 3))

print("\nfactorizations of 1^3 2^3:")
for z in P.factorizations(v):
    parts = " * ".join(f"({B.sequence_of(P.atoms[i])})^{m}" for i, m in z.counts)
    print(f"    length {z.length}: {parts}")

lengths = P.length_set(v)
print("\nlength set:       ", set(lengths))
print("gap set:          ", set(delta_of_set(lengths)))
print("catenary degree:  ", P.catenary_of(v))

# Monoid-wide invariants, scanned up to twice the Davenport constant.
bound = 6
print(f"\nmonoid invariants at size bound {bound}:")
print("    delta set:     ", set(P.delta(bound)))
print("    catenary:      ", P.catenary(bound))
print("    rho2:          ", P.rho2(bound))
ok, witness = P.half_factorial(bound)
print("    half-factorial:", ok, "- witness", witness)

"""
Rigid factorizations as maximal chains of principal ideals
==========================================================

Factorizations of an element a correspond to maximal chains of principal
right ideals between aR and R.  The built-in lattices transcribe classical
intervals in matrix rings over the first Weyl algebra A (where x^2 y equals
(1+xy) x) and over the idealizer K + xA, whose class group is trivial and
which nevertheless fails to be half-factorial.
"""

from factorinv import BUILTIN_NAMES, builtin, composition_distance

for name in BUILTIN_NAMES:
    lattice = builtin(name)
    chains = lattice.rigid_factorizations()
    print(f"{name}:")
    print(f"    nodes {len(lattice.principal)}, "
          f"composition length {lattice.composition_length()}")
    for chain in chains:
        steps = "  ".join("{" + ",".join(step) + "}" for step in chain.step_labels)
        print(f"    chain of length {chain.length}: {' < '.join(chain.nodes)}")
        print(f"        step classes: {steps}")
    print(f"    length set: {set(lattice.length_set())}\n")

# The two factorizations of x^2 y sit at composition distance 2: one shared
# step class cancels, three others remain on one side, one on the other.
chains = builtin("weyl_x2y").rigid_factorizations()
print("composition distance between the chains of weyl_x2y:",
      composition_distance(chains[0], chains[1]))

# m2r_nonhf is the executable non-half-factoriality witness: a two-atom
# product also factors into three atoms although the class group of the
# underlying ring is trivial, so no block-monoid transfer can exist.
nonhf = builtin("m2r_nonhf")
print("m2r_nonhf length set with trivial class group:", set(nonhf.length_set()))

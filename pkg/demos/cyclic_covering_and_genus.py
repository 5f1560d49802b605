"""
Covering a cyclic group by progression prefixes, and genus updates
==================================================================

If arithmetic progressions with difference 1 cover Z/nZ, then disjoint
starting segments of them already cover it, with total size exactly n.
Applied to modules: an arc module whose composition factors hit every
residue of a cycle tower contains a submodule (and has a quotient) hitting
each residue exactly once.  Passing to maximal submodules moves the genus
vector by a one-step rank shuffle along the tower.
"""

from factorinv import (
    Arc,
    ArcModule,
    Tower,
    TowerSpec,
    disjoint_prefix_cover,
    full_cycle_quotient,
    full_cycle_submodule,
    genus_step,
    has_cycle_standard_rank,
    make_group,
    standard_genus,
)

print("prefix covers:")
for n, progressions in ((3, [(0, 2)]), (4, [(0, 1), (2, 1)]), (3, [(0, 2), (1, 2)])):
    sizes = disjoint_prefix_cover(n, progressions)
    print(f"    n={n}, progressions {progressions} -> prefix sizes {sizes}")

# An arc (bottom residue 0, length 3) over Z/2Z covers residues 0, 1, 0.
module = ArcModule(2, (Arc(0, 3),))
print("\narc module:", module.to_doc())
print("class vector:", dict(module.class_vector()))
print("submodule with one factor per residue:", full_cycle_submodule(module).to_doc())
print("kernel of one-per-residue quotient:   ", full_cycle_quotient(module).to_doc())

# Genus calculus over a spec with a trivial tower, a faithful tower of
# length 2, and a cycle tower of length 3.
G = make_group([2])
spec = TowerSpec(
    G,
    (
        Tower("triv", "faithful", 1, (0,)),
        Tower("fai", "faithful", 2, (0,)),
        Tower("cyc", "cycle", 3, (1,)),
    ),
)
base = standard_genus(spec, udim=1, rank=1)
print("\nbase genus:", base.udim, dict(base.ranks))

for label in ("triv.0", "fai.0", "fai.1", "cyc.0"):
    stepped = genus_step(base, label, spec)
    print(f"    after maximal submodule with quotient {label}: {dict(stepped.ranks)}")

g = base
for label in spec.simples(spec.tower("cyc")):
    g = genus_step(g, label, spec)
print("\nfull cycle of steps returns the base genus:", g == base)
print("cycle standard rank preserved:", has_cycle_standard_rank(g, spec, base))

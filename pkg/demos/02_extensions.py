"""Walkthrough: group extensions from cocycles and their classification.

Run:  python3 demos/02_extensions.py
"""

import itertools

from covlab import fingroup as fg
from covlab.cohomology2 import (Cochain2, cohomologous,
                                enumerate_normalized_cocycles, trivial_cochain)
from covlab.extension import (build_extension, classify_type,
                              extensions_equivalent)

z2, z3 = fg.cyclic(2), fg.cyclic(3)

# the trivial cocycle gives the direct product
ext = build_extension(trivial_cochain(z2, z2))
print("trivial cocycle over (Z2, Z2):", ext.E.order_profile(),
      classify_type(ext).labels)

# xi(g,g) = a glues the two copies into Z4 (a central, non-split extension)
z4_producing = Cochain2(z2, z2, ((0, 0), (0, 1)), (0, 0))
ext = build_extension(z4_producing)
print("xi(g,g)=a over (Z2, Z2):  ", ext.E.order_profile(),
      classify_type(ext).labels)

# a neutral cocycle (xi = 1, phi = inversion) gives the semidirect product S3
inv = fg.compute_aut(z3).index_of((0, 2, 1))
s3_producing = Cochain2(z2, z3, ((0, 0), (0, 0)), (0, inv))
ext = build_extension(s3_producing)
print("neutral (1, inversion) over (Z2, Z3):", ext.E.order_profile(),
      classify_type(ext).labels, "- same orders as S3:",
      ext.E.order_profile() == fg.symmetric3().order_profile())

# equivalence of extensions matches cohomology of cocycles, pair by pair
print("\ncocycle classes <-> extension classes over (Z2, Z4):")
cocycles = enumerate_normalized_cocycles(z2, fg.cyclic(4))
exts = [build_extension(c) for c in cocycles]
agree = all(
    (cohomologous(c1, c2) is not None)
    == (extensions_equivalent(e1, e2) is not None)
    for (c1, e1), (c2, e2) in itertools.combinations(list(zip(cocycles, exts)), 2))
print("  cohomologous  <=>  equivalent as extensions:", agree)

reps = []
for e in exts:
    if not any(extensions_equivalent(e, r) is not None for r in reps):
        reps.append(e)
print("  distinct extensions of Z2 by Z4:", len(reps))
for e in reps:
    print("   ", e.E.order_profile(), classify_type(e).labels)

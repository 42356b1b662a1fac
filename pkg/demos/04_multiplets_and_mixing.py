"""Walkthrough: field multiplets, the extended-group action, and mixing.

Run:  python3 demos/04_multiplets_and_mixing.py
"""

from covlab import models
from covlab.extension import build_extension, classify_type
from covlab.multiplet import (build_rho, detect_mixing, equivalent,
                              intertwiners, irreducible, scaling_multiplet,
                              verify_field_action)

# -- the vector pattern: a 2-component field under finite rotations ----------

vec = models.vector_multiplet_action()
print("vector multiplet: laws hold:", verify_field_action(vec).valid)
rho = build_rho(vec, build_extension(vec.cocycle))
print("star(g) is the inverse rotation:", vec.star[1])

# -- Schur reasoning with exact intertwiners ---------------------------------

triv = models.q8_sign_rep("1")
chi_i = models.q8_sign_rep("i")
two = models.q8_two_dim_rep()
print("\nQ8 representations:")
print("  hom(triv, chi_i) =", len(intertwiners(triv, chi_i)), "(Schur zero)")
print("  end(2-dim) dimension =", len(intertwiners(two, two)),
      "-> irreducible:", irreducible(two))
print("  triv ~ chi_i:", equivalent(triv, chi_i))

# -- mixing: forbidden for direct products, realized otherwise ---------------

sub1, sub2 = models.standard_submultiplets()
for name, action in [("inequivalent blocks", models.block_diagonal_fixtures()[0]),
                     ("equivalent blocks", models.equivalent_blocks_action()),
                     ("central Z4 cocycle", models.central_z4_mixing_action())]:
    ext = build_extension(action.cocycle)
    rho = build_rho(action, ext)
    res = detect_mixing(rho, ext, sub1, sub2)
    labels = classify_type(ext).labels
    print(f"\n{name}: extension {labels}")
    if res.witness is None:
        print("  no element of E connects the two multiplets"
              + ("  [no-mixing assertion armed]" if res.no_mixing_asserted else ""))
    else:
        print("  mixed by e =", res.witness_pair, "(gauge part, group part)")

# the quaternion extension mixes two inequivalent multiplier lines
q8a = models.q8_mixing_action()
ext = build_extension(q8a.cocycle)
rho = build_rho(q8a, ext)
e1, e2 = models.eigenline_submultiplets()
res = detect_mixing(rho, ext, e1, e2)
print("\nquaternion extension (nontrivial class):",
      classify_type(ext).labels)
print("  rotation eigenlines mixed by e =", res.witness_pair)

# -- the scaling multiplet of a Wick power -----------------------------------

print("\nscale action on span{R^j Phi^(4-2j)} at lambda = 2:")
m = scaling_multiplet(4)
for row in m.matrix:
    print("   [", " | ".join(str(c) for c in row), "]")
print("  verdict:", m.verdict)
print("  at conformal coupling:", scaling_multiplet(4, coupling="conformal").verdict)

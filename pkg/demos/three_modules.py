"""
R, its localization, and local cohomology
=========================================

Three presented modules over F_2[x]<F>: the ring itself, R_x and
H^1_x(R) = R_x / R.
"""

from frobmod import RingContext, analyze, check_unit_identity
from frobmod import local_cohomology_presentation, localization_presentation, ring_presentation

ctx = RingContext(2, 1)

for pres in (ring_presentation(ctx), localization_presentation(ctx), local_cohomology_presentation(ctx)):
    rep = analyze(pres)
    print(pres.name)
    print("  relations      ", [str(r) for r in pres.relations])
    print("  groebner basis ", [str(g) for g in rep.groebner.elements])
    print("  initial module ", rep.initial.render())
    print("  hilbert series ", rep.hs, "=", rep.hs.expand(10))
    print("  dimension", rep.delta, " multiplicity", rep.multiplicity, " holonomic", rep.holonomic.value)

# R sits inside R_x one filtration step up, so the series fit together
print("HS(R_x) - t HS(R) == HS(H^1):", check_unit_identity())
print("with the wrong shift:         ", check_unit_identity(shift=2))

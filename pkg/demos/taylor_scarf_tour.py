"""Build Taylor and Scarf complexes, minimalize, and watch the shifts."""

from shiftlab import (
    MonomialIdeal,
    Ring,
    check_subadditivity_profile,
    example2,
    is_minimal,
    minimalize,
    scarf_complex,
    scarf_is_resolution,
    shifts_of_complex,
    taylor_complex,
    verify_complex,
)

ring = Ring(["x", "y"])
I = MonomialIdeal(ring, [(2, 0), (1, 1), (0, 2)])  # x^2, xy, y^2

T = taylor_complex(I)
print("Taylor ranks:", T.ranks())           # (1, 3, 3, 1)
print("face multidegrees:", [(be.label, be.mdeg) for be in T.modules[2]])
print(verify_complex(T))

S = scarf_complex(I)
print("Scarf ranks:", S.ranks())             # (1, 3, 2): {1,3} and {1,2,3} share x^2y^2
print("Scarf is already minimal here?", scarf_is_resolution(I))

M = minimalize(T)
print("minimalized Taylor ranks:", M.ranks(), "minimal:", is_minimal(M))
print("shift profile:", tuple(shifts_of_complex(M)))

# The bigger bundled example: Taylor is far from minimal, the Scarf complex
# undercounts (the ideal is not generic), and only minimalization lands on
# the Betti numbers.
J = example2()
for name, F in (("taylor", taylor_complex(J)),
                ("scarf", scarf_complex(J)),
                ("minimal", minimalize(taylor_complex(J)))):
    prof = shifts_of_complex(F)
    flat = all(r.holds for r in check_subadditivity_profile(prof))
    print(f"{name:8} ranks {F.ranks()} shifts {tuple(prof)} subadditive: {flat}")
print("Scarf resolves S/J?", scarf_is_resolution(J))

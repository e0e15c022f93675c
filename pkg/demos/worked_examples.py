"""Walk through the two bundled worked examples end to end."""

from shiftlab import (
    PrimeField,
    check_covering,
    check_multiple,
    example1,
    example2,
    format_betti_grid,
    format_monomial,
    height,
    is_covering_pair,
    multigraded_betti,
    restrict_ideal,
)

# The 5-generator ideal in k[x,y,z,w,u,v,a].
I = example2()
print("generators:", ", ".join(format_monomial(g, I.ring) for g in I.gens))

table = multigraded_betti(I)
print(format_betti_grid(table))
print("Betti numbers:", table.totals())  # 1 5 8 5 1
print("same over GF(32003):", multigraded_betti(I, PrimeField(32003)).totals())

prof = table.shift_profile()
print("maximal shifts:", tuple(prof), "-> projective dimension", prof.projdim)
print("height:", height(I), "(so the symmetric Betti sequence is not Gorenstein)")

# The two second-syzygy multidegrees that cover the ideal.
a2 = (3, 2, 2, 2, 2, 0, 2)
b2 = (2, 2, 3, 2, 2, 2, 0)
print("covering pair?", is_covering_pair(I, a2, b2))
print(check_multiple(I, [(a2, 2), (b2, 2)], table=table))  # t_4 <= t_2 + t_2

# The 12-generator ideal in k[x,y,z,u,v,w,a]: restriction gives sharper
# covering bounds than consecutive steps alone.
J = example1()
alpha = (5, 5, 5, 5, 0, 0, 0)
beta = (3, 3, 2, 2, 6, 5, 6)
tj = multigraded_betti(J)
pj = tj.shift_profile()
print("\n12-generator ideal: projdim", pj.projdim, "shifts", tuple(pj))
Ja, Jb = restrict_ideal(J, alpha), restrict_ideal(J, beta)
print("restriction below alpha:",
      ", ".join(format_monomial(g, J.ring) for g in Ja.gens))
print("restriction below beta: ",
      ", ".join(format_monomial(g, J.ring) for g in Jb.gens))
for rep in check_covering(J, alpha, beta, profile=pj):
    print(" ", rep)

"""The restriction trick: slicing a resolution below a multidegree keeps it
a (minimal) resolution of the restricted ideal, and covering pairs turn that
into bounds on the big ideal's shifts."""

from shiftlab import (
    divides,
    example2,
    find_covering_pairs,
    minimalize,
    multigraded_betti,
    restrict_complex,
    restrict_ideal,
    star_shift_bound,
    shifts_of_complex,
    taylor_complex,
    verify_complex,
)

I = example2()
table = multigraded_betti(I)
alpha = (3, 2, 2, 2, 2, 0, 2)

# Slice the minimal resolution below alpha...
M = minimalize(taylor_complex(I))
R = restrict_complex(M, alpha)
print("restricted resolution ranks:", R.ranks(), "-", verify_complex(R))

# ...and compare with resolving the restricted ideal from scratch.
Ia = restrict_ideal(I, alpha)
print("Betti of the restricted ideal:", multigraded_betti(Ia).totals())

# Multigraded Betti numbers below alpha agree entry by entry.
slice_below = {k: v for k, v in table.entries.items() if divides(k[1], alpha)}
print("table slice == restricted table:",
      slice_below == multigraded_betti(Ia).entries)

# Covering pairs discovered among second-syzygy multidegrees.
pairs = find_covering_pairs(I, at=2, table=table)
print("covering pairs at a=2:", pairs)

# The paired-complex degree bound behind the covering inequality.
a, b = pairs[0]
Fa = minimalize(taylor_complex(restrict_ideal(I, a)))
Fb = minimalize(taylor_complex(restrict_ideal(I, b)))
prof = table.shift_profile()
for k in range(prof.projdim + 1):
    print(f"t_{k} = {prof[k]:2}   star bound {star_shift_bound(Fa, Fb, k)}")
print("restricted profiles:", tuple(shifts_of_complex(Fa)), tuple(shifts_of_complex(Fb)))

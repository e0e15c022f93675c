"""Expand the window bounds symbolically into sums of low shifts."""

from shiftlab import derive_symbolic_bounds, general_windows

# Zero-dimensional, n=7 variables, m=8 generators: the only admissible
# window parameter is p=4 and the splits collapse to {2,4} and {3,3}.
print("windows for (n=7, m=8, a=6):", general_windows(7, 8, 6))
for bound in derive_symbolic_bounds(7, 8, 6):
    print("  ", bound)

# For t_7 the admissible p varies with m; the weakest common consequence
# t_7 <= t_1 + t_2 + t_4 survives for every n from 7 to 20.
for n in (7, 10, 15, 20):
    m = min(2 * n - 6, 10)
    bounds = derive_symbolic_bounds(n, m, 7)
    print(f"n={n:2} m={m:2}:", "; ".join(str(b) for b in bounds))

# Degenerate cases fall back to the consecutive rewrite alone.
print("a=2:", [str(b) for b in derive_symbolic_bounds(2, 2, 2)])
print("n=6 (a=7 impossible):", [str(b) for b in derive_symbolic_bounds(6, 6, 7)])

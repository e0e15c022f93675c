"""Probe random monomial ideals for subadditivity failures.

No counterexample is known for monomial ideals; this scans a seeded box and
reports any violation of t_{a+b} <= t_a + t_b on minimal-resolution shifts.
The proved consecutive/top bounds run alongside as a self-test.
"""

from collections import Counter

from shiftlab import (
    check_consecutive,
    check_subadditivity_profile,
    check_top,
    shifts,
)
from shiftlab.randomgen import random_corpus

corpus = random_corpus(seed=7, count=200, max_n=5, max_m=6, maxexp=3)
profiles = Counter()
violations = []
for I in corpus:
    prof = shifts(I)
    profiles[prof.projdim] += 1
    for rep in check_subadditivity_profile(prof):
        if not rep.holds:
            violations.append((I, rep))
    assert all(r.holds for r in check_consecutive(I, profile=prof))
    if prof.projdim >= 1:
        assert check_top(I, profile=prof).holds

print("ideals probed:", len(corpus))
print("projective dimension histogram:", dict(sorted(profiles.items())))
print("subadditivity violations found:", len(violations))
for I, rep in violations:
    print("  COUNTEREXAMPLE?", I, rep)

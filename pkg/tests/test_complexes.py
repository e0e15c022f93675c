import json
from functools import reduce
from itertools import combinations

import pytest

from shiftlab import (
    MonomialIdeal,
    QQ,
    PrimeField,
    Ring,
    complex_from_json,
    dumps_complex,
    is_minimal,
    join,
    minimalize,
    multigraded_betti,
    restrict_complex,
    restrict_ideal,
    scarf_complex,
    shifts_of_complex,
    star_shift_bound,
    taylor_complex,
    total_degree,
    verify_complex,
)
from shiftlab.complexes import CapExceededError, FreeComplex

RING2 = Ring(["x", "y"])
KOSZUL2 = MonomialIdeal(RING2, [(1, 0), (0, 1)])


def raw_ideal(ring, gens):
    """Test-only constructor bypassing minimality (for non-minimal inputs)."""
    I = object.__new__(MonomialIdeal)
    object.__setattr__(I, "ring", ring)
    object.__setattr__(I, "gens", tuple(tuple(g) for g in gens))
    return I


# --- Taylor ------------------------------------------------------------------

def test_taylor_principal():
    F = taylor_complex(MonomialIdeal(RING2, [(2, 0)]))
    assert F.ranks() == (1, 1)
    assert tuple(shifts_of_complex(F)) == (0, 2)


def test_taylor_koszul():
    F = taylor_complex(KOSZUL2)
    assert F.ranks() == (1, 2, 1)
    assert F.modules[2][0].mdeg == (1, 1)
    assert verify_complex(F).ok


def test_taylor_example2_ranks(ex2):
    F = taylor_complex(ex2)
    assert F.ranks() == (1, 5, 10, 10, 5, 1)
    assert verify_complex(F).ok


def test_taylor_zero_ideal():
    F = taylor_complex(MonomialIdeal(RING2, []))
    assert F.ranks() == (1,)


def test_taylor_cap():
    with pytest.raises(CapExceededError):
        taylor_complex(KOSZUL2, cap=1)


# --- Scarf -------------------------------------------------------------------

def test_scarf_koszul_is_full_taylor():
    S = scarf_complex(KOSZUL2)
    assert S.ranks() == (1, 2, 1)


def test_scarf_three_generators():
    I = MonomialIdeal(RING2, [(2, 0), (1, 1), (0, 2)])
    S = scarf_complex(I)
    assert S.ranks() == (1, 3, 2)
    assert verify_complex(S).ok
    # brute-force uniqueness oracle over all 7 nonempty subsets
    gens = I.gens
    lcms = {}
    for r in range(1, 4):
        for face in combinations(range(3), r):
            v = reduce(join, (gens[i] for i in face))
            lcms.setdefault(v, []).append(face)
    scarf_faces = {f for fs in lcms.values() if len(fs) == 1 for f in fs}
    got = {be.label for mod in S.modules[1:] for be in mod}
    assert got == scarf_faces
    assert {(0, 1), (1, 2)} <= scarf_faces and (0, 2) not in scarf_faces


def test_scarf_zero_ideal():
    assert scarf_complex(MonomialIdeal(RING2, [])).ranks() == (1,)


def test_scarf_subset_of_taylor_with_distinct_mdegs(ex2):
    S = scarf_complex(ex2)
    T = taylor_complex(ex2)
    for a in range(len(S.modules)):
        assert {be.label for be in S.modules[a]} <= {be.label for be in T.modules[a]}
    mdegs = [be.mdeg for mod in S.modules for be in mod]
    assert len(mdegs) == len(set(mdegs))


# --- restriction ---------------------------------------------------------------

def test_restrict_by_join_is_identity(ex2):
    F = taylor_complex(ex2)
    top = reduce(join, (be.mdeg for mod in F.modules for be in mod))
    R = restrict_complex(F, top)
    assert R.ranks() == F.ranks()
    assert R.diffs[2] == F.diffs[2]


def test_restrict_taylor_example2_alpha1(ex2):
    alpha = (3, 2, 2, 2, 2, 0, 2)
    F = taylor_complex(ex2)
    R = restrict_complex(F, alpha)
    assert verify_complex(R).ok
    # filter oracle: exactly the faces whose lcm divides alpha survive
    from shiftlab import divides
    for a in range(len(F.modules)):
        kept = [be.label for be in F.modules[a] if divides(be.mdeg, alpha)]
        got = [be.label for be in R.modules[a]] if a < len(R.modules) else []
        assert got == kept


def test_restrict_minimal_resolution_is_minimal(ex2):
    alpha = (3, 2, 2, 2, 2, 0, 2)
    M = minimalize(taylor_complex(ex2))
    R = restrict_complex(M, alpha)
    assert verify_complex(R).ok and is_minimal(R)
    # and it is a minimal resolution of the restricted ideal
    expected = multigraded_betti(restrict_ideal(ex2, alpha)).totals()
    assert R.ranks() == expected


def test_restrict_minimal_resolution_example1(ex1, ex1_table):
    # slicing the full 4096-face minimal resolution below alpha lands on a
    # minimal resolution of the restricted ideal, of projective dimension 4
    alpha = (5, 5, 5, 5, 0, 0, 0)
    M = minimalize(taylor_complex(ex1))
    assert M.ranks() == ex1_table.totals()
    R = restrict_complex(M, alpha)
    assert is_minimal(R) and verify_complex(R).ok
    assert len(R.ranks()) - 1 == 4
    assert R.ranks() == multigraded_betti(restrict_ideal(ex1, alpha)).totals()


# --- verification ----------------------------------------------------------------

def test_verify_detects_sign_flip(ex2):
    F = taylor_complex(ex2)
    assert verify_complex(F).ok
    row, coeff, mdeg = F.diffs[2][3][0]
    F.diffs[2][3][0] = (row, -coeff, mdeg)
    rep = verify_complex(F)
    assert not rep.ok and rep.location[0] in (2, 3)


def test_verify_detects_homogeneity_break():
    F = taylor_complex(KOSZUL2)
    row, coeff, mdeg = F.diffs[1][0][0]
    F.diffs[1][0][0] = (row, coeff, (5, 5))
    rep = verify_complex(F)
    assert not rep.ok and "homogene" in rep.problem


# --- minimalization ----------------------------------------------------------------

def test_minimalize_example2_gives_betti_ranks(ex2):
    M = minimalize(taylor_complex(ex2))
    assert M.ranks() == (1, 5, 8, 5, 1)
    assert is_minimal(M) and verify_complex(M).ok


def test_minimalize_koszul_unchanged():
    F = taylor_complex(KOSZUL2)
    M = minimalize(F)
    assert M.ranks() == (1, 2, 1)
    assert [be.label for mod in M.modules for be in mod] == [
        be.label for mod in F.modules for be in mod
    ]


def test_minimalize_nonminimal_two_generators():
    I = raw_ideal(Ring(["x"]), [(2,), (3,)])
    F = taylor_complex(I)
    assert F.ranks() == (1, 2, 1)
    M = minimalize(F)
    assert M.ranks() == (1, 1)
    assert tuple(shifts_of_complex(M)) == (0, 2)


def test_minimalize_idempotent(ex2):
    M = minimalize(taylor_complex(ex2))
    assert minimalize(M).ranks() == M.ranks()


def test_minimalize_prime_field(ex2):
    gf = PrimeField(32003)
    M = minimalize(taylor_complex(ex2), gf)
    assert M.ranks() == (1, 5, 8, 5, 1)
    assert is_minimal(M) and verify_complex(M, gf).ok
    # without the field, the integer composition correctly looks nonzero
    assert not verify_complex(M).ok


def test_is_minimal_cases(ex2):
    assert is_minimal(taylor_complex(KOSZUL2))
    assert not is_minimal(taylor_complex(ex2))
    assert is_minimal(minimalize(taylor_complex(ex2)))


# --- shifts and the star bound -----------------------------------------------------

def test_shifts_of_minimal_example2(ex2):
    M = minimalize(taylor_complex(ex2))
    assert tuple(shifts_of_complex(M)) == (0, 11, 13, 15, 16)


def test_shifts_of_koszul():
    assert tuple(shifts_of_complex(taylor_complex(KOSZUL2))) == (0, 1, 2)


def test_taylor_top_shift_is_lcm_degree(ex2):
    F = taylor_complex(ex2)
    top = total_degree(reduce(join, ex2.gens))
    assert shifts_of_complex(F)[5] == top == 16


def test_star_shift_bound_trivial():
    F = taylor_complex(KOSZUL2)
    assert star_shift_bound(F, F, 0) == 0
    assert star_shift_bound(F, F, 5) is None
    assert star_shift_bound(F, F, 2) == max(2 + 0, 1 + 1)


def test_star_shift_bound_example1(ex1, ex1_table):
    alpha, beta = (5, 5, 5, 5, 0, 0, 0), (3, 3, 2, 2, 6, 5, 6)
    Fa = minimalize(taylor_complex(restrict_ideal(ex1, alpha)))
    Fb = minimalize(taylor_complex(restrict_ideal(ex1, beta)))
    bound = star_shift_bound(Fa, Fb, 7)
    t = ex1_table.shift_profile()
    assert bound is not None
    assert t[7] <= bound <= max(t[2] + t[5], t[3] + t[4])


# --- dump format ---------------------------------------------------------------------

def test_complex_json_roundtrip(ex2):
    M = minimalize(taylor_complex(ex2))
    back = complex_from_json(json.loads(dumps_complex(M)))
    assert back.ranks() == M.ranks()
    assert verify_complex(back).ok and is_minimal(back)
    assert [be.mdeg for be in back.modules[2]] == [be.mdeg for be in M.modules[2]]


def test_free_complex_validates_shape():
    with pytest.raises(ValueError):
        FreeComplex([[]], [])

"""Multigraded free chain complexes over a polynomial ring.

A complex stores, per homological degree a, a list of basis elements
(label + multidegree) and, for a >= 1, a sparse differential into degree
a-1.  Differentials are column-major: ``diffs[a][j]`` is the list of
``(row, coeff, mdeg)`` entries of basis element j of module a, where
``mdeg`` is the exponent vector of the monomial coefficient.  Multigraded
homogeneity pins ``mdeg`` to ``mdeg(column) - mdeg(row)``, which is what
keeps single-term sparse entries closed under all the operations here.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .fields import QQ
from .monomials import MonomialIdeal, divides, join, total_degree

GENERATOR_CAP = 22  # 2^22 Taylor faces; both bundled worked examples need <= 12


class CapExceededError(RuntimeError):
    """Too many generators for a 2^m-sized construction."""


@dataclass(frozen=True)
class BasisElement:
    """One free summand: a label (face tuple or opaque id) and its multidegree."""

    label: tuple
    mdeg: tuple

    @property
    def degree(self) -> int:
        return total_degree(self.mdeg)


@dataclass(frozen=True)
class ShiftProfile:
    """Maximal shifts (t_0, ..., t_p): t_a is the largest total degree of a
    basis element in homological degree a, and p is the index of the last
    nonzero module."""

    shifts: tuple[int, ...]

    @property
    def projdim(self) -> int:
        return len(self.shifts) - 1

    def __getitem__(self, a: int) -> int:
        return self.shifts[a]

    def __len__(self) -> int:
        return len(self.shifts)

    def __iter__(self):
        return iter(self.shifts)

    def __str__(self):
        return " ".join(str(t) for t in self.shifts)


class FreeComplex:
    """Finite complex of multigraded free modules with sparse differentials."""

    __slots__ = ("modules", "diffs")

    def __init__(self, modules, diffs):
        if len(diffs) != len(modules):
            raise ValueError("need one differential slot per module (diffs[0] unused)")
        self.modules = [list(mod) for mod in modules]
        self.diffs = [[list(col) for col in d] for d in diffs]

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def ranks(self) -> tuple[int, ...]:
        return tuple(len(mod) for mod in self.modules)

    def __repr__(self):
        return f"FreeComplex(ranks={self.ranks()})"


def _face_lcms(I: MonomialIdeal) -> list[tuple]:
    """lcm of every generator subset, indexed by bitmask (lcm[0] = 0-vector)."""
    zero = I.ring.zero()
    lcm = [zero] * (1 << I.m)
    for mask in range(1, 1 << I.m):
        low = mask & -mask
        lcm[mask] = join(lcm[mask ^ low], I.gens[low.bit_length() - 1])
    return lcm


def _check_cap(I: MonomialIdeal, cap: int):
    if I.m > cap:
        raise CapExceededError(f"{I.m} generators exceeds cap {cap}")


def taylor_complex(I: MonomialIdeal, cap: int = GENERATOR_CAP) -> FreeComplex:
    """The Taylor complex of I: module a has one basis element per a-subset
    of the generators, with multidegree the lcm of its members.

    The boundary of a face drops one member at a time: the term for the
    k-th smallest index carries sign (-1)^(k-1) and monomial
    lcm(F)/lcm(F minus that member).  The result resolves S/I.
    """
    _check_cap(I, cap)
    m = I.m
    faces = [list(combinations(range(m), a)) for a in range(m + 1)]
    lcm_by_mask = _face_lcms(I)

    def mask(face):
        b = 0
        for i in face:
            b |= 1 << i
        return b

    modules = [
        [BasisElement(face, lcm_by_mask[mask(face)]) for face in level]
        for level in faces
    ]
    index = [{face: j for j, face in enumerate(level)} for level in faces]
    diffs = [[]]
    for a in range(1, m + 1):
        level = []
        for face in faces[a]:
            fm = mask(face)
            col = []
            for k, i in enumerate(face):
                sub = face[:k] + face[k + 1:]
                entry_mdeg = tuple(
                    x - y for x, y in zip(lcm_by_mask[fm], lcm_by_mask[fm ^ (1 << i)])
                )
                col.append((index[a - 1][sub], (-1) ** k, entry_mdeg))
            level.append(col)
        diffs.append(level)
    return FreeComplex(modules, diffs)


def scarf_complex(I: MonomialIdeal, cap: int = GENERATOR_CAP) -> FreeComplex:
    """The Scarf complex: the Taylor faces whose lcm no other subset attains,
    with the Taylor differential restricted to them.

    Scarf faces form a simplicial complex (every facet of a Scarf face is
    Scarf), so the restriction never drops a boundary term.
    """
    _check_cap(I, cap)
    m = I.m
    lcm_by_mask = _face_lcms(I)
    counts: dict[tuple, int] = {}
    for v in lcm_by_mask:
        counts[v] = counts.get(v, 0) + 1

    faces: list[list[tuple]] = [[] for _ in range(m + 1)]
    faces[0].append(())
    for a in range(1, m + 1):
        for face in combinations(range(m), a):
            b = 0
            for i in face:
                b |= 1 << i
            if counts[lcm_by_mask[b]] == 1:
                faces[a].append(face)
    while len(faces) > 1 and not faces[-1]:
        faces.pop()

    def mask(face):
        b = 0
        for i in face:
            b |= 1 << i
        return b

    modules = [
        [BasisElement(face, lcm_by_mask[mask(face)]) for face in level]
        for level in faces
    ]
    index = [{face: j for j, face in enumerate(level)} for level in faces]
    diffs = [[]]
    for a in range(1, len(faces)):
        level = []
        for face in faces[a]:
            fm = mask(face)
            col = []
            for k, i in enumerate(face):
                sub = face[:k] + face[k + 1:]
                if sub not in index[a - 1]:
                    raise RuntimeError(f"Scarf facet {sub} of {face} not Scarf")
                entry_mdeg = tuple(
                    x - y for x, y in zip(lcm_by_mask[fm], lcm_by_mask[fm ^ (1 << i)])
                )
                col.append((index[a - 1][sub], (-1) ** k, entry_mdeg))
            level.append(col)
        diffs.append(level)
    return FreeComplex(modules, diffs)


def restrict_complex(F: FreeComplex, alpha: tuple) -> FreeComplex:
    """The subcomplex on basis elements with multidegree <= alpha.

    Homogeneity makes this closed: any entry of a retained column points at
    a row of smaller multidegree, which is retained too.  Restriction of a
    minimal complex is minimal (no entries are created).
    """
    keep = [
        [j for j, be in enumerate(mod) if divides(be.mdeg, alpha)]
        for mod in F.modules
    ]
    remap = [{j: i for i, j in enumerate(level)} for level in keep]
    modules = [[F.modules[a][j] for j in keep[a]] for a in range(len(keep))]
    diffs = [[]]
    for a in range(1, len(keep)):
        level = []
        for j in keep[a]:
            col = []
            for row, coeff, mdeg in F.diffs[a][j]:
                if row not in remap[a - 1]:
                    raise ValueError(
                        "restriction not closed: input complex is not homogeneous"
                    )
                col.append((remap[a - 1][row], coeff, mdeg))
            level.append(col)
        diffs.append(level)
    while len(modules) > 1 and not modules[-1]:
        modules.pop()
        diffs.pop()
    return FreeComplex(modules, diffs)


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    problem: str | None = None
    location: tuple | None = None

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "complex ok: d^2 = 0 and all entries homogeneous"
        return f"complex INVALID at {self.location}: {self.problem}"


def verify_complex(F: FreeComplex, field=QQ) -> VerifyReport:
    """Check multigraded homogeneity of every entry and that consecutive
    differentials compose to zero.  Failures are reported, not raised.

    Pass the complex's coefficient field: entries of a GF(p) complex are
    stored as ints in [0, p), so d∘d only cancels modulo p.
    """
    for a in range(1, len(F.modules)):
        for j, col in enumerate(F.diffs[a]):
            cm = F.modules[a][j].mdeg
            for row, coeff, mdeg in col:
                if not 0 <= row < len(F.modules[a - 1]):
                    return VerifyReport(False, "row index out of range", (a, j, row))
                rm = F.modules[a - 1][row].mdeg
                if any(e < 0 for e in mdeg):
                    return VerifyReport(False, "negative entry multidegree", (a, j, row))
                if tuple(x - y for x, y in zip(cm, rm)) != tuple(mdeg):
                    return VerifyReport(
                        False, "entry multidegree breaks homogeneity", (a, j, row)
                    )
    for a in range(2, len(F.modules)):
        for j in range(len(F.modules[a])):
            acc: dict[tuple, object] = {}
            for row, coeff, mdeg in F.diffs[a][j]:
                for row2, coeff2, mdeg2 in F.diffs[a - 1][row]:
                    key = (row2, tuple(x + y for x, y in zip(mdeg, mdeg2)))
                    acc[key] = acc.get(key, 0) + coeff * coeff2
            for (row2, _), total in acc.items():
                if not field.is_zero(field.of(total)):
                    return VerifyReport(
                        False, "d∘d has a nonzero entry", (a, j, row2)
                    )
    return VerifyReport(True)


def is_minimal(F: FreeComplex) -> bool:
    """Minimal means no differential entry is a nonzero scalar (multidegree 0)."""
    for a in range(1, len(F.modules)):
        for col in F.diffs[a]:
            for _, coeff, mdeg in col:
                if coeff != 0 and not any(mdeg):
                    return False
    return True


def shifts_of_complex(F: FreeComplex) -> ShiftProfile:
    """Maximal total degree per module, up to the last nonzero module."""
    top = 0
    for a, mod in enumerate(F.modules):
        if mod:
            top = a
    return ShiftProfile(
        tuple(
            max((be.degree for be in F.modules[a]), default=0) for a in range(top + 1)
        )
    )


def minimalize(F: FreeComplex, field=QQ) -> FreeComplex:
    """Cancel invertible differential entries until none remain.

    A pivot is an entry whose monomial multidegree is zero (so the column
    and row basis elements share a multidegree) with invertible coefficient.
    Cancelling it splits off a trivial two-term summand: the classic update
    M[g',f'] -= M[g,f']*M[g',f]/M[g,f] runs on the pivot's level, the pivot
    column's row disappears from the level above, and the pivot row's
    column disappears from the level below.  Homology is unchanged; on a
    resolution the output is minimal, so its ranks are the Betti numbers.

    Pivots are taken smallest (level, row, column) first, which makes the
    output deterministic; surviving basis elements keep their input labels.
    """
    L = F.length
    basis = [
        {j: be.mdeg for j, be in enumerate(mod)} for mod in F.modules
    ]
    cols: list[dict] = [dict() for _ in range(L + 1)]
    rows: list[dict] = [dict() for _ in range(L + 1)]
    cand: list[list] = [[] for _ in range(L + 1)]
    for a in range(1, L + 1):
        for j, col in enumerate(F.diffs[a]):
            if not col:
                cols[a][j] = {}
                continue
            d = {}
            for row, coeff, mdeg in col:
                c = field.of(coeff)
                if field.is_zero(c):
                    continue
                d[row] = c
                rows[a].setdefault(row, set()).add(j)
                if not any(mdeg):
                    heapq.heappush(cand[a], (row, j))
            cols[a][j] = d
        for j in range(len(F.modules[a])):
            cols[a].setdefault(j, {})

    def drop_row_above(a, f):
        # module-a element f is also a row of the level-(a+1) differential
        if a + 1 <= L:
            for e in rows[a + 1].pop(f, ()):
                cols[a + 1][e].pop(f, None)

    def drop_col_below(a, g):
        # module-(a-1) element g is also a column of the level-(a-1) differential
        if a - 1 >= 1:
            for row in cols[a - 1].pop(g, {}):
                live = rows[a - 1].get(row)
                if live is not None:
                    live.discard(g)

    for a in range(1, L + 1):
        heap = cand[a]
        while heap:
            g, f = heapq.heappop(heap)
            if g not in basis[a - 1] or f not in basis[a]:
                continue
            c = cols[a].get(f, {}).get(g)
            if c is None or field.is_zero(c) or basis[a - 1][g] != basis[a][f]:
                continue
            cinv = field.inv(c)
            pivot_col = [(g2, d) for g2, d in cols[a][f].items() if g2 != g]
            pivot_row = [
                (f2, cols[a][f2][g]) for f2 in rows[a].get(g, ()) if f2 != f
            ]
            for f2, b in pivot_row:
                factor = field.mul(cinv, b)
                target = cols[a][f2]
                for g2, d in pivot_col:
                    new = field.sub(target.get(g2, field.zero), field.mul(factor, d))
                    if field.is_zero(new):
                        if g2 in target:
                            del target[g2]
                            rows[a][g2].discard(f2)
                    else:
                        if g2 not in target:
                            rows[a].setdefault(g2, set()).add(f2)
                        target[g2] = new
                        if basis[a - 1][g2] == basis[a][f2]:
                            heapq.heappush(heap, (g2, f2))
            # detach the cancelled pair everywhere
            for f2, _ in pivot_row:
                cols[a][f2].pop(g, None)
            for g2, _ in pivot_col:
                rows[a][g2].discard(f)
            rows[a].pop(g, None)
            cols[a].pop(f, None)
            drop_row_above(a, f)
            drop_col_below(a, g)
            del basis[a][f]
            del basis[a - 1][g]

    modules = []
    order = []
    for a in range(L + 1):
        alive = sorted(basis[a])
        order.append({j: i for i, j in enumerate(alive)})
        modules.append([F.modules[a][j] for j in alive])
    diffs = [[]]
    for a in range(1, L + 1):
        level = []
        for j in sorted(basis[a]):
            cm = basis[a][j]
            col = []
            for row in sorted(cols[a].get(j, {})):
                coeff = cols[a][j][row]
                mdeg = tuple(x - y for x, y in zip(cm, basis[a - 1][row]))
                col.append((order[a - 1][row], coeff, mdeg))
            level.append(col)
        diffs.append(level)
    while len(modules) > 1 and not modules[-1]:
        modules.pop()
        diffs.pop()
    return FreeComplex(modules, diffs)


def star_shift_bound(Fa: FreeComplex, Fb: FreeComplex, a: int) -> int | None:
    """Best degree bound for homological degree a of the pairing of two
    complexes: max of t_i(Fa) + t_j(Fb) over splits i + j = a.  Only the
    basis-level bound is computed (a paired basis element's multidegree is
    the join of its factors, so its degree is at most the sum).  Returns
    None when no split exists (a negative or beyond both lengths)."""
    if a < 0:
        return None
    ta = shifts_of_complex(Fa)
    tb = shifts_of_complex(Fb)
    lo = max(0, a - tb.projdim)
    hi = min(ta.projdim, a)
    if lo > hi:
        return None
    return max(ta[i] + tb[a - i] for i in range(lo, hi + 1))


# ---------------------------------------------------------------------------
# JSON dump format (used by the CLI `dump` subcommand and golden tests)


def complex_to_json(F: FreeComplex) -> dict:
    return {
        "modules": [
            [{"label": list(be.label), "mdeg": list(be.mdeg)} for be in mod]
            for mod in F.modules
        ],
        "differentials": [
            [
                {"col": j, "row": row, "coeff": str(coeff), "mdeg": list(mdeg)}
                for j, col in enumerate(level)
                for row, coeff, mdeg in col
            ]
            for level in F.diffs
        ],
    }


def complex_from_json(obj: dict) -> FreeComplex:
    modules = [
        [BasisElement(tuple(be["label"]), tuple(be["mdeg"])) for be in mod]
        for mod in obj["modules"]
    ]
    diffs = []
    for a, level in enumerate(obj["differentials"]):
        cols = [[] for _ in modules[a]] if a else []
        for ent in level:
            coeff = Fraction(ent["coeff"])
            if coeff.denominator == 1:
                coeff = int(coeff)
            cols[ent["col"]].append((ent["row"], coeff, tuple(ent["mdeg"])))
        diffs.append(cols)
    return FreeComplex(modules, diffs)


def dumps_complex(F: FreeComplex) -> str:
    return json.dumps(complex_to_json(F), sort_keys=True)

"""Bundled worked-example ideals and the golden verification report.

Two fixtures ship with the package: a 12-generator ideal (its published
write-up contains two misprints in the restricted generator lists, which
the report flags rather than reproduces) and a 5-generator ideal with
Betti numbers 1, 5, 8, 5, 1.  ``verify_golden`` recomputes every recorded
value from scratch and reports pass/note/fail per line; ``note`` marks a
documented discrepancy between the literal definition and the printed text.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources

from .betti import multigraded_betti
from .checks import check_multiple, find_covering_pairs
from .fields import QQ, PrimeField
from .monomials import (
    MonomialIdeal,
    format_monomial,
    is_covering_pair,
    height,
    loads_ideal,
    parse_monomial,
    restrict_ideal,
    total_degree,
)

EX1_ALPHA = (5, 5, 5, 5, 0, 0, 0)
EX1_BETA = (3, 3, 2, 2, 6, 5, 6)
EX1_PROJDIM = 7
EX1_PRINTED_P = 4
EX1_PRINTED_Q = 5
# restricted generator lists as printed in the write-up (x^3*y^3*z^2 is the
# misprint: the ideal's actual generator is x^3*y^2*z^2, which also fits
# below beta yet is absent from the printed beta list)
EX1_PRINTED_RESTRICT_ALPHA = ("x^5", "y^5", "z^5", "u^5", "x^3*y^3*z^2", "u^2*y^2*z^3")
EX1_PRINTED_RESTRICT_BETA = (
    "w^5",
    "v^6",
    "a^6",
    "x^2*w^2*v^2",
    "a^2*x^3*y^2*u^2*w^2",
    "a^2*z^2*u^2",
)

EX2_BETTI = (1, 5, 8, 5, 1)
EX2_SHIFTS = (0, 11, 13, 15, 16)
EX2_HEIGHT = 2
EX2_COVER_A = (3, 2, 2, 2, 2, 0, 2)
EX2_COVER_B = (2, 2, 3, 2, 2, 2, 0)

CROSSCHECK_PRIME = 32003


def fixture_text(name: str, fixtures_dir: str | None = None) -> str:
    if fixtures_dir is not None:
        with open(os.path.join(fixtures_dir, name), encoding="utf-8") as fh:
            return fh.read()
    return (resources.files("shiftlab") / "data" / name).read_text(encoding="utf-8")


def load_fixture(name: str, fixtures_dir: str | None = None) -> MonomialIdeal:
    return loads_ideal(fixture_text(name, fixtures_dir))


def example1(fixtures_dir: str | None = None) -> MonomialIdeal:
    return load_fixture("example1.ideal", fixtures_dir)


def example2(fixtures_dir: str | None = None) -> MonomialIdeal:
    return load_fixture("example2.ideal", fixtures_dir)


def koszul2(fixtures_dir: str | None = None) -> MonomialIdeal:
    return load_fixture("koszul2.ideal", fixtures_dir)


@dataclass(frozen=True)
class GoldenRow:
    name: str
    status: str  # "pass" | "note" | "fail"
    detail: str

    def __str__(self):
        return f"[{self.status.upper():4}] {self.name}: {self.detail}"


def _row(name, ok, detail, note=False) -> GoldenRow:
    if ok:
        return GoldenRow(name, "pass", detail)
    return GoldenRow(name, "note" if note else "fail", detail)


def _guarded(rows: list, name: str, fn, note=False):
    """Run one check; a raise (corrupted fixture, shorter resolution than
    recorded, a pair that no longer covers) becomes a red row, not a crash."""
    try:
        ok, detail = fn()
    except Exception as exc:  # noqa: BLE001 - report, never die
        rows.append(GoldenRow(name, "fail", f"error: {exc}"))
        return
    rows.append(_row(name, ok, detail, note=note))


def verify_golden(fixtures_dir: str | None = None) -> list[GoldenRow]:
    """Recompute every recorded value of the two bundled worked examples."""
    rows: list[GoldenRow] = []
    I2 = example2(fixtures_dir)
    I1 = example1(fixtures_dir)

    # --- the 5-generator example -----------------------------------------
    t2_q = multigraded_betti(I2, QQ)
    t2_p = multigraded_betti(I2, PrimeField(CROSSCHECK_PRIME))
    rows.append(
        _row(
            "ex2 Betti numbers (QQ)",
            t2_q.totals() == EX2_BETTI,
            f"computed {t2_q.totals()}, recorded {EX2_BETTI}",
        )
    )
    rows.append(
        _row(
            f"ex2 Betti numbers (GF({CROSSCHECK_PRIME}))",
            t2_p.totals() == EX2_BETTI,
            f"computed {t2_p.totals()}, recorded {EX2_BETTI}",
        )
    )
    prof2 = t2_q.shift_profile()
    rows.append(
        _row(
            "ex2 maximal shifts",
            tuple(prof2) == EX2_SHIFTS,
            f"computed {tuple(prof2)}, recorded {EX2_SHIFTS}",
        )
    )
    rows.append(
        _row(
            "ex2 projective dimension",
            prof2.projdim == 4,
            f"computed {prof2.projdim}, recorded 4",
        )
    )
    h2 = height(I2)
    rows.append(_row("ex2 height", h2 == EX2_HEIGHT, f"computed {h2}, recorded 2"))
    t1_max = max(total_degree(g) for g in I2.gens)
    rows.append(
        _row(
            "ex2 t_1 equals max generator degree",
            prof2[1] == t1_max == 11,
            f"t_1={prof2[1]}, max generator degree {t1_max}, recorded 11",
        )
    )
    sup2 = t2_q.support_at(2)
    pair_found = EX2_COVER_A in sup2 and EX2_COVER_B in sup2
    rows.append(
        _row(
            "ex2 covering multidegrees lie in F_2 support",
            pair_found,
            f"{EX2_COVER_A} and {EX2_COVER_B} in Betti support at a=2: {pair_found}",
        )
    )
    rows.append(
        _row(
            "ex2 covering pair",
            is_covering_pair(I2, EX2_COVER_A, EX2_COVER_B),
            f"I = I^<=alpha + I^<=beta for {EX2_COVER_A}, {EX2_COVER_B}",
        )
    )
    _guarded(
        rows,
        "ex2 discovered by the F_2 search",
        lambda: (
            tuple(sorted((EX2_COVER_A, EX2_COVER_B)))
            in find_covering_pairs(I2, at=2, table=t2_q),
            "find_covering_pairs(at=2) returns the recorded pair",
        ),
    )

    def _multiple():
        rep = check_multiple(I2, [(EX2_COVER_A, 2), (EX2_COVER_B, 2)], table=t2_q)
        return (
            rep.holds and rep.lhs == 16 and rep.rhs == 26,
            f"{rep.lhs} <= {rep.rhs}",
        )

    _guarded(rows, "ex2 t_4 <= t_2 + t_2", _multiple)

    # --- the 12-generator example -----------------------------------------
    t1_q = multigraded_betti(I1, QQ)
    prof1 = t1_q.shift_profile()
    rows.append(
        _row(
            "ex1 projective dimension",
            prof1.projdim == EX1_PROJDIM,
            f"computed {prof1.projdim}, recorded {EX1_PROJDIM}",
        )
    )
    rows.append(
        _row(
            "ex1 covering pair",
            is_covering_pair(I1, EX1_ALPHA, EX1_BETA),
            f"alpha={EX1_ALPHA}, beta={EX1_BETA}",
        )
    )

    ring1 = I1.ring
    printed_alpha = {parse_monomial(s, ring1) for s in EX1_PRINTED_RESTRICT_ALPHA}
    computed_alpha = set(restrict_ideal(I1, EX1_ALPHA).gens)
    rows.append(
        _row(
            "ex1 restriction below alpha matches the printed list",
            printed_alpha == computed_alpha,
            "computed {%s}; printed {%s} (known misprint: x^3*y^2*z^2 vs x^3*y^3*z^2)"
            % (
                ", ".join(sorted(format_monomial(g, ring1) for g in computed_alpha)),
                ", ".join(sorted(EX1_PRINTED_RESTRICT_ALPHA)),
            ),
            note=True,
        )
    )
    p_computed = multigraded_betti(restrict_ideal(I1, EX1_ALPHA), QQ).projdim
    rows.append(
        _row(
            "ex1 p = projdim of the alpha restriction",
            p_computed == EX1_PRINTED_P,
            f"computed {p_computed}, recorded {EX1_PRINTED_P}",
        )
    )
    printed_beta = {parse_monomial(s, ring1) for s in EX1_PRINTED_RESTRICT_BETA}
    computed_beta = set(restrict_ideal(I1, EX1_BETA).gens)
    rows.append(
        _row(
            "ex1 restriction below beta matches the printed list",
            printed_beta == computed_beta,
            "computed {%s}; printed {%s} (the printed list omits x^3*y^2*z^2)"
            % (
                ", ".join(sorted(format_monomial(g, ring1) for g in computed_beta)),
                ", ".join(sorted(EX1_PRINTED_RESTRICT_BETA)),
            ),
            note=True,
        )
    )
    q_computed = multigraded_betti(restrict_ideal(I1, EX1_BETA), QQ).projdim
    rows.append(
        _row(
            "ex1 q = projdim of the beta restriction",
            q_computed == EX1_PRINTED_Q,
            f"computed {q_computed} from the definition, recorded {EX1_PRINTED_Q}",
            note=True,
        )
    )
    def _top_inequality():
        lhs = prof1[7]
        rhs = max(prof1[2] + prof1[5], prof1[3] + prof1[4])
        return (
            lhs <= rhs,
            f"t_7={lhs}, bound {rhs} "
            f"(t_2={prof1[2]}, t_3={prof1[3]}, t_4={prof1[4]}, t_5={prof1[5]})",
        )

    _guarded(rows, "ex1 t_7 <= max{t_2 + t_5, t_3 + t_4}", _top_inequality)
    return rows


def golden_ok(rows: list[GoldenRow]) -> bool:
    return all(r.status != "fail" for r in rows)

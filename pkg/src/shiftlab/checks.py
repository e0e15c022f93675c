"""Executable inequality checks on maximal-shift profiles.

Each check builds InequalityReport records: the instance parameters, both
sides of the inequality, whether it holds, and the multidegrees or index
splits that witness the bound.  The consecutive/top/covering/range/multiple
checks are proved facts, so a ``holds=False`` report from any of them on
valid input signals an implementation bug, not mathematics.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import reduce
from itertools import combinations_with_replacement, product

from .betti import lcm_lattice, multigraded_betti, shifts
from .complexes import GENERATOR_CAP, ShiftProfile
from .fields import QQ
from .monomials import (
    MonomialIdeal,
    divides,
    is_covering_pair,
    contains_all_pure_powers,
    join,
    pure_power_exponents,
    restrict_ideal,
    support,
)


class CoveringPairError(ValueError):
    """The supplied multidegrees do not cover the ideal."""


@dataclass(frozen=True)
class InequalityReport:
    name: str
    params: dict
    lhs: int | None
    rhs: int | None
    holds: bool
    witnesses: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        def clean(v):
            if isinstance(v, tuple):
                return [clean(x) for x in v]
            if isinstance(v, list):
                return [clean(x) for x in v]
            if isinstance(v, dict):
                return {k: clean(x) for k, x in v.items()}
            return v

        return {
            "name": self.name,
            "params": clean(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "witnesses": clean(self.witnesses),
        }

    def __str__(self):
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        verdict = "ok" if self.holds else "VIOLATION"
        return f"{self.name} [{ps}]: {self.lhs} <= {self.rhs} -> {verdict}"


def _holds(lhs, rhs) -> bool:
    if lhs is None:
        return True  # the module in question vanishes; nothing to bound
    if rhs is None:
        return False
    return lhs <= rhs


def check_subadditivity_profile(t: ShiftProfile) -> list[InequalityReport]:
    """t_{a+b} <= t_a + t_b for all a <= b with a, b >= 1 and a+b <= p.

    This is the open question for minimal resolutions; violations are
    reported, never raised.
    """
    out = []
    for a in range(1, t.projdim + 1):
        for b in range(a, t.projdim - a + 1):
            lhs, rhs = t[a + b], t[a] + t[b]
            out.append(
                InequalityReport(
                    "subadditivity", {"a": a, "b": b}, lhs, rhs, _holds(lhs, rhs)
                )
            )
    return out


def check_consecutive(I: MonomialIdeal, field=QQ, *, profile=None) -> list[InequalityReport]:
    """t_a(I) <= t_{a-1}(I) + t_1(I) for a = 1..p (a proved fact)."""
    t = profile if profile is not None else shifts(I, field)
    out = []
    for a in range(1, t.projdim + 1):
        lhs, rhs = t[a], t[a - 1] + t[1]
        out.append(
            InequalityReport("consecutive", {"a": a}, lhs, rhs, _holds(lhs, rhs))
        )
    return out


def check_top(I: MonomialIdeal, field=QQ, *, profile=None) -> InequalityReport:
    """t_p(I) <= t_{p-1}(I) + t_1(I) at the projective dimension p."""
    t = profile if profile is not None else shifts(I, field)
    p = t.projdim
    if p == 0:
        raise ValueError("zero ideal: no top shift to bound")
    lhs, rhs = t[p], t[p - 1] + t[1]
    return InequalityReport("top", {"p": p}, lhs, rhs, _holds(lhs, rhs))


def _restriction_projdims(I, alpha, beta, field):
    p = multigraded_betti(restrict_ideal(I, alpha), field).projdim
    q = multigraded_betti(restrict_ideal(I, beta), field).projdim
    return p, q


def _best_splits(t: ShiftProfile, a: int, lo: int, hi: int):
    """max of t_i + t_{a-i} over i in [lo, hi], skipping splits where either
    index falls outside the profile; returns (value or None, all arg-max splits)."""
    best = None
    splits = []
    for i in range(max(lo, 0), hi + 1):
        j = a - i
        if j < 0 or i > t.projdim or j > t.projdim:
            continue
        v = t[i] + t[j]
        if best is None or v > best:
            best, splits = v, [(i, j)]
        elif v == best:
            splits.append((i, j))
    return best, splits


def check_covering(
    I: MonomialIdeal, alpha, beta, field=QQ, *, profile=None
) -> list[InequalityReport]:
    """The covering-pair bounds: projdim S/I <= p + q, and for every
    a <= projdim S/I, t_a(I) <= max{t_i(I) + t_j(I) : i+j = a, i <= p, j <= q},
    where p and q are the projective dimensions of S/I restricted below
    alpha and beta."""
    alpha, beta = tuple(alpha), tuple(beta)
    if not is_covering_pair(I, alpha, beta):
        raise CoveringPairError(f"({alpha}, {beta}) is not a covering pair")
    t = profile if profile is not None else shifts(I, field)
    p, q = _restriction_projdims(I, alpha, beta, field)
    reports = [
        InequalityReport(
            "covering-projdim",
            {"p": p, "q": q},
            t.projdim,
            p + q,
            _holds(t.projdim, p + q),
            {"alpha": alpha, "beta": beta},
        )
    ]
    for a in range(t.projdim + 1):
        rhs, splits = _best_splits(t, a, a - q, min(p, a))
        reports.append(
            InequalityReport(
                "covering-shift",
                {"a": a, "p": p, "q": q},
                t[a],
                rhs,
                _holds(t[a], rhs),
                {"alpha": alpha, "beta": beta, "splits": splits},
            )
        )
    return reports


def check_range(
    I: MonomialIdeal, alpha, beta, a: int, field=QQ, *, profile=None
) -> InequalityReport:
    """The window form of the covering bound: with s = p + q - a,
    t_a(I) <= max{t_i(I) + t_{a-i}(I) : p - s <= i <= p}."""
    alpha, beta = tuple(alpha), tuple(beta)
    if not is_covering_pair(I, alpha, beta):
        raise CoveringPairError(f"({alpha}, {beta}) is not a covering pair")
    t = profile if profile is not None else shifts(I, field)
    p, q = _restriction_projdims(I, alpha, beta, field)
    if a > p + q:
        raise ValueError(f"a={a} exceeds p+q={p + q}")
    s = p + q - a
    rhs, splits = _best_splits(t, a, p - s, p)
    lhs = t[a] if a <= t.projdim else None
    return InequalityReport(
        "range",
        {"a": a, "p": p, "q": q, "s": s},
        lhs,
        rhs,
        _holds(lhs, rhs),
        {"alpha": alpha, "beta": beta, "splits": splits},
    )


def check_general(
    I: MonomialIdeal, a: int, p: int, field=QQ, *, profile=None
) -> InequalityReport:
    """The zero-dimensional window bound.

    Requires every variable to carry a pure-power generator, m <= 2n - 6,
    (m+4)/2 <= a <= n and m - a + 2 <= p <= a - 2.  The covering pair is
    built the canonical way: alpha keeps the pure powers of the first p
    variables, beta is the lcm of the remaining generators.  The bound is
    min{t_1 + t_{a-1}, max{t_i + t_{a-i} : p - (m-a) <= i <= min(p, a//2)}}.
    """
    m, n = I.m, I.ring.n
    problems = []
    if not contains_all_pure_powers(I):
        problems.append("some variable has no pure-power generator (dim S/I > 0)")
    if m > 2 * n - 6:
        problems.append(f"m={m} exceeds 2n-6={2 * n - 6}")
    if 2 * a < m + 4:
        problems.append(f"a={a} is below (m+4)/2={(m + 4) / 2}")
    if a > n:
        problems.append(f"a={a} exceeds n={n}")
    if not m - a + 2 <= p <= a - 2:
        problems.append(f"p={p} outside [{m - a + 2}, {a - 2}]")
    if problems:
        raise ValueError("; ".join(problems))
    pure = pure_power_exponents(I)
    alpha = tuple(pure[i] if i < p else 0 for i in range(n))
    rest = [g for g in I.gens if not (len(support(g)) == 1 and support(g)[0] < p)]
    beta = reduce(join, rest, I.ring.zero())
    t = profile if profile is not None else shifts(I, field)
    lo, hi = p - (m - a), min(p, a // 2)
    inner, splits = _best_splits(t, a, lo, hi)
    side = t[1] + t[a - 1] if a - 1 <= t.projdim else None
    options = [v for v in (side, inner) if v is not None]
    rhs = min(options) if options else None
    lhs = t[a] if a <= t.projdim else None
    return InequalityReport(
        "general",
        {"a": a, "p": p, "m": m, "n": n, "window": (lo, hi)},
        lhs,
        rhs,
        _holds(lhs, rhs),
        {"alpha": alpha, "beta": beta, "splits": splits, "consecutive_side": side},
    )


def check_multiple(
    I: MonomialIdeal, covers, field=QQ, *, table=None
) -> InequalityReport:
    """t_{a_1 + ... + a_r}(I) <= t_{a_1}(I) + ... + t_{a_r}(I) for
    multidegrees alpha_i of nonzero Betti entries at a_i whose restrictions
    jointly cover I."""
    covers = [(tuple(alpha), int(a)) for alpha, a in covers]
    if not covers:
        raise ValueError("empty cover list")
    tab = table if table is not None else multigraded_betti(I, field)
    for alpha, a in covers:
        if (a, alpha) not in tab.entries:
            raise ValueError(f"({a}, {alpha}) is not a Betti support point")
    for g in I.gens:
        if not any(divides(g, alpha) for alpha, _ in covers):
            raise CoveringPairError(
                f"generator {g} is below none of the cover multidegrees"
            )
    t = tab.shift_profile()
    total = sum(a for _, a in covers)
    lhs = t[total] if total <= t.projdim else None
    rhs = sum(t[a] for _, a in covers)
    return InequalityReport(
        "multiple",
        {"indices": tuple(a for _, a in covers), "total": total},
        lhs,
        rhs,
        _holds(lhs, rhs),
        {"alphas": tuple(alpha for alpha, _ in covers)},
    )


def find_covering_pairs(
    I: MonomialIdeal, at: int | None = None, field=QQ, cap: int = GENERATOR_CAP, *, table=None
) -> list[tuple[tuple, tuple]]:
    """All unordered candidate pairs (alpha, beta) that cover I.

    Candidates default to the whole lcm lattice; with ``at`` given they are
    the Betti-support multidegrees at that homological index.  Pairs come
    back lexicographically sorted; user-chosen vectors outside the lattice
    can always be validated directly with is_covering_pair.
    """
    if at is None:
        candidates = lcm_lattice(I, cap)
    else:
        tab = table if table is not None else multigraded_betti(I, field, cap)
        candidates = tab.support_at(at)
    return [
        (a, b)
        for a, b in combinations_with_replacement(candidates, 2)
        if is_covering_pair(I, a, b)
    ]


# ---------------------------------------------------------------------------
# symbolic bound expansion


@dataclass(frozen=True)
class SymbolicBound:
    """An inequality t_target <= sum of t_i over ``terms`` (sorted indices)."""

    target: int
    terms: tuple[int, ...]

    def __str__(self):
        rhs = " + ".join(f"t_{i}" for i in self.terms)
        return f"t_{self.target} <= {rhs}"

    def evaluate(self, t: ShiftProfile) -> InequalityReport:
        lhs = t[self.target] if self.target <= t.projdim else None
        if any(i > t.projdim for i in self.terms):
            rhs = None
        else:
            rhs = sum(t[i] for i in self.terms)
        return InequalityReport(
            "symbolic",
            {"target": self.target, "terms": self.terms},
            lhs,
            rhs,
            _holds(lhs, rhs),
        )


def _expansions(ms: tuple[int, ...]) -> set[tuple[int, ...]]:
    """Closure of a term multiset under replacing some t_b by t_{b-1} + t_1."""
    seen = {tuple(sorted(ms))}
    frontier = [tuple(sorted(ms))]
    while frontier:
        cur = frontier.pop()
        for k, b in enumerate(cur):
            if b >= 2:
                nxt = tuple(sorted(cur[:k] + cur[k + 1:] + (b - 1, 1)))
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
    return seen


def _contains(big: tuple[int, ...], small: tuple[int, ...]) -> bool:
    cb, cs = Counter(big), Counter(small)
    return all(cb[k] >= v for k, v in cs.items())


def _max_union(multisets) -> tuple[int, ...]:
    acc: dict[int, int] = {}
    for ms in multisets:
        for k, v in Counter(ms).items():
            acc[k] = max(acc.get(k, 0), v)
    out = []
    for k in sorted(acc):
        out.extend([k] * acc[k])
    return tuple(out)


def _symbolic_le(small: tuple[int, ...], big: tuple[int, ...]) -> bool:
    """Whether sum of t_i over ``small`` provably bounds below the sum over
    ``big``: each small term b must absorb a disjoint chunk of ``big`` of
    the shape {j} + (b - j) copies of t_1 (the consecutive rewrite), and
    leftover big terms are harmless since shifts are nonnegative."""
    avail = Counter(big)

    def match(terms):
        if not terms:
            return True
        b, rest = terms[0], terms[1:]
        for j in sorted(set(avail), reverse=True):
            k = b - j
            if j < 1 or k < 0 or avail[j] == 0:
                continue
            need_ones = k + (1 if j == 1 else 0)
            if j != 1 and avail[1] < k:
                continue
            if j == 1 and avail[1] < need_ones:
                continue
            avail[j] -= 1
            avail[1] -= k
            if match(rest):
                avail[j] += 1
                avail[1] += k
                return True
            avail[j] += 1
            avail[1] += k
        return False

    return match(tuple(sorted(small, reverse=True)))


def general_windows(n: int, m: int, a: int) -> dict[int, list[tuple[int, int]]]:
    """For each admissible p, the list of unordered index splits (i, a-i)
    appearing in the zero-dimensional window bound; empty when the
    hypotheses fail for every p."""
    out: dict[int, list[tuple[int, int]]] = {}
    if m > 2 * n - 6 or 2 * a < m + 4 or a > n:
        return out
    for p in range(m - a + 2, a - 1):
        lo, hi = p - (m - a), min(p, a // 2)
        splits = sorted(
            {tuple(sorted((i, a - i))) for i in range(max(lo, 1), hi + 1) if a - i >= 1}
        )
        if splits:
            out[p] = splits
    return out


def derive_symbolic_bounds(n: int, m: int, a: int) -> list[SymbolicBound]:
    """Close the known inequalities into fully expanded sum bounds on t_a.

    The consecutive rewrite t_b <= t_{b-1} + t_1 always yields
    t_a <= t_1 + t_{a-1}.  Whenever the zero-dimensional window hypotheses
    hold for some p, every multiset that dominates an expansion of each
    window split is a valid bound; the minimal (non-dominated) ones are
    kept.  All reported term indices are strictly below a.
    """
    if a < 2:
        raise ValueError("need a >= 2 for a nontrivial bound")
    bounds: set[tuple[int, ...]] = {tuple(sorted((1, a - 1)))}
    for splits in general_windows(n, m, a).values():
        expansion_sets = [sorted(_expansions(s)) for s in splits]
        candidates = set()
        for choice in product(*expansion_sets):
            candidates.add(_max_union(choice))
        # keep each window's own minimal consequences; a sharper bound from a
        # narrower window does not erase the wider window's weaker one
        kept = {
            cand
            for cand in candidates
            if not any(other != cand and _contains(cand, other) for other in candidates)
        }
        for cand in sorted(kept):
            dominated = any(
                other != cand
                and _symbolic_le(other, cand)
                and not _symbolic_le(cand, other)
                for other in kept
            )
            if not dominated:
                bounds.add(cand)
    return [SymbolicBound(a, b) for b in sorted(bounds)]

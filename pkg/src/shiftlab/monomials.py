"""Exponent-vector arithmetic and monomial ideals.

A multidegree is a plain tuple of non-negative ints, one slot per ring
variable in declaration order.  Everything here is exact integer work:
divisibility is componentwise <=, the lcm of monomials is the
componentwise max of their exponent vectors.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Multidegree = tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_FACTOR_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^(.+))?$")


class IdealSyntaxError(ValueError):
    """Raised for malformed monomial text or ideal files."""


@dataclass(frozen=True)
class Ring:
    """An ordered list of variable names; fixes the slot order of all vectors."""

    names: tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("ring needs at least one variable")
        seen = set()
        for name in names:
            if not _NAME_RE.match(name):
                raise ValueError(f"bad variable name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name {name!r}")
            seen.add(name)
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.names)

    def zero(self) -> Multidegree:
        return (0,) * len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def __repr__(self):
        return f"Ring({' '.join(self.names)})"


def parse_monomial(text: str, ring: Ring) -> Multidegree:
    """Parse ``x^2*w^2*v^2``-style text into an exponent vector.

    Factors are ``var`` or ``var^k`` with k >= 1, joined by ``*``; the bare
    string ``1`` is the trivial monomial.  Repeated variables accumulate.
    """
    text = text.strip()
    if not text:
        raise IdealSyntaxError("empty monomial")
    if text == "1":
        return ring.zero()
    exps = [0] * ring.n
    for factor in text.split("*"):
        factor = factor.strip()
        if not factor:
            raise IdealSyntaxError(f"empty factor in {text!r}")
        m = _FACTOR_RE.match(factor)
        if not m:
            raise IdealSyntaxError(f"malformed factor {factor!r}")
        name, exp_text = m.group(1), m.group(2)
        if name not in ring.names:
            raise IdealSyntaxError(f"unknown variable {name!r}")
        if exp_text is None:
            k = 1
        else:
            try:
                k = int(exp_text)
            except ValueError:
                raise IdealSyntaxError(
                    f"non-integer exponent {exp_text!r} in {factor!r}"
                ) from None
            if k < 1:
                raise IdealSyntaxError(f"exponent must be >= 1 in {factor!r}")
        exps[ring.index(name)] += k
    return tuple(exps)


def format_monomial(mdeg: Multidegree, ring: Ring) -> str:
    """Inverse of parse_monomial; the zero vector prints as ``1``."""
    if len(mdeg) != ring.n:
        raise ValueError("multidegree length does not match ring")
    parts = []
    for name, e in zip(ring.names, mdeg):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def divides(a: Multidegree, b: Multidegree) -> bool:
    """x^a divides x^b, i.e. a <= b componentwise."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def join(a: Multidegree, b: Multidegree) -> Multidegree:
    """Componentwise max; the exponent vector of lcm(x^a, x^b)."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return tuple(x if x >= y else y for x, y in zip(a, b))


def total_degree(a: Multidegree) -> int:
    return sum(a)


def support(a: Multidegree) -> tuple[int, ...]:
    """Indices of the variables that occur in the monomial."""
    return tuple(i for i, e in enumerate(a) if e)


def minimalize_generators(gens: Iterable[Multidegree]) -> list[Multidegree]:
    """Keep only the <=-minimal vectors, deduplicated, in first-seen order."""
    gens = list(dict.fromkeys(tuple(g) for g in gens))
    out = []
    for g in gens:
        if any(h != g and divides(h, g) for h in gens):
            continue
        out.append(g)
    return out


class MonomialIdeal:
    """A monomial ideal, stored as its minimal generating exponent vectors.

    Construction validates and minimalizes the generators (first-seen input
    order of the survivors is kept, since downstream face indices and signs
    are tied to generator order).  The unit ideal is rejected; the zero
    ideal (no generators) is fine.  Instances are immutable.
    """

    __slots__ = ("ring", "gens")

    def __init__(self, ring: Ring, gens: Iterable[Sequence[int]]):
        vecs = []
        for g in gens:
            v = tuple(g)
            if len(v) != ring.n:
                raise ValueError(f"generator {v} has wrong length for {ring}")
            if any(not isinstance(e, int) or e < 0 for e in v):
                raise ValueError(f"generator {v} has a bad exponent")
            if not any(v):
                raise ValueError("unit ideal rejected (generator 1)")
            vecs.append(v)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(minimalize_generators(vecs)))

    def __setattr__(self, *args):
        raise AttributeError("MonomialIdeal is immutable")

    @property
    def m(self) -> int:
        return len(self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and set(self.gens) == set(other.gens)
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.gens)))

    def __repr__(self):
        if self.is_zero:
            return f"MonomialIdeal(0) in {self.ring}"
        gens = ", ".join(format_monomial(g, self.ring) for g in self.gens)
        return f"MonomialIdeal({gens})"


def restrict_ideal(I: MonomialIdeal, alpha: Multidegree) -> MonomialIdeal:
    """The subideal generated by every monomial of I whose exponent vector
    is <= alpha; equals the span of the generators below alpha, since any
    monomial of I below alpha is divisible by such a generator."""
    if len(alpha) != I.ring.n:
        raise ValueError("alpha length does not match ring")
    return MonomialIdeal(I.ring, [g for g in I.gens if divides(g, alpha)])


def is_covering_pair(I: MonomialIdeal, alpha: Multidegree, beta: Multidegree) -> bool:
    """True iff I equals the sum of its restrictions below alpha and beta,
    i.e. every minimal generator is <= alpha or <= beta."""
    if len(alpha) != I.ring.n or len(beta) != I.ring.n:
        raise ValueError("vector length does not match ring")
    return all(divides(g, alpha) or divides(g, beta) for g in I.gens)


def height(I: MonomialIdeal) -> int:
    """Codimension of I: the minimum number of variables meeting the support
    of every minimal generator (minimum vertex cover of the support
    hypergraph; the minimal primes of a monomial ideal are variable-generated).

    Exhaustive branch-and-bound; fine at desk scale (m, n <= 20).
    """
    if I.is_zero:
        raise ValueError("height of the zero ideal is undefined")
    supports = sorted(
        {frozenset(support(g)) for g in I.gens}, key=lambda s: (len(s), sorted(s))
    )
    # dropping supersets is safe: hitting a subset hits the superset too
    supports = [
        s for s in supports if not any(t < s for t in supports)
    ]
    best = I.ring.n

    def descend(chosen: set, todo: list):
        nonlocal best
        todo = [s for s in todo if not s & chosen]
        if not todo:
            best = min(best, len(chosen))
            return
        if len(chosen) + 1 >= best:
            return
        for v in sorted(todo[0]):
            descend(chosen | {v}, todo[1:])

    descend(set(), supports)
    return best


def contains_all_pure_powers(I: MonomialIdeal) -> bool:
    """True iff every variable has a pure-power generator (dim S/I = 0)."""
    singly = {support(g)[0] for g in I.gens if len(support(g)) == 1}
    return len(singly) == I.ring.n


def pure_power_exponents(I: MonomialIdeal) -> dict[int, int]:
    """Map variable index -> exponent of its pure-power generator, where one exists."""
    out = {}
    for g in I.gens:
        s = support(g)
        if len(s) == 1:
            out[s[0]] = g[s[0]]
    return out


# ---------------------------------------------------------------------------
# ideal files: a tiny text format and a JSON equivalent


def parse_ideal_text(text: str) -> MonomialIdeal:
    """Parse the ideal text format::

        # comment
        vars: x y z u v w a
        x^2*w^2*v^2
        x^5

    Line 1 (ignoring comments/blanks) declares the variables; every further
    non-comment line is one monomial in parse_monomial syntax.
    """
    ring = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ring is None:
            if not line.startswith("vars:"):
                raise IdealSyntaxError(f"line {lineno}: expected 'vars:' header")
            ring = Ring(line[len("vars:"):].split())
            continue
        try:
            gens.append(parse_monomial(line, ring))
        except IdealSyntaxError as exc:
            raise IdealSyntaxError(f"line {lineno}: {exc}") from None
    if ring is None:
        raise IdealSyntaxError("missing 'vars:' header")
    return MonomialIdeal(ring, gens)


def format_ideal_text(I: MonomialIdeal) -> str:
    lines = ["vars: " + " ".join(I.ring.names)]
    lines += [format_monomial(g, I.ring) for g in I.gens]
    return "\n".join(lines) + "\n"


def ideal_from_json(obj: dict) -> MonomialIdeal:
    """Build an ideal from ``{"vars": [...], "gens": [[exponents], ...]}``."""
    try:
        ring = Ring(obj["vars"])
        gens = [tuple(int(e) for e in g) for g in obj["gens"]]
    except (KeyError, TypeError) as exc:
        raise IdealSyntaxError(f"bad ideal JSON: {exc}") from None
    return MonomialIdeal(ring, gens)


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"vars": list(I.ring.names), "gens": [list(g) for g in I.gens]}


def loads_ideal(text: str) -> MonomialIdeal:
    """Parse either format: JSON if the text starts with ``{``, else text."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise IdealSyntaxError(f"bad JSON: {exc}") from None
        return ideal_from_json(obj)
    return parse_ideal_text(text)


def load_ideal(path) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return loads_ideal(fh.read())


def brute_force_height(I: MonomialIdeal) -> int:
    """Independent oracle: try every variable subset by increasing size."""
    if I.is_zero:
        raise ValueError("height of the zero ideal is undefined")
    sups = [set(support(g)) for g in I.gens]
    for k in range(1, I.ring.n + 1):
        for sub in combinations(range(I.ring.n), k):
            cover = set(sub)
            if all(cover & s for s in sups):
                return k
    raise AssertionError("unreachable: full variable set always covers")

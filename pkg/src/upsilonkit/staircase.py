"""Torus-knot staircases via the numerical semigroup of (p,q).

For coprime p < q let S = {ap + bq : a, b >= 0}.  Writing S as maximal runs
of consecutive integers

    S = {s_1..e_1} u {s_2..e_2} u ... u {s_n..e_n} u {s_{n+1}, s_{n+1}+1, ...}

(the tail starts at the conductor (p-1)(q-1), from which every integer is in
S) determines both the Alexander polynomial of the (p,q) torus knot and the
staircase shape of its knot Floer complex: the polynomial is

    Delta(t) = sum_i (t^{s_i} - t^{e_i + 1}) + t^{s_{n+1}}

with e_i taken inclusive, and the staircase steps are

    [e_1-s_1+1, s_2-e_1-1, e_2-s_2+1, ..., e_n-s_n+1, s_{n+1}-e_n-1].

White dots (grading 0) sit at the run starts: relative to the first dot the
i-th white is at (alpha(i), alpha(i) - s_i) where alpha(i) = |S ∩ [0, s_i)|,
and absolute coordinates shift the Alexander level so the lowest white sits
at 0 (the topmost one then sits at the genus (p-1)(q-1)/2).

T(1,n) and T(n,1) are accepted and treated as the unknot so that recursive
identities over torus-knot families terminate uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .plfun import PLFunction, pl_lower_envelope, pl_scale


class LaurentPoly:
    """Integer Laurent polynomial, stored sparsely as exponent -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coef: int = 1) -> "LaurentPoly":
        return cls({exp: coef})

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def sorted_terms(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if e != 0 and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" if e == 0 else f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"terms": [{"exp": e, "coef": c} for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, d: dict) -> "LaurentPoly":
        return cls({t["exp"]: t["coef"] for t in d["terms"]})


def poly_divexact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient num / den; raises if the division leaves a remainder."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    rem = LaurentPoly(dict(num.terms))
    lead_e = den.max_exp()
    lead_c = den.terms[lead_e]
    quot: dict[int, int] = {}
    while not rem.is_zero():
        e = rem.max_exp()
        c = rem.terms[e]
        if e < lead_e or c % lead_c != 0:
            raise ArithmeticError("polynomial division is not exact")
        qe, qc = e - lead_e, c // lead_c
        quot[qe] = qc
        rem = rem - den * LaurentPoly.monomial(qe, qc)
    return LaurentPoly(quot)


@dataclass(frozen=True)
class SemigroupRuns:
    """Run decomposition of a numerical semigroup up to its conductor.

    runs are inclusive (start, end) pairs with gaps of length >= 1 between
    them; every integer >= tail_start belongs to the semigroup.
    """

    runs: tuple[tuple[int, int], ...]
    tail_start: int

    def contains(self, n: int) -> bool:
        if n >= self.tail_start:
            return True
        return any(s <= n <= e for s, e in self.runs)

    def elements_upto(self, bound: int) -> list[int]:
        out = [n for s, e in self.runs for n in range(s, e + 1) if n <= bound]
        out.extend(range(self.tail_start, bound + 1))
        return out


def _check_params(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise ValueError(f"torus parameters must be positive, got ({p},{q})")
    if p >= q:
        raise ValueError(f"torus parameters must satisfy p < q, got ({p},{q})")
    if gcd(p, q) != 1:
        raise ValueError(f"torus parameters must be coprime, got ({p},{q})")


def _is_unknot(p: int, q: int) -> bool:
    return p == 1 or q == 1


def semigroup_runs(p: int, q: int) -> SemigroupRuns:
    """Runs of S = {ap+bq : a,b >= 0} up to the conductor (p-1)(q-1)."""
    if _is_unknot(p, q):
        if not (p == 1 or q == 1) or gcd(p, q) != 1:
            raise ValueError(f"invalid torus parameters ({p},{q})")
        return SemigroupRuns((), 0)
    _check_params(p, q)
    conductor = (p - 1) * (q - 1)
    member = [False] * (conductor + 1)
    member[0] = True
    for v in range(1, conductor + 1):
        member[v] = (v >= p and member[v - p]) or (v >= q and member[v - q])
    runs: list[tuple[int, int]] = []
    v = 0
    while v < conductor:
        if member[v]:
            start = v
            while v + 1 < conductor and member[v + 1]:
                v += 1
            runs.append((start, v))
        v += 1
    return SemigroupRuns(tuple(runs), conductor)


def alexander_torus(p: int, q: int) -> LaurentPoly:
    """Alexander polynomial of T(p,q) from the semigroup runs.

    Each run contributes t^{s_i} - t^{e_i + 1} (ends inclusive) and the tail
    contributes its leading term t^{(p-1)(q-1)}.
    """
    rs = semigroup_runs(p, q)
    terms: dict[int, int] = {}
    for s, e in rs.runs:
        terms[s] = terms.get(s, 0) + 1
        terms[e + 1] = terms.get(e + 1, 0) - 1
    terms[rs.tail_start] = terms.get(rs.tail_start, 0) + 1
    return LaurentPoly(terms)


def alexander_oracle(p: int, q: int) -> LaurentPoly:
    """Alexander polynomial of T(p,q) as the classical rational-function
    quotient (1-t^{pq})(1-t) / ((1-t^p)(1-t^q)), computed by exact division."""
    if _is_unknot(p, q):
        return LaurentPoly.one()
    _check_params(p, q)

    def one_minus(n: int) -> LaurentPoly:
        return LaurentPoly({0: 1, n: -1})

    num = one_minus(p * q) * one_minus(1)
    return poly_divexact(poly_divexact(num, one_minus(p)), one_minus(q))


def staircase_steps(p: int, q: int) -> list[int]:
    """Alternating horizontal/vertical step lengths of the staircase."""
    rs = semigroup_runs(p, q)
    steps: list[int] = []
    starts = [s for s, _ in rs.runs] + [rs.tail_start]
    for i, (s, e) in enumerate(rs.runs):
        steps.append(e - s + 1)
        steps.append(starts[i + 1] - e - 1)
    return steps


@dataclass(frozen=True)
class Staircase:
    """Staircase data of an L-space knot in absolute coordinates.

    whites are the grading-0 lattice points, blacks the grading-1 points
    between consecutive whites; the walk goes right by a step then down by a
    step.  Normalization: min algebraic coordinate over whites is 0 and min
    Alexander coordinate over whites is 0, so the first white sits at
    (0, genus).
    """

    steps: tuple[int, ...]
    whites: tuple[tuple[int, int], ...]
    blacks: tuple[tuple[int, int], ...]
    genus: int


def build_staircase(p: int, q: int) -> Staircase:
    """Staircase of T(p,q); the unknot gives a single white at the origin."""
    if _is_unknot(p, q):
        if gcd(p, q) != 1:
            raise ValueError(f"invalid torus parameters ({p},{q})")
        return Staircase((), ((0, 0),), (), 0)
    rs = semigroup_runs(p, q)
    genus = (p - 1) * (q - 1) // 2
    starts = [s for s, _ in rs.runs] + [rs.tail_start]
    alpha = [0]
    for s, e in rs.runs:
        alpha.append(alpha[-1] + (e - s + 1))
    whites = tuple(
        (alpha[i], alpha[i] - starts[i] + genus) for i in range(len(starts))
    )
    blacks = tuple(
        (alpha[i + 1], alpha[i] - starts[i] + genus) for i in range(len(rs.runs))
    )
    return Staircase(tuple(staircase_steps(p, q)), whites, blacks, genus)


def upsilon_staircase(p: int, q: int) -> PLFunction:
    """Upsilon of T(p,q) by the staircase fast path.

    On a staircase every single white dot is a cycle generating H_0, so the
    minimal filtration level gamma(t) is the lower envelope over whites of
    t -> (t/2)*alex + (1-t/2)*alg, and upsilon is -2 times that envelope.
    """
    st = build_staircase(p, q)
    lines = [(Fraction(alex - alg, 2), Fraction(alg)) for alg, alex in st.whites]
    return pl_scale(pl_lower_envelope(lines), -2)

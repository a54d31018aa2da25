"""Bifiltered graded chain complexes over F2[U, U^-1].

A complex is a finite family of generators, each carrying a Maslov grading
and an integer (algebraic, Alexander) bifiltration, together with an
F2[U,U^-1]-linear differential.  A differential entry (x -> y, n) means that
U^n * y appears in dx; the differential must drop the Maslov grading by 1
and respect both filtrations, U itself dropping the grading by 2 and both
filtration levels by 1.

The whole module treats complexes as immutable values.  Connected sum of
knots is tensor product of complexes, the mirror is the dual, and a grading
slice extracts the finite GF(2) picture of a fixed Maslov grading (one
U-translate per generator of matching parity) on which all the homology
computations run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .f2 import F2Matrix

Entry = tuple[int, int]  # (source index, target index)


@dataclass(frozen=True)
class Generator:
    name: str
    maslov: int
    alg: int
    alex: int


class BifilteredComplex:
    """Immutable bifiltered complex; equality is by identity.

    differential maps (source, target) generator index pairs to the set of
    U-exponents with coefficient 1.  In every complex this artifact builds
    the exponent is 0, but the data model allows arbitrary exponents.
    """

    def __init__(self, generators: Sequence[Generator],
                 differential: Mapping[Entry, Iterable[int]]):
        self.generators: tuple[Generator, ...] = tuple(generators)
        n = len(self.generators)
        diff: dict[Entry, frozenset[int]] = {}
        for (i, j), exps in differential.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"differential entry ({i},{j}) out of range")
            exps = frozenset(exps)
            if exps:
                diff[(i, j)] = exps
        self.differential: dict[Entry, frozenset[int]] = diff

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return (f"BifilteredComplex({len(self.generators)} generators, "
                f"{len(self.differential)} differential entries)")


def unknot_complex() -> BifilteredComplex:
    return BifilteredComplex([Generator("u", 0, 0, 0)], {})


def from_staircase(st) -> BifilteredComplex:
    """Complex of a staircase: whites at Maslov 0, blacks at Maslov 1, and
    each black maps to its two adjacent whites with U-exponent 0."""
    gens = [Generator(f"w{i}", 0, a, b) for i, (a, b) in enumerate(st.whites)]
    nw = len(st.whites)
    diff: dict[Entry, set[int]] = {}
    for i, (a, b) in enumerate(st.blacks):
        gens.append(Generator(f"b{i}", 1, a, b))
        diff[(nw + i, i)] = {0}
        diff[(nw + i, i + 1)] = {0}
    return BifilteredComplex(gens, diff)


def tensor(a: BifilteredComplex, b: BifilteredComplex) -> BifilteredComplex:
    """Tensor product over F2[U,U^-1]; gradings and filtrations add and
    d(x@y) = dx@y + x@dy with U-exponents carried through."""
    nb = len(b)
    gens = [
        Generator(f"{ga.name}|{gb.name}", ga.maslov + gb.maslov,
                  ga.alg + gb.alg, ga.alex + gb.alex)
        for ga in a.generators for gb in b.generators
    ]
    diff: dict[Entry, set[int]] = {}
    for (i, j), exps in a.differential.items():
        for k in range(nb):
            diff.setdefault((i * nb + k, j * nb + k), set()).update(exps)
    for (i, j), exps in b.differential.items():
        for k in range(len(a)):
            diff.setdefault((k * nb + i, k * nb + j), set()).update(exps)
    return BifilteredComplex(gens, diff)


def dual(a: BifilteredComplex) -> BifilteredComplex:
    """Dual complex (the mirror knot): gradings and filtrations negate and
    every arrow reverses.

    Reversing the entry (x -> U^n y) gives (y -> U^n x): in the diagram
    picture the dual is the 180-degree rotation of the plane with arrows
    reversed, and rotating the translate U^k x to U^{-k} x* carries the
    arrow U^k x -> U^{n+k} y onto U^{-n-k} y* -> U^{-k} x* = U^n (U^{-n-k} x*),
    so the exponent survives unchanged.
    """
    gens = [Generator(f"{g.name}*", -g.maslov, -g.alg, -g.alex)
            for g in a.generators]
    diff = {(j, i): exps for (i, j), exps in a.differential.items()}
    return BifilteredComplex(gens, diff)


def shift_filtration(c: BifilteredComplex, da: int, db: int) -> BifilteredComplex:
    """Shift every (alg, alex) by (da, db); the differential is unchanged."""
    gens = [Generator(g.name, g.maslov, g.alg + da, g.alex + db)
            for g in c.generators]
    return BifilteredComplex(gens, c.differential)


@dataclass(frozen=True)
class SliceElement:
    """Basis element U^n * generator of a fixed-grading slice."""
    gen_index: int
    u_exp: int
    alg: int
    alex: int


@dataclass(frozen=True)
class GradingSlice:
    """Finite GF(2) model of one Maslov grading of the full complex.

    basis lists U^{(maslov - m)/2} x for every generator x whose grading has
    the parity of m, with the induced bifiltration.  boundary_out maps this
    slice to grading m-1 (rows indexed by the target slice basis) and
    boundary_in comes from grading m+1.
    """

    grading: int
    basis: tuple[SliceElement, ...]
    boundary_in: F2Matrix
    boundary_out: F2Matrix


def _slice_basis(c: BifilteredComplex, m: int) -> tuple[SliceElement, ...]:
    out = []
    for i, g in enumerate(c.generators):
        if (g.maslov - m) % 2 == 0:
            n = (g.maslov - m) // 2
            out.append(SliceElement(i, n, g.alg - n, g.alex - n))
    return tuple(out)


def _boundary_matrix(c: BifilteredComplex,
                     src: tuple[SliceElement, ...],
                     dst: tuple[SliceElement, ...]) -> F2Matrix:
    """Rows over dst, columns over src; entry 1 iff d(src_j) hits dst_i."""
    dst_pos = {e.gen_index: k for k, e in enumerate(dst)}
    dst_exp = {e.gen_index: e.u_exp for e in dst}
    by_source: dict[int, list[tuple[int, frozenset[int]]]] = {}
    for (i, j), exps in c.differential.items():
        by_source.setdefault(i, []).append((j, exps))
    rows = [0] * len(dst)
    for j, e in enumerate(src):
        for tgt, exps in by_source.get(e.gen_index, ()):
            if tgt not in dst_pos:
                continue
            # U^{e.u_exp} x maps to U^{e.u_exp + n} tgt; it lands on the dst
            # translate exactly when the exponents line up (odd multiplicity
            # over F2).
            hits = sum(1 for n in exps if e.u_exp + n == dst_exp[tgt])
            if hits % 2:
                rows[dst_pos[tgt]] ^= 1 << j
    return F2Matrix(rows, len(src))


def grading_slice(c: BifilteredComplex, m: int) -> GradingSlice:
    basis = _slice_basis(c, m)
    above = _slice_basis(c, m + 1)
    below = _slice_basis(c, m - 1)
    return GradingSlice(
        grading=m,
        basis=basis,
        boundary_in=_boundary_matrix(c, above, basis),
        boundary_out=_boundary_matrix(c, basis, below),
    )


def euler_characteristic(c: BifilteredComplex) -> int:
    return sum(1 if g.maslov % 2 == 0 else -1 for g in c.generators)


def validate(c: BifilteredComplex) -> list[str]:
    """Check the structural axioms; returns a list of violations (empty iff
    the complex is a valid knot complex).

    Checked: grading compatibility of every differential entry, filtration
    compatibility, d^2 = 0 over F2[U,U^-1], and that the homology is a single
    copy of F2[U,U^-1] with its generator in grading 0 (grading-0 slice
    homology has rank 1, grading-1 slice homology has rank 0; all other
    gradings are U-translates of these two).
    """
    violations: list[str] = []
    gens = c.generators
    for (i, j), exps in c.differential.items():
        gi, gj = gens[i], gens[j]
        for n in exps:
            if gj.maslov - 2 * n != gi.maslov - 1:
                violations.append(
                    f"grading: entry {gi.name}->U^{n}.{gj.name} does not drop "
                    f"the Maslov grading by 1")
            if gj.alg - n > gi.alg or gj.alex - n > gi.alex:
                violations.append(
                    f"filtration: entry {gi.name}->U^{n}.{gj.name} increases "
                    f"a filtration level")

    # d^2 = 0: compose entries and count U-exponent multiplicities mod 2.
    outgoing: dict[int, list[tuple[int, frozenset[int]]]] = {}
    for (i, j), exps in c.differential.items():
        outgoing.setdefault(i, []).append((j, exps))
    for i in outgoing:
        acc: dict[tuple[int, int], int] = {}
        for j, exps1 in outgoing[i]:
            for k, exps2 in outgoing.get(j, []):
                for n1 in exps1:
                    for n2 in exps2:
                        key = (k, n1 + n2)
                        acc[key] = acc.get(key, 0) + 1
        for (k, n), count in acc.items():
            if count % 2:
                violations.append(
                    f"d^2: component U^{n}.{gens[k].name} of d^2({gens[i].name}) "
                    f"is nonzero")

    if violations:
        return violations

    # Homology: rank bookkeeping on the two parity slices.  Slices two
    # gradings apart carry identical boundary matrices (a uniform U-shift),
    # so rank(out of grading 2) = rank(out of grading 0) etc.
    basis0 = _slice_basis(c, 0)
    basis1 = _slice_basis(c, 1)
    basism1 = _slice_basis(c, -1)
    d0 = _boundary_matrix(c, basis0, basism1)
    d1 = _boundary_matrix(c, basis1, basis0)
    r0 = d0.rank()
    r1 = d1.rank()
    h0 = len(basis0) - r0 - r1
    h1 = len(basis1) - r1 - r0
    if h0 != 1:
        violations.append(f"homology: grading-0 homology has rank {h0}, expected 1")
    if h1 != 0:
        violations.append(f"homology: grading-1 homology has rank {h1}, expected 0")
    return violations


def complex_to_json(c: BifilteredComplex) -> dict:
    return {
        "generators": [
            {"name": g.name, "maslov": g.maslov, "alg": g.alg, "alex": g.alex}
            for g in c.generators
        ],
        "differential": [
            {"source": i, "target": j, "exponents": sorted(exps)}
            for (i, j), exps in sorted(c.differential.items())
        ],
    }


def complex_from_json(d: dict) -> BifilteredComplex:
    gens = [Generator(g["name"], g["maslov"], g["alg"], g["alex"])
            for g in d["generators"]]
    diff = {(e["source"], e["target"]): set(e["exponents"])
            for e in d["differential"]}
    return BifilteredComplex(gens, diff)

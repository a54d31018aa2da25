"""The invariant engine: gamma, upsilon, pivot points and the secondary
invariant, computed exactly on arbitrary valid bifiltered complexes.

For a parameter t in [0,2] the filtration functional

    f_t(alg, alex) = (t/2)*alex + (1 - t/2)*alg

cuts the grading-0 slice of the complex into sublevel subcomplexes, and
gamma(t) is the least level s at which the sublevel set contains a cycle
that survives to the generator of the homology of the full complex; upsilon
is -2*gamma.  All minimisations are exact finite scans: a sublevel set only
changes when s crosses f_t of a slice basis element, and gamma's breakpoints
in t only occur at the finitely many parameters where two distinct grading-0
bifiltration levels take the same f_t value (the collinearity candidates).

The secondary invariant at a jump parameter t measures how far the support
line must retreat, along a second direction s, before the cycles coming from
just below t and just above t become homologous:

    gamma2_{t}(s) = min { r : some z+ and z- represent the same class in
                          H_0( C^t_{gamma(t)} + C^s_r ) }

with z+/z- ranging over the affine spaces of minimal-level representative
cycles on either side of t.  The scan over r is monotone (growing r only
adds grading-1 elements), so the minimum is found by one incremental
Gaussian elimination over the grading-1 thresholds.
"""

from __future__ import annotations

import weakref
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import cfk
from .cfk import BifilteredComplex, tensor, validate
from .f2 import F2AffineSpace, affine_intersects, reduce_vector, span_basis
from .plfun import (NEG_INF, POS_INF, ExtRational, PLFunction, pl_from_samples,
                    _frac)


class InvalidComplexError(ValueError):
    """Raised when an invariant is requested of a structurally bad complex."""

    def __init__(self, violations: list[str]):
        super().__init__("invalid complex: " + "; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class PivotPair:
    """Unique on-line bifiltration levels just below / above a parameter t."""
    negative: tuple[int, int]
    positive: tuple[int, int]
    delta: Fraction


@dataclass(frozen=True)
class JumpReport:
    t: Fraction
    is_jump: bool
    upsilon2: ExtRational


@dataclass(frozen=True)
class _GammaResult:
    value: Fraction
    witness: int                      # essential cycle over the slice-0 basis
    contact_levels: tuple[tuple[int, int], ...]


class _Engine:
    """Per-complex caches for the invariant computations.

    Holds the grading-0/1 slice data as bitset columns, a reduced basis of
    the grading-0 boundary space, and a linear functional phi vanishing on
    boundaries but not on the essential class, so that "is this cycle
    homologically essential" is a single popcount.
    """

    def __init__(self, c: BifilteredComplex):
        violations = validate(c)
        if violations:
            raise InvalidComplexError(violations)
        basis0 = cfk._slice_basis(c, 0)
        basis1 = cfk._slice_basis(c, 1)
        basism1 = cfk._slice_basis(c, -1)
        self.dim0 = len(basis0)
        self.dim1 = len(basis1)
        self.lev0 = [(e.alg, e.alex) for e in basis0]
        self.lev1 = [(e.alg, e.alex) for e in basis1]
        self.d0cols = cfk._boundary_matrix(c, basis0, basism1).transpose().rows
        self.d1cols = cfk._boundary_matrix(c, basis1, basis0).transpose().rows
        self.bspan = span_basis(self.d1cols)
        self.phi = self._essential_functional()
        self.candidates = self._candidate_parameters()
        self._gamma_cache: dict[Fraction, _GammaResult] = {}
        self._cycle_cache: dict[Fraction, tuple[F2AffineSpace, int]] = {}

    # -- construction helpers -------------------------------------------

    def _essential_functional(self) -> int:
        """A functional phi with phi(boundary) = 0 and phi(z*) = 1 for one
        (hence every) grading-0 cycle generating the homology."""
        zstar = None
        reducer: dict[int, tuple[int, int]] = {}
        for j, col in enumerate(self.d0cols):
            v, combo = col, 1 << j
            while v:
                p = v.bit_length() - 1
                if p in reducer:
                    rv, rc = reducer[p]
                    v ^= rv
                    combo ^= rc
                else:
                    reducer[p] = (v, combo)
                    break
            if v == 0 and reduce_vector(combo, self.bspan):
                zstar = combo
                break
        if zstar is None:
            raise InvalidComplexError(["homology: no essential grading-0 cycle"])
        # Solve <b, phi> = 0 for the boundary basis, <z*, phi> = 1.
        piv: dict[int, tuple[int, int]] = {}
        rows = [(b, 0) for b in self.bspan.values()] + [(zstar, 1)]
        for v, s in rows:
            while v:
                p = v.bit_length() - 1
                if p in piv:
                    pv, ps = piv[p]
                    v ^= pv
                    s ^= ps
                else:
                    piv[p] = (v, s)
                    break
            if v == 0 and s:
                raise AssertionError("essential functional system inconsistent")
        phi = 0
        for p in sorted(piv):
            v, s = piv[p]
            if s ^ ((v & phi).bit_count() & 1):
                phi |= 1 << p
        return phi

    def _candidate_parameters(self) -> tuple[Fraction, ...]:
        """All t in (0,2) where two distinct grading-0 levels agree under f_t.

        f_t(P) = f_t(Q) is linear in t, so each unordered pair of distinct
        levels contributes at most one parameter.
        """
        pts = sorted(set(self.lev0))
        out: set[Fraction] = set()
        for i, (a1, x1) in enumerate(pts):
            for a2, x2 in pts[i + 1:]:
                da, dx = a1 - a2, x1 - x2
                if da == dx:
                    continue
                t = Fraction(2 * da, da - dx)
                if 0 < t < 2:
                    out.add(t)
        return tuple(sorted(out))

    # -- scans ------------------------------------------------------------

    def _keys0(self, t: Fraction) -> tuple[list[int], int]:
        """Integer keys proportional to f_t on the grading-0 levels.

        For t = u/v, f_t(a, A) = (u*A + (2v-u)*a) / (2v); the scale 2v is
        returned so callers can recover exact values.
        """
        u, v = t.numerator, t.denominator
        wa = 2 * v - u
        return [u * A + wa * a for a, A in self.lev0], 2 * v

    def _keys1(self, t: Fraction) -> tuple[list[int], int]:
        u, v = t.numerator, t.denominator
        wa = 2 * v - u
        return [u * A + wa * a for a, A in self.lev1], 2 * v

    def gamma(self, t: Fraction) -> _GammaResult:
        """Minimal f_t level of an essential grading-0 cycle.

        Processes slice elements in increasing f_t order while column-reducing
        the grading-0 boundary map; every dependent column yields a cycle
        supported in the current sublevel set, and phi tells in O(1) whether
        it is essential.  The first essential cycle fixes gamma(t).
        """
        cached = self._gamma_cache.get(t)
        if cached is not None:
            return cached
        keys, scale = self._keys0(t)
        order = sorted(range(self.dim0), key=keys.__getitem__)
        reducer: dict[int, tuple[int, int]] = {}
        phi = self.phi
        result = None
        for i in order:
            v, combo = self.d0cols[i], 1 << i
            while v:
                p = v.bit_length() - 1
                if p in reducer:
                    rv, rc = reducer[p]
                    v ^= rv
                    combo ^= rc
                else:
                    reducer[p] = (v, combo)
                    break
            if v == 0 and ((combo & phi).bit_count() & 1):
                key = keys[i]
                contacts = tuple(sorted(
                    {self.lev0[j] for j in range(self.dim0) if keys[j] == key}))
                result = _GammaResult(Fraction(key, scale), combo, contacts)
                break
        if result is None:
            raise AssertionError("no essential cycle found; complex invalid")
        self._gamma_cache[t] = result
        return result

    def neighbours(self, t: Fraction) -> tuple[Fraction, Fraction]:
        """Nearest candidate parameters strictly left/right of t (or 0/2)."""
        lo = bisect_left(self.candidates, t)
        left = self.candidates[lo - 1] if lo > 0 else Fraction(0)
        hi = bisect_right(self.candidates, t)
        right = (self.candidates[hi] if hi < len(self.candidates)
                 else Fraction(2))
        return left, right

    def delta_at(self, t: Fraction) -> Fraction:
        left, right = self.neighbours(t)
        return min(t - left, right - t) / 2

    def is_candidate(self, t: Fraction) -> bool:
        i = bisect_left(self.candidates, t)
        return i < len(self.candidates) and self.candidates[i] == t

    def cycle_space(self, tside: Fraction) -> tuple[F2AffineSpace, int]:
        """Affine space of essential cycles in the f_{tside} sublevel set at
        gamma(tside), plus the sublevel bitmask.

        The space is one witness plus the boundary space of the full complex
        intersected with the sublevel coordinate subspace; the intersection
        is the image of the kernel of "project a boundary combination onto
        the outside coordinates".
        """
        cached = self._cycle_cache.get(tside)
        if cached is not None:
            return cached
        res = self.gamma(tside)
        keys, scale = self._keys0(tside)
        threshold = res.value * scale
        sub = 0
        for i, k in enumerate(keys):
            if k <= threshold:
                sub |= 1 << i
        assert res.witness & ~sub == 0
        outside = ~sub
        reducer: dict[int, tuple[int, int]] = {}
        dirs: list[int] = []
        for col in self.d1cols:
            if col == 0:
                continue
            v = col
            o = v & outside
            while o:
                p = o.bit_length() - 1
                if p in reducer:
                    rv, _ = reducer[p]
                    v ^= rv
                    o = v & outside
                else:
                    reducer[p] = (v, o)
                    break
            if o == 0 and v:
                dirs.append(v)
        space = F2AffineSpace(res.witness, dirs, self.dim0)
        self._cycle_cache[tside] = (space, sub)
        return space, sub

    def pivot_sides(self, t: Fraction) -> tuple[Fraction, Fraction]:
        d = self.delta_at(t)
        return t - d, t + d


_engines: "weakref.WeakKeyDictionary[BifilteredComplex, _Engine]" = (
    weakref.WeakKeyDictionary())


def _engine(c: BifilteredComplex) -> _Engine:
    eng = _engines.get(c)
    if eng is None:
        eng = _Engine(c)
        _engines[c] = eng
    return eng


def candidate_parameters(c: BifilteredComplex) -> tuple[Fraction, ...]:
    """Parameters in (0,2) where upsilon can have a breakpoint and where the
    secondary invariant can be finite."""
    return _engine(c).candidates


def gamma_at(c: BifilteredComplex, t) -> Fraction:
    """Minimal level s with an essential grading-0 cycle in the f_t sublevel
    subcomplex at level s."""
    t = _frac(t)
    if not 0 <= t <= 2:
        raise ValueError(f"t={t} outside [0,2]")
    return _engine(c).gamma(t).value


def upsilon_pl(c: BifilteredComplex) -> PLFunction:
    """Upsilon of the complex as an exact piecewise-linear function.

    gamma is sampled at every collinearity candidate plus the endpoints, and
    linearity between consecutive samples is verified at each midpoint, so
    the returned canonical function is exact.
    """
    eng = _engine(c)
    ts = [Fraction(0), *eng.candidates, Fraction(2)]
    vals = [eng.gamma(t).value for t in ts]
    for (t0, v0), (t1, v1) in zip(zip(ts, vals), zip(ts[1:], vals[1:])):
        mid = (t0 + t1) / 2
        gm = eng.gamma(mid).value
        if gm != (v0 + v1) / 2:
            raise AssertionError(
                f"gamma not linear on [{t0},{t1}]: candidate set incomplete")
    return pl_from_samples([(t, -2 * v) for t, v in zip(ts, vals)])


def pivot_points(c: BifilteredComplex, t) -> PivotPair:
    """The unique bifiltration levels on the support line just below and just
    above t.

    delta is half the gap from t to the nearest other candidate parameter
    (clamped inside (0,2)); at t +/- delta the support line meets exactly one
    grading-0 level, which is asserted.
    """
    t = _frac(t)
    if not 0 < t < 2:
        raise ValueError(f"pivot points need t in (0,2), got {t}")
    eng = _engine(c)
    tm, tp = eng.pivot_sides(t)
    neg = eng.gamma(tm).contact_levels
    pos = eng.gamma(tp).contact_levels
    if len(neg) != 1 or len(pos) != 1:
        raise AssertionError(
            f"support line at t={t}+/-{t - tm} meets more than one level; "
            f"delta not small enough")
    return PivotPair(negative=neg[0], positive=pos[0], delta=t - tm)


def cycle_space(c: BifilteredComplex, t_side) -> F2AffineSpace:
    """Affine space of essential grading-0 cycles in the sublevel subcomplex
    at gamma(t_side); t_side must avoid the candidate parameters (use the
    t +/- delta returned by pivot_points)."""
    t_side = _frac(t_side)
    if not 0 < t_side < 2:
        raise ValueError(f"t_side={t_side} outside (0,2)")
    eng = _engine(c)
    if eng.is_candidate(t_side):
        raise ValueError(
            f"t_side={t_side} is a collinearity parameter; cycle spaces are "
            f"only defined off the candidate set")
    return eng.cycle_space(t_side)[0]


def _gamma2_engine(eng: _Engine, t: Fraction, s: Fraction) -> ExtRational:
    """Incremental minimal-r scan for the secondary invariant.

    Unknown vector: a grading-1 chain w plus corrections z+ -> z+ + v+ and
    z- -> z- + v- inside their affine spaces; the equation is
    d(w) + v+ + v- = z+ + z-.  Columns always available: boundary columns of
    grading-1 elements inside C^t_{gamma(t)} and the direction vectors of
    both cycle spaces.  Remaining grading-1 columns enter in increasing f_s
    order; solvability is monotone along the scan, and the first group whose
    insertion makes the system consistent gives gamma2.
    """
    if not eng.is_candidate(t):
        return NEG_INF
    tm, tp = eng.pivot_sides(t)
    plus_space, _ = eng.cycle_space(tp)
    minus_space, _ = eng.cycle_space(tm)
    g = eng.gamma(t)
    keys_t, scale_t = eng._keys1(t)
    threshold_t = g.value * scale_t

    keys0_t, scale0_t = eng._keys0(t)
    mask_t = 0
    for i, k in enumerate(keys0_t):
        if k <= g.value * scale0_t:
            mask_t |= 1 << i
    # Cycles from just below/above t live inside the t-sublevel set.
    assert plus_space.base & ~mask_t == 0
    assert minus_space.base & ~mask_t == 0

    target = plus_space.base ^ minus_space.base
    reducer: dict[int, int] = {}

    def insert(v: int) -> None:
        v = reduce_vector(v, reducer)
        if v:
            reducer[v.bit_length() - 1] = v

    keys_s, scale_s = eng._keys1(s)
    rest: list[tuple[int, int]] = []
    for i, col in enumerate(eng.d1cols):
        if keys_t[i] <= threshold_t:
            insert(col)
        else:
            rest.append((keys_s[i], col))
    for v in plus_space.directions:
        insert(v)
    for v in minus_space.directions:
        insert(v)

    residue = reduce_vector(target, reducer)
    if residue == 0:
        return NEG_INF

    rest.sort(key=lambda kv: kv[0])
    i, n = 0, len(rest)
    while i < n:
        key = rest[i][0]
        while i < n and rest[i][0] == key:
            insert(rest[i][1])
            i += 1
        residue = reduce_vector(residue, reducer)
        if residue == 0:
            return Fraction(key, scale_s)
    raise AssertionError(
        "secondary invariant scan exhausted all grading-1 thresholds without "
        "solving; complex invalid")


def gamma2(c: BifilteredComplex, t, s) -> ExtRational:
    """Minimal r at which some cycles from either side of t become homologous
    in C^t_{gamma(t)} + C^s_r; -infinity when they already are at r -> -oo
    (in particular whenever the two cycle sets meet)."""
    t, s = _frac(t), _frac(s)
    if not 0 < t < 2:
        raise ValueError(f"gamma2 needs t in (0,2), got {t}")
    if not 0 <= s <= 2:
        raise ValueError(f"gamma2 needs s in [0,2], got {s}")
    return _gamma2_engine(_engine(c), t, s)


def upsilon2(c: BifilteredComplex, t, s=None) -> ExtRational:
    """Secondary upsilon: -2*(gamma2 - gamma); +infinity off the jump set.

    Defaults to the diagonal s = t.  Invariant under uniform filtration
    shifts, since gamma and gamma2 shift by the same amount.
    """
    t = _frac(t)
    s = t if s is None else _frac(s)
    g2 = gamma2(c, t, s)
    if g2 == NEG_INF:
        return POS_INF
    return -2 * (g2 - _engine(c).gamma(t).value)


def is_jump_value(c: BifilteredComplex, t) -> bool:
    """Whether the cycle spaces just below and just above t are disjoint."""
    t = _frac(t)
    if not 0 < t < 2:
        raise ValueError(f"jump test needs t in (0,2), got {t}")
    eng = _engine(c)
    if not eng.is_candidate(t):
        return False
    tm, tp = eng.pivot_sides(t)
    return not affine_intersects(eng.cycle_space(tp)[0], eng.cycle_space(tm)[0])


def jump_values(c: BifilteredComplex,
                max_t: Optional[Fraction] = None) -> list[JumpReport]:
    """Scan every candidate parameter, reporting jump status and the diagonal
    secondary invariant; parameters outside the candidate set are never
    jumps."""
    eng = _engine(c)
    out = []
    for t in eng.candidates:
        if max_t is not None and t > max_t:
            break
        jump = is_jump_value(c, t)
        u2 = upsilon2(c, t) if jump else POS_INF
        out.append(JumpReport(t=t, is_jump=jump, upsilon2=u2))
    return out


def check_subadditivity(a: BifilteredComplex, b: BifilteredComplex, t,
                        tensor_complex: Optional[BifilteredComplex] = None) -> bool:
    """Diagonal subadditivity of the secondary invariant under connected sum:
    upsilon2 of the tensor is at least the minimum of the summands'.

    Passing the precomputed tensor complex avoids rebuilding it when checking
    many parameters.
    """
    t = _frac(t)
    ab = tensor_complex if tensor_complex is not None else tensor(a, b)
    lhs = upsilon2(ab, t)
    rhs = min(upsilon2(a, t), upsilon2(b, t))
    return lhs >= rhs

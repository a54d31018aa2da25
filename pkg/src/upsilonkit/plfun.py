"""Exact rational values and continuous piecewise-linear functions on [0,2].

The upsilon invariant of a knot is a continuous piecewise-linear function on
[0,2] with rational breakpoints; the secondary invariant takes values in the
rationals extended by two infinities.  Everything here is exact: rationals
are ``fractions.Fraction`` and no floating point appears anywhere.

A ``PLFunction`` is kept in canonical form (strictly increasing breakpoint
parameters covering 0 and 2, no interior breakpoint collinear with its two
neighbours) so that structural equality coincides with functional equality.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction


def _frac(x) -> Fraction:
    """Coerce ints/strings like '4/7' to Fraction; reject floats."""
    if isinstance(x, float):
        raise TypeError("floating point input not allowed; use Fraction")
    return Fraction(x)


class Infinity:
    """A signed infinity adjoined to the rationals.

    Only the two module singletons POS_INF and NEG_INF exist.  Ordering puts
    NEG_INF below every rational and POS_INF above.  Adding a finite value
    keeps the infinity; adding infinities of opposite sign raises.
    """

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self) -> str:
        return "inf" if self.sign > 0 else "-inf"

    def __neg__(self) -> "Infinity":
        return NEG_INF if self.sign > 0 else POS_INF

    def __eq__(self, other) -> bool:
        return isinstance(other, Infinity) and other.sign == self.sign

    def __hash__(self) -> int:
        return hash(("Infinity", self.sign))

    def _cmp_known(self, other) -> bool:
        return isinstance(other, (Infinity, Fraction, int))

    def __lt__(self, other):
        if not self._cmp_known(other):
            return NotImplemented
        if isinstance(other, Infinity):
            return self.sign < other.sign
        return self.sign < 0

    def __le__(self, other):
        if not self._cmp_known(other):
            return NotImplemented
        return self == other or self < other

    def __gt__(self, other):
        if not self._cmp_known(other):
            return NotImplemented
        if isinstance(other, Infinity):
            return self.sign > other.sign
        return self.sign > 0

    def __ge__(self, other):
        if not self._cmp_known(other):
            return NotImplemented
        return self == other or self > other

    def __add__(self, other):
        if isinstance(other, Infinity):
            if other.sign != self.sign:
                raise ArithmeticError("cannot add infinities of opposite sign")
            return self
        if isinstance(other, (Fraction, int)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Infinity):
            return self + (-other)
        if isinstance(other, (Fraction, int)):
            return self
        return NotImplemented

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (Fraction, int)):
            if other == 0:
                raise ArithmeticError("cannot multiply infinity by zero")
            return self if other > 0 else -self
        return NotImplemented

    __rmul__ = __mul__


POS_INF = Infinity(1)
NEG_INF = Infinity(-1)

ExtRational = Union[Fraction, Infinity]


def is_finite(x: ExtRational) -> bool:
    return not isinstance(x, Infinity)


def format_ext(x: ExtRational) -> str:
    """Render an extended rational the way the CLI prints it."""
    if isinstance(x, Infinity):
        return repr(x)
    return str(x)


def rational_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def rational_from_json(d: dict) -> Fraction:
    return Fraction(d["num"], d["den"])


def ext_to_json(x: ExtRational) -> dict:
    if isinstance(x, Infinity):
        return {"inf": x.sign}
    return rational_to_json(x)


def ext_from_json(d: dict) -> ExtRational:
    if "inf" in d:
        return POS_INF if d["inf"] > 0 else NEG_INF
    return rational_from_json(d)


T_MIN = Fraction(0)
T_MAX = Fraction(2)


@dataclass(frozen=True)
class PLFunction:
    """Continuous piecewise-linear function on [0,2] in canonical form."""

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __repr__(self) -> str:
        pts = ", ".join(f"({t}, {v})" for t, v in self.breakpoints)
        return f"PLFunction[{pts}]"


def _canonicalize(points: Sequence[tuple[Fraction, Fraction]]) -> PLFunction:
    """Drop interior points collinear with their neighbours."""
    kept: list[tuple[Fraction, Fraction]] = []
    for p in points:
        while len(kept) >= 2:
            (t0, v0), (t1, v1) = kept[-2], kept[-1]
            if (v1 - v0) * (p[0] - t1) == (p[1] - v1) * (t1 - t0):
                kept.pop()
            else:
                break
        kept.append(p)
    return PLFunction(tuple(kept))


def pl_from_samples(samples: Iterable[tuple[Rational, Rational]]) -> PLFunction:
    """Canonical PLFunction interpolating the samples.

    The samples must be sorted with strictly increasing t in [0,2] and must
    include t=0 and t=2.
    """
    pts = [(_frac(t), _frac(v)) for t, v in samples]
    if not pts:
        raise ValueError("no samples")
    for (t0, _), (t1, _) in zip(pts, pts[1:]):
        if t0 == t1:
            raise ValueError(f"duplicate sample parameter t={t0}")
        if t0 > t1:
            raise ValueError("samples not sorted by t")
    if pts[0][0] < T_MIN or pts[-1][0] > T_MAX:
        raise ValueError("sample parameter outside [0,2]")
    if pts[0][0] != T_MIN or pts[-1][0] != T_MAX:
        raise ValueError("samples must cover t=0 and t=2")
    return _canonicalize(pts)


def pl_constant(value: Rational) -> PLFunction:
    v = _frac(value)
    return PLFunction(((T_MIN, v), (T_MAX, v)))


def pl_eval(f: PLFunction, t: Rational) -> Fraction:
    """Exact value of f at t by linear interpolation."""
    t = _frac(t)
    if t < T_MIN or t > T_MAX:
        raise ValueError(f"t={t} outside [0,2]")
    ts = [p[0] for p in f.breakpoints]
    i = bisect_right(ts, t) - 1
    if i == len(ts) - 1:
        return f.breakpoints[-1][1]
    (t0, v0), (t1, v1) = f.breakpoints[i], f.breakpoints[i + 1]
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0)


def pl_add(f: PLFunction, g: PLFunction) -> PLFunction:
    grid = sorted({t for t, _ in f.breakpoints} | {t for t, _ in g.breakpoints})
    return _canonicalize([(t, pl_eval(f, t) + pl_eval(g, t)) for t in grid])


def pl_neg(f: PLFunction) -> PLFunction:
    return PLFunction(tuple((t, -v) for t, v in f.breakpoints))


def pl_scale(f: PLFunction, n: int) -> PLFunction:
    if n == 0:
        return pl_constant(0)
    return PLFunction(tuple((t, n * v) for t, v in f.breakpoints))


def pl_equal(f: PLFunction, g: PLFunction) -> bool:
    return f.breakpoints == g.breakpoints


def pl_lower_envelope(lines: Sequence[tuple[Rational, Rational]]) -> PLFunction:
    """Pointwise minimum over [0,2] of the lines t -> slope*t + intercept.

    Breakpoints of the envelope are pairwise intersection parameters, so the
    minimum over the lines at those parameters determines it exactly.
    """
    if not lines:
        raise ValueError("empty family of lines")
    lns = [(_frac(m), _frac(b)) for m, b in lines]
    grid = {T_MIN, T_MAX}
    for i, (m1, b1) in enumerate(lns):
        for m2, b2 in lns[i + 1:]:
            if m1 == m2:
                continue
            t = (b2 - b1) / (m1 - m2)
            if T_MIN < t < T_MAX:
                grid.add(t)
    samples = [(t, min(m * t + b for m, b in lns)) for t in sorted(grid)]
    return _canonicalize(samples)


def pl_to_json(f: PLFunction) -> dict:
    return {
        "breakpoints": [
            {"t": rational_to_json(t), "v": rational_to_json(v)}
            for t, v in f.breakpoints
        ]
    }


def pl_from_json(d: dict) -> PLFunction:
    return pl_from_samples(
        [(rational_from_json(p["t"]), rational_from_json(p["v"]))
         for p in d["breakpoints"]]
    )

"""Slopes on a torus boundary component.

A slope is stored as a primitive integer pair ``(p, q)`` in one fixed ordered
basis of the first homology of the torus.  Slopes are unoriented; the
representative kept is the one with ``q > 0``, or ``p > 0`` when ``q == 0``.
When an orientation matters it travels next to the slope as ``+1`` / ``-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import InvalidMulticurve, InvalidSlope


def _normal_pair(p: int, q: int) -> tuple[int, int, int]:
    if q < 0 or (q == 0 and p < 0):
        return -p, -q, -1
    return p, q, 1


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise InvalidSlope(f"slope coordinates must be integers, got {self.p!r}, {self.q!r}")
        if (self.p, self.q) == (0, 0):
            raise InvalidSlope("(0, 0) is not a slope")
        if gcd(self.p, self.q) != 1:
            raise InvalidSlope(f"({self.p}, {self.q}) is not primitive")
        p, q, _ = _normal_pair(self.p, self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def oriented(cls, p: int, q: int) -> tuple["Slope", int]:
        """Return the slope through ``(p, q)`` and the orientation of ``(p, q)``
        relative to the stored representative."""
        if (p, q) == (0, 0):
            raise InvalidSlope("(0, 0) is not a slope")
        _, _, sign = _normal_pair(p, q)
        return cls(p, q), sign

    @classmethod
    def parse(cls, text: str) -> "Slope":
        try:
            p, q = text.strip().split("/")
            return cls(int(p), int(q))
        except ValueError as exc:
            if isinstance(exc, InvalidSlope):
                raise
            raise InvalidSlope(f"cannot read slope {text!r}; expected 'p/q'") from None

    def vector(self, orientation: int = 1) -> tuple[int, int]:
        return orientation * self.p, orientation * self.q

    def __str__(self):
        return f"{self.p}/{self.q}"


def delta(a: Slope, b: Slope) -> int:
    """Minimal geometric intersection number of two slopes on the torus."""
    for s in (a, b):
        if not isinstance(s, Slope):
            raise InvalidSlope(f"expected a Slope, got {s!r}")
    return abs(a.p * b.q - a.q * b.p)


def change_basis(slope: Slope, matrix) -> Slope:
    """Apply an integer matrix of determinant +-1 to a slope.

    ``matrix`` is ``((a, b), (c, d))`` acting on column vectors.
    """
    (a, b), (c, d) = matrix
    if a * d - b * c not in (1, -1):
        raise InvalidSlope("basis change must have determinant +-1")
    return Slope(a * slope.p + b * slope.q, c * slope.p + d * slope.q)


@dataclass(frozen=True, order=True)
class Term:
    slope: Slope
    mult: int
    orient: int


@dataclass(frozen=True)
class OrientedMulticurve:
    """Weighted oriented slopes; at most one term per ``(slope, orient)``."""

    terms: tuple[Term, ...] = ()

    def __post_init__(self):
        merged: dict[tuple[Slope, int], int] = {}
        for t in self.terms:
            if not isinstance(t, Term):
                t = Term(*t)
            if not isinstance(t.mult, int) or t.mult <= 0:
                raise InvalidMulticurve(f"multiplicity must be a positive integer, got {t.mult!r}")
            if t.orient not in (1, -1):
                raise InvalidMulticurve(f"orientation must be +1 or -1, got {t.orient!r}")
            merged[(t.slope, t.orient)] = merged.get((t.slope, t.orient), 0) + t.mult
        norm = tuple(sorted(Term(s, m, o) for (s, o), m in merged.items()))
        object.__setattr__(self, "terms", norm)

    @classmethod
    def of(cls, *items) -> "OrientedMulticurve":
        """Build from ``(mult, (p, q))`` pairs; the sign of ``(p, q)`` is the orientation."""
        terms = []
        for mult, (p, q) in items:
            s, o = Slope.oriented(p, q)
            terms.append(Term(s, mult, o))
        return cls(tuple(terms))

    def homology_class(self) -> tuple[int, int]:
        x = sum(t.mult * t.orient * t.slope.p for t in self.terms)
        y = sum(t.mult * t.orient * t.slope.q for t in self.terms)
        return x, y

    def slopes(self) -> set[Slope]:
        return {t.slope for t in self.terms}

    def components(self) -> int:
        return sum(t.mult for t in self.terms)

    def to_records(self) -> list[dict]:
        return [{"slope": str(t.slope), "mult": t.mult, "orient": t.orient} for t in self.terms]

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> "OrientedMulticurve":
        return cls(tuple(Term(Slope.parse(r["slope"]), r["mult"], r["orient"]) for r in records))


def _embedded_slope(c: OrientedMulticurve, name: str):
    slopes = c.slopes()
    if len(slopes) > 1:
        raise InvalidMulticurve(
            f"{name} has non-parallel components {sorted(map(str, slopes))}; "
            "disjoint essential curves on a torus are parallel"
        )
    return next(iter(slopes), None)


def double_curve_sum_torus(c1: OrientedMulticurve, c2: OrientedMulticurve) -> OrientedMulticurve:
    """Oriented resolution of every crossing between two embedded multicurves.

    Parallel inputs have no crossings and are returned as their disjoint union,
    orientations untouched.  Transverse inputs must each be coherently
    oriented; the result is ``gcd(|x|, |y|)`` parallel copies of the primitive
    slope of the summed class ``(x, y)``.
    """
    s1 = _embedded_slope(c1, "first multicurve")
    s2 = _embedded_slope(c2, "second multicurve")
    if s1 is None or s2 is None or s1 == s2:
        return OrientedMulticurve(c1.terms + c2.terms)
    for name, c in (("first", c1), ("second", c2)):
        if len({t.orient for t in c.terms}) > 1:
            raise InvalidMulticurve(
                f"{name} multicurve mixes orientations on slope {next(iter(c.slopes()))} "
                "while crossing the other input; the oriented resolution is not determined"
            )
    x, y = (a + b for a, b in zip(c1.homology_class(), c2.homology_class()))
    k = gcd(x, y)
    slope, orient = Slope.oriented(x // k, y // k)
    return OrientedMulticurve((Term(slope, k, orient),))

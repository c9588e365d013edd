"""Compact orientable surfaces as counted data, with their norms.

A surface is a multiset of components ``(genus, boundary_count,
puncture_count)``.  Punctures record how many times the 1-complex meets the
component; the geometry of the intersection is never modelled.

The exceptional-class predicate only covers knots.  For an arc the algebraic
intersection can change when the boundary of the surface slides across an
endpoint of the arc, so no numeric test exists there.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import InconsistentIntersectionData, InvalidSurface


@dataclass(frozen=True)
class Component:
    genus: int = 0
    boundary: int = 0
    punctures: int = 0
    signs: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        for name in ("genus", "boundary", "punctures"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InvalidSurface(f"{name} must be a nonnegative integer, got {v!r}")
        if self.signs is not None:
            signs = tuple(self.signs)
            if len(signs) != self.punctures:
                raise InvalidSurface(
                    f"{len(signs)} puncture signs given for {self.punctures} punctures"
                )
            if any(s not in (1, -1) for s in signs):
                raise InvalidSurface("puncture signs must be +1 or -1")
            object.__setattr__(self, "signs", signs)

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - self.boundary

    @property
    def coherent(self) -> Optional[bool]:
        """Whether the 1-complex always meets this component with one sign.

        ``None`` when no signs were recorded.
        """
        if self.signs is None:
            return None
        return len(set(self.signs)) <= 1


@dataclass(frozen=True)
class SurfaceSpec:
    components: tuple[Component, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __add__(self, other: "SurfaceSpec") -> "SurfaceSpec":
        return SurfaceSpec(self.components + other.components)

    def to_records(self) -> list[dict]:
        out = []
        for c in self.components:
            rec = {"g": c.genus, "b": c.boundary, "punctures": c.punctures}
            if c.signs is not None:
                rec["signs"] = list(c.signs)
            out.append(rec)
        return out

    @classmethod
    def from_records(cls, records: Iterable[dict]) -> "SurfaceSpec":
        comps = []
        for rec in records:
            if rec.get("orientable", True) is not True:
                raise InvalidSurface("nonorientable surfaces are not supported")
            signs = rec.get("signs")
            comps.append(
                Component(
                    rec.get("g", 0),
                    rec.get("b", 0),
                    rec.get("punctures", 0),
                    tuple(signs) if signs is not None else None,
                )
            )
        return cls(tuple(comps))


def surface(*components) -> SurfaceSpec:
    """Shorthand: ``surface((1, 0, 3), (2, 0))`` builds a two-component spec."""
    return SurfaceSpec(tuple(c if isinstance(c, Component) else Component(*c) for c in components))


def euler(spec: SurfaceSpec) -> int:
    return sum(c.euler for c in spec.components)


def beta_norm(spec: SurfaceSpec) -> int:
    return sum(max(0, -c.euler + c.punctures) for c in spec.components)


def thurston_norm(spec: SurfaceSpec) -> int:
    return sum(max(0, -c.euler) for c in spec.components)


def exceptional_predicate(wrapping: int, winding: int) -> bool:
    """True when wrapping and winding number differ for a knot and a class.

    ``winding`` is the absolute algebraic intersection number, so it can never
    exceed the geometric count and has the same parity.
    """
    for name, v in (("wrapping", wrapping), ("winding", winding)):
        if not isinstance(v, int) or v < 0:
            raise InconsistentIntersectionData(f"{name} number must be a nonnegative integer")
    if winding > wrapping:
        raise InconsistentIntersectionData(
            f"winding number {winding} exceeds wrapping number {wrapping}"
        )
    if (wrapping - winding) % 2:
        raise InconsistentIntersectionData(
            f"wrapping {wrapping} and winding {winding} have different parity"
        )
    return wrapping != winding

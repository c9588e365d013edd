"""Homology of the region swept out when a tube on a surface is compressed.

A surface ``Qbar`` of genus ``g`` with a tube attached along an arc of the
filling core is compressed along a disc ``D`` whose boundary runs ``q`` times
over the tube, always in the same direction, and otherwise represents
``a_1 x_1 + ... + a_2g x_2g`` on ``Qbar``.  The region ``W`` between ``Qbar``
and the compressed surface ``Rbar`` has

    H_1(W) = < x_1, ..., x_2g, l  |  a_1 x_1 + ... + a_2g x_2g + q l >.

Statements about the ambient 3-manifold (reducibility, incompressibility,
genus bounds) are attached as informational flags only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DegenerateCrossing, PreconditionError
from .normal_form import AbelianGroup, quotient_group
from .surfaces import Component, SurfaceSpec

KINDS = ("sphere", "disc", "closed_genus_g", "bounded")

AMBIENT_FLAGS = (
    "if Qbar is incompressible and q >= 2 then the ambient manifold is reducible or Rbar is compressible (not computed)",
    "if Qbar is a sphere or disc and q >= 2 then W contains a lens space summand of order q",
    "genus bounds on Heegaard surfaces built from W are not computed",
)


@dataclass(frozen=True)
class TubeCompressionData:
    genus: int
    surface_kind: str
    q: int
    a: tuple[int, ...] = ()
    alpha_intersections: Optional[int] = None
    boundary_count: int = 0
    p: Optional[int] = None  # coefficient of the meridian; it never enters the relation

    def __post_init__(self):
        if self.surface_kind not in KINDS:
            raise PreconditionError(f"surface_kind must be one of {', '.join(KINDS)}")
        if not isinstance(self.genus, int) or self.genus < 0:
            raise PreconditionError("genus must be a nonnegative integer")
        if self.surface_kind in ("sphere", "disc") and self.genus:
            raise PreconditionError(f"a {self.surface_kind} has genus 0")
        a = tuple(self.a) if self.a else (0,) * (2 * self.genus)
        if len(a) != 2 * self.genus:
            raise PreconditionError(f"expected {2 * self.genus} coefficients, got {len(a)}")
        object.__setattr__(self, "a", a)
        if not isinstance(self.q, int) or self.q < 0:
            raise PreconditionError("q must be a nonnegative integer")
        if self.q == 0:
            raise DegenerateCrossing("the compressing disc must cross the tube at least once (q >= 1)")
        if self.surface_kind == "disc":
            object.__setattr__(self, "boundary_count", 1)
        if self.alpha_intersections is not None and self.alpha_intersections < 2:
            raise PreconditionError(
                "the tube runs along an arc between two intersection points, so at least 2 are needed"
            )

    @property
    def relation(self) -> tuple[int, ...]:
        return self.a + (self.q,)


@dataclass
class CobordismReport:
    h1_integral: AbelianGroup
    h1_rational_rank: int
    is_product: bool
    is_rational_cobordism: bool
    lens_summand: Optional[int]
    r_surface: Optional[SurfaceSpec]
    relation: tuple[int, ...] = ()
    notes: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"H1(W) = {self.h1_integral}",
            f"rational rank = {self.h1_rational_rank}",
            f"product = {str(self.is_product).lower()}",
            f"rational cobordism = {str(self.is_rational_cobordism).lower()}",
            f"lens summand = {self.lens_summand if self.lens_summand else 'none'}",
        ]
        if self.r_surface is not None:
            (c,) = self.r_surface.components
            out.append(f"Rbar: genus {c.genus}, {c.boundary} boundary, {c.punctures} intersections")
        out += [f"note: {n}" for n in self.notes]
        return out

    def to_record(self) -> dict:
        rec = {
            "h1": str(self.h1_integral),
            "free_rank": self.h1_integral.free_rank,
            "torsion": list(self.h1_integral.torsion),
            "rational_rank": self.h1_rational_rank,
            "is_product": self.is_product,
            "is_rational_cobordism": self.is_rational_cobordism,
            "lens_summand": self.lens_summand,
            "relation": list(self.relation),
        }
        if self.r_surface is not None:
            rec["r_surface"] = self.r_surface.to_records()
        return rec


def cobordism_homology(d: TubeCompressionData) -> CobordismReport:
    n = 2 * d.genus + 1
    h1 = quotient_group(n, [d.relation])
    # tensoring with Q kills the torsion and leaves the x_i as a basis
    rational = n - 1
    lens = d.q if d.surface_kind in ("sphere", "disc") and d.q >= 2 else None
    r = None
    if d.alpha_intersections is not None:
        r = SurfaceSpec((Component(d.genus, d.boundary_count, d.alpha_intersections - 2),))
    notes = list(AMBIENT_FLAGS)
    if d.p is not None:
        notes.append(f"p = {d.p} is recorded but does not enter the relation")
    return CobordismReport(h1, rational, d.q == 1, True, lens, r, d.relation, notes)


def _kind_of(c: Component) -> str:
    if c.genus == 0 and c.boundary == 0:
        return "sphere"
    if c.genus == 0 and c.boundary == 1:
        return "disc"
    return "closed_genus_g" if c.boundary == 0 else "bounded"


def scharlemann_cycle_to_cobordism(g, c, qbar: SurfaceSpec, alpha_intersections: int, a: Sequence[int] = ()):
    """Tube along the arc bounded by a Scharlemann cycle and compress it.

    The disc bounded by the cycle crosses the tube once per edge, so ``q`` is
    the cycle length.
    """
    from .fatgraph.cycles import is_scharlemann

    if not is_scharlemann(g, c):
        raise PreconditionError("the cycle is not a Scharlemann cycle of the graph")
    if len(qbar.components) != 1:
        raise PreconditionError("Qbar must be connected")
    if alpha_intersections < 2:
        raise PreconditionError("fewer than 2 intersection points; nothing to remove")
    (comp,) = qbar.components
    data = TubeCompressionData(
        comp.genus, _kind_of(comp), c.length, tuple(a), alpha_intersections, comp.boundary
    )
    rep = cobordism_homology(data)
    rep.notes.insert(
        0,
        "the cycle's vertices are parallel, so both tube ends attach on the same side of Qbar and Rbar is orientable",
    )
    return rep

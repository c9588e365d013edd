"""Graphs on a boundary sphere carrying one suture.

Vertices carry a region, ``+1`` for ``R_+`` and ``-1`` for ``R_-``.  Edges
inside a region are interior edges; an edge that meets the suture is a
boundary edge, and an arc crossing the suture is two boundary edges that
land at the same position from opposite sides.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import DanglingReference, PreconditionError
from ..sutured import Report
from .cycles import LEFT, RIGHT, sides_of_walk
from .graph import SPHERE, FatGraph

ESSENTIAL, INESSENTIAL = "essential", "inessential"


def _require_suture(g: FatGraph):
    if g.ambient != SPHERE or g.suture_circles != 1:
        raise PreconditionError("this operation needs a sphere carrying exactly one suture circle")


def fullness(g: FatGraph, v) -> tuple[int, bool]:
    """Number of non-loop edges at ``v`` and whether that reaches mu."""
    emb = g.embedding
    i = emb.vindex.get(v)
    if i is None:
        raise DanglingReference(f"unknown vertex {v!r}")
    rho = sum(1 for d in emb.darts_of(i) if emb.node[emb.alpha[d]] != i)
    return rho, rho >= g.mu


def boundary_fullness(g: FatGraph, region: int) -> tuple[int, bool]:
    """The same count for the suture seen as a boundary circle of ``R_region``."""
    _require_suture(g)
    rho = 0
    for (a, _pos) in g.boundary_edges:
        if g.vertex(a[0]).region == region:
            rho += 1
    return rho, rho >= g.mu


def _loop_darts(g: FatGraph, loop) -> tuple[int, int]:
    emb = g.embedding
    if isinstance(loop, int):
        if not 0 <= loop < len(g.interior_edges):
            raise DanglingReference(f"unknown interior edge {loop!r}")
        a, b = g.interior_edges[loop]
    else:
        a = tuple(loop)
        b = next((y for x, y in g.interior_edges if x == a), None) or next(
            (x for x, y in g.interior_edges if y == a), None
        )
        if b is None:
            raise DanglingReference(f"no interior edge ends at {a!r}")
    if a[0] != b[0]:
        raise PreconditionError(f"edge {a!r}-{b!r} is not a loop")
    return emb.dart(*a), emb.dart(*b)


def loop_sides(g: FatGraph, loop):
    t, h = _loop_darts(g, loop)
    return sides_of_walk(g, [(t, h)])


def classify_loop(g: FatGraph, loop) -> str:
    """Inessential when one side holds no vertex; edges on that side are allowed."""
    if g.ambient != SPHERE:
        raise PreconditionError("loops are classified on a sphere")
    sides = loop_sides(g, loop)
    for s in (sides.left, sides.right):
        if not s.vertices and not s.floating:
            return INESSENTIAL
    return ESSENTIAL


def loops_at(g: FatGraph, v) -> list[int]:
    return [k for k, (a, b) in enumerate(g.interior_edges) if a[0] == b[0] == v]


def check_regions(g: FatGraph) -> Report:
    """Every vertex has a region and no interior edge changes region."""
    _require_suture(g)
    rep = Report()
    for v in g.vertices:
        if v.region is None:
            rep.add("region", f"vertex {v.id!r} has no region")
    for k, (a, b) in enumerate(g.interior_edges):
        ra, rb = g.vertex(a[0]).region, g.vertex(b[0]).region
        if ra is not None and rb is not None and ra != rb:
            rep.add("region", f"interior edge {k} joins R{'+' if ra > 0 else '-'} to R{'+' if rb > 0 else '-'} without meeting the suture")
    return rep


@dataclass
class CompleteGraphResult:
    holds: bool
    witness: Optional[tuple] = None
    kuratowski_ok: bool = True
    counts: dict = field(default_factory=dict)


def complete_graph_structure(g: FatGraph) -> CompleteGraphResult:
    """Whether each region carries a complete graph with every vertex edged to the suture.

    Circle components are not modelled, so there is nothing to discard.  A
    positive answer with more than three vertices in one region would put a
    complete graph on five vertices in the plane; that is reported through
    ``kuratowski_ok``.
    """
    _require_suture(g)
    emb = g.embedding
    adjacent = set()
    for a, b in g.interior_edges:
        if a[0] != b[0]:
            adjacent.add(frozenset((a[0], b[0])))
    to_suture = {a[0] for a, _ in g.boundary_edges}
    holds, witness = True, None
    counts = {}
    for region in (1, -1):
        vs = [v.id for v in g.vertices if v.region == region]
        counts[region] = len(vs)
        for v in vs:
            if holds and v not in to_suture:
                holds, witness = False, ("suture", v)
        for x in range(len(vs)):
            for y in range(x + 1, len(vs)):
                if holds and frozenset((vs[x], vs[y])) not in adjacent:
                    holds, witness = False, ("pair", vs[x], vs[y])
    kur = not (holds and max(counts.values(), default=0) > 3)
    if emb.euler() != 2:
        kur = False
    return CompleteGraphResult(holds, witness, kur, counts)


@dataclass(frozen=True)
class GabaiWitness:
    case: int
    kind: str  # "vertex" or "suture"
    target: object
    rho: int
    pre_slide: bool = False

    def __str__(self):
        tag = " (pre-slide)" if self.pre_slide else ""
        return f"case {self.case}: {self.kind} {self.target!r} with rho={self.rho}{tag}"


def gabai_witness_search(g: FatGraph, mu: Optional[int] = None) -> Optional[GabaiWitness]:
    """Find a place where a disc meeting the graph fewer than mu times sits.

    Tried in order: a non-full vertex with no essential loop; a non-full
    vertex at which a loop cuts off a side whose vertices all lie in one
    region; a side of the suture with fewer than mu edges landing on it.
    The second and third cases would need a slide across a cancelling disc
    in the 3-manifold, so their witnesses are marked as pre-slide.
    """
    _require_suture(g)
    mu = g.mu if mu is None else mu
    rho = {v.id: fullness(g, v.id)[0] for v in g.vertices}
    kinds = {k: classify_loop(g, k) for v in g.vertices for k in loops_at(g, v.id)}
    for v in g.vertices:
        if rho[v.id] < mu and all(kinds[k] == INESSENTIAL for k in loops_at(g, v.id)):
            return GabaiWitness(1, "vertex", v.id, rho[v.id])
    emb = g.embedding
    for v in g.vertices:
        if rho[v.id] >= mu:
            continue
        for k in loops_at(g, v.id):
            if kinds[k] != ESSENTIAL:
                continue
            sides = loop_sides(g, k)
            for s in (sides.left, sides.right):
                regions = {g.vertices[i].region for i in s.vertices | s.floating}
                if len(regions) <= 1:
                    return GabaiWitness(2, "vertex", v.id, rho[v.id], pre_slide=True)
    for region in (1, -1):
        r, _ = boundary_fullness(g, region)
        if r < mu:
            return GabaiWitness(3, "suture", "R+" if region > 0 else "R-", r, pre_slide=True)
    return None

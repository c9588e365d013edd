"""Labeled fat-vertex graphs in a disc or a sphere.

The embedding is a rotation system.  Each vertex owns one dart per slot; a
vertex of sign ``+1`` lists its slots counterclockwise as ``1..deg`` and a
vertex of sign ``-1`` lists them clockwise.  A boundary circle (the boundary
of the disc, or the single suture on a sphere) is cut into arcs at the
positions where boundary edges land, and every position becomes a small node
whose counterclockwise dart order is ``[next, left, prev, right]``.  Walking
the circle in increasing position order the disc interior, or the ``+``
region of a sphere, lies on the left.

Faces are orbits of ``phi = sigma o alpha`` and the face of a dart is the one
on its right.  Nothing about faces is stored; they are recomputed from the
rotation data whenever a graph is compiled.

Only one connected piece is modelled.  Vertices of degree zero and a boundary
circle without edges float in a face named by a dart, but components carrying
edges must all be joined to each other (through the boundary circle if
needed).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Optional

from ..errors import DanglingReference, StructureError
from ..sutured import Report

DISC = "disc"
SPHERE = "sphere"
BOUNDARY = "∂"

End = tuple  # (vertex id, slot)


@dataclass(frozen=True)
class Vertex:
    id: Hashable
    sign: int = 1
    region: Optional[int] = None
    degree: Optional[int] = None
    face: Optional[End] = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise StructureError(f"vertex {self.id!r}: sign must be +1 or -1")
        if self.region not in (None, 1, -1):
            raise StructureError(f"vertex {self.id!r}: region must be +1 or -1")
        if self.face is not None:
            object.__setattr__(self, "face", tuple(self.face))


def _end(x) -> End:
    v, s = x
    return (v, s)


@dataclass(frozen=True)
class FatGraph:
    ambient: str
    mu: int
    vertices: tuple[Vertex, ...] = ()
    interior_edges: tuple[tuple[End, End], ...] = ()
    boundary_edges: tuple[tuple[End, int], ...] = ()
    gabai: bool = False
    suture_circles: int = 0
    boundary_face: Optional[End] = None

    def __post_init__(self):
        if self.ambient not in (DISC, SPHERE):
            raise StructureError(f"ambient must be 'disc' or 'sphere', got {self.ambient!r}")
        if not isinstance(self.mu, int) or self.mu < 1:
            raise StructureError(f"mu must be a positive integer, got {self.mu!r}")
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(
            self, "interior_edges", tuple((_end(a), _end(b)) for a, b in self.interior_edges)
        )
        object.__setattr__(
            self, "boundary_edges", tuple((_end(a), int(p)) for a, p in self.boundary_edges)
        )
        if self.boundary_face is not None:
            object.__setattr__(self, "boundary_face", _end(self.boundary_face))

    @cached_property
    def embedding(self) -> "Embedding":
        return Embedding(self)

    def vertex(self, vid) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise DanglingReference(f"unknown vertex {vid!r}")

    def degree(self, v: Vertex) -> int:
        return self.mu if v.degree is None else v.degree

    @property
    def edge_count(self) -> int:
        return len(self.interior_edges) + len(self.boundary_edges)


class Embedding:
    """Integer dart arrays compiled from a :class:`FatGraph`.

    Darts of vertex ``i`` are ``base[i] .. base[i] + deg[i] - 1`` in slot
    order; circle darts follow.  ``alpha`` pairs the two ends of an edge and
    ``sigma`` is the counterclockwise successor around a node.
    """

    def __init__(self, g: FatGraph, connected: bool = True):
        self.graph = g
        self.vindex = {}
        for i, v in enumerate(g.vertices):
            if v.id in self.vindex:
                raise StructureError(f"vertex id {v.id!r} is used twice")
            self.vindex[v.id] = i
        n = len(g.vertices)
        self.nv = n
        self.deg = [g.degree(v) for v in g.vertices]
        for v, d in zip(g.vertices, self.deg):
            if not isinstance(d, int) or d < 0:
                raise StructureError(f"vertex {v.id!r}: bad degree {d!r}")
        self.base = []
        total = 0
        for d in self.deg:
            self.base.append(total)
            total += d
        self.node: list[int] = []
        self.slot: list[int] = []
        self.sigma: list[int] = []
        for i, v in enumerate(g.vertices):
            d, b = self.deg[i], self.base[i]
            for s in range(d):
                self.node.append(i)
                self.slot.append(s + 1)
                self.sigma.append(b + (s + v.sign) % d)
        self.alpha: list[int] = [-1] * total
        self.edge_of: list[int] = [-1] * total

        for k, (a, b) in enumerate(g.interior_edges):
            da, db = self.dart(*a), self.dart(*b)
            if da == db:
                raise StructureError(f"interior edge {k} uses slot {a[1]} of {a[0]!r} twice")
            self._pair(da, db, k)

        # boundary circle
        self.circle_kind: list[Optional[str]] = [None] * total
        self.positions: list[int] = []
        if g.boundary_edges:
            if g.ambient == SPHERE and g.suture_circles != 1:
                raise StructureError("sphere boundary edges need exactly one suture circle")
            at: dict[int, dict[str, tuple[int, int]]] = {}
            m = len(g.interior_edges)
            for k, (a, pos) in enumerate(g.boundary_edges):
                da = self.dart(*a)
                if g.ambient == DISC:
                    side = "L"
                else:
                    region = g.vertices[self.node[da]].region
                    if region is None:
                        raise StructureError(
                            f"vertex {a[0]!r} meets the suture but has no region"
                        )
                    side = "L" if region == 1 else "R"
                slot_map = at.setdefault(pos, {})
                if side in slot_map:
                    raise StructureError(
                        f"two boundary edges land at position {pos} from the same side"
                    )
                slot_map[side] = (da, m + k)
            self.positions = sorted(at)
            first = len(self.alpha)
            nodes = []
            for j, pos in enumerate(self.positions):
                kinds = ["next"] + [s for s in ("L",) if s in at[pos]] + ["prev"] + [
                    s for s in ("R",) if s in at[pos]
                ]
                ds = {}
                for kind in kinds:
                    d = len(self.alpha)
                    ds[kind] = d
                    self.alpha.append(-1)
                    self.edge_of.append(-1)
                    self.node.append(n + j)
                    self.slot.append(0)
                    self.circle_kind.append(kind)
                    self.sigma.append(-1)
                order = [ds[k] for k in kinds]
                for x, y in zip(order, order[1:] + order[:1]):
                    self.sigma[x] = y
                for side, (da, e) in at[pos].items():
                    self._pair(da, ds[side], e)
                nodes.append(ds)
            for j, ds in enumerate(nodes):
                nxt = nodes[(j + 1) % len(nodes)]
                self._pair(ds["next"], nxt["prev"], -1)
            self.circle_darts = range(first, len(self.alpha))
        else:
            self.circle_darts = range(0)

        for d, a in enumerate(self.alpha):
            if a < 0:
                i = self.node[d]
                raise StructureError(
                    f"slot {self.slot[d]} of vertex {g.vertices[i].id!r} carries no edge"
                )

        self.nnodes = n + len(self.positions)
        self._trace_faces()
        if connected:
            self._check_connected()
            self._place_floating()
        else:
            self.floating, self.circle_face = {}, None

    # -- construction helpers

    def dart(self, vid, slot) -> int:
        i = self.vindex.get(vid)
        if i is None:
            raise DanglingReference(f"unknown vertex {vid!r}")
        if not isinstance(slot, int) or not 1 <= slot <= self.deg[i]:
            raise StructureError(f"vertex {vid!r} has no slot {slot!r}")
        return self.base[i] + slot - 1

    def _pair(self, a: int, b: int, edge: int):
        for d in (a, b):
            if self.alpha[d] >= 0:
                i = self.node[d]
                raise StructureError(
                    f"slot {self.slot[d]} of vertex {self.graph.vertices[i].id!r} is used twice"
                )
        self.alpha[a], self.alpha[b] = b, a
        self.edge_of[a] = self.edge_of[b] = edge

    def _trace_faces(self):
        nd = len(self.alpha)
        self.face_of = [-1] * nd
        self.faces: list[list[int]] = []
        for d in range(nd):
            if self.face_of[d] >= 0:
                continue
            f = len(self.faces)
            orbit = []
            x = d
            while self.face_of[x] < 0:
                self.face_of[x] = f
                orbit.append(x)
                x = self.sigma[self.alpha[x]]
            self.faces.append(orbit)

    def components(self) -> int:
        """Connected pieces of the dart structure (edgeless nodes not counted)."""
        seen = [False] * len(self.alpha)
        count = 0
        for start in range(len(self.alpha)):
            if seen[start]:
                continue
            count += 1
            seen[start] = True
            stack = [start]
            while stack:
                d = stack.pop()
                for e in (self.alpha[d], self.sigma[d]):
                    if not seen[e]:
                        seen[e] = True
                        stack.append(e)
        return count

    def _check_connected(self):
        if self.components() > 1:
            raise StructureError(
                "the graph with its boundary circle is disconnected; only degree-0 vertices "
                "and an edgeless suture circle may float"
            )

    def _face_at(self, ref, what: str) -> int:
        if not self.alpha:
            return 0
        if ref is None:
            raise StructureError(f"{what} needs a face placement")
        return self.face_of[self.dart(*ref)]

    def _place_floating(self):
        g = self.graph
        self.floating: dict[int, int] = {}
        for i, v in enumerate(g.vertices):
            if self.deg[i] == 0:
                self.floating[i] = self._face_at(v.face, f"isolated vertex {v.id!r}")
        self.circle_face: Optional[int] = None
        needs_circle = (g.ambient == DISC) or g.suture_circles == 1
        if needs_circle and not self.positions:
            self.circle_face = self._face_at(g.boundary_face, "the boundary circle")

    # -- queries

    @property
    def nfaces(self) -> int:
        return max(len(self.faces), 1)

    def euler(self) -> int:
        """V - E + F of the connected closure (2 iff the rotation system is planar)."""
        if not self.alpha:
            return 2
        used = {self.node[d] for d in range(len(self.alpha))}
        return len(used) - len(self.alpha) // 2 + len(self.faces)

    def darts_of(self, i: int) -> range:
        return range(self.base[i], self.base[i] + self.deg[i])

    def outer_face(self) -> Optional[int]:
        """Face holding the boundary of the disc; ``None`` when the circle is a node ring."""
        return self.circle_face


def planar_pieces(g: FatGraph) -> bool:
    """Whether every connected piece of ``g`` embeds in the plane on its own.

    How the pieces sit relative to one another is ignored, so graphs with
    several pieces are accepted here even though :class:`Embedding` refuses
    them.
    """
    emb = Embedding(g, connected=False)
    return emb.euler() == 2 * max(emb.components(), 1)


def admissible(g: FatGraph) -> Report:
    """Embedding, label and Gabai-disc checks; malformed rotation data raises."""
    emb = g.embedding
    rep = Report()
    chi = emb.euler()
    if chi != 2:
        rep.add("embedding", f"face tracing gives V - E + F = {chi}, not 2; the rotation system is not planar")
    for k, (a, b) in enumerate(g.interior_edges):
        if a[1] == b[1]:
            rep.add(
                "Observation 1",
                f"interior edge {k} joins slot {a[1]} of {a[0]!r} to slot {b[1]} of {b[0]!r}",
            )
    if g.gabai:
        if g.ambient != DISC:
            rep.add("Gabai ambient", "a Gabai disc graph must live in a disc")
        if len(g.boundary_edges) >= g.mu:
            rep.add(
                "Gabai bound",
                f"{len(g.boundary_edges)} boundary edges; a Gabai disc meets Q fewer than mu={g.mu} times",
            )
        if not g.vertices:
            rep.add("Gabai vertices", "a Gabai disc meets beta at least once")
        if len({v.sign for v in g.vertices}) > 1:
            rep.add("Gabai signs", "vertices of a Gabai disc graph must all have the same sign")
        for v in g.vertices:
            if g.degree(v) != g.mu:
                rep.add("Gabai degree", f"vertex {v.id!r} has degree {g.degree(v)}, expected mu={g.mu}")
    return rep


def edge_labels(g: FatGraph, edge) -> tuple:
    """Slot labels at the two ends of an edge, ``(s, "∂")`` for a boundary edge.

    ``edge`` is a global index (interior edges first) or one ``(vertex, slot)``
    end of the edge.
    """
    m = len(g.interior_edges)
    if isinstance(edge, int):
        if 0 <= edge < m:
            a, b = g.interior_edges[edge]
            return a[1], b[1]
        if m <= edge < g.edge_count:
            return g.boundary_edges[edge - m][0][1], BOUNDARY
        raise DanglingReference(f"unknown edge {edge!r}")
    end = _end(edge)
    for a, b in g.interior_edges:
        if end == a:
            return a[1], b[1]
        if end == b:
            return b[1], a[1]
    for a, _ in g.boundary_edges:
        if end == a:
            return a[1], BOUNDARY
    raise DanglingReference(f"no edge ends at {end!r}")

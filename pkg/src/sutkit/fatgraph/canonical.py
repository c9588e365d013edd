"""Canonical codes for labeled fat graphs.

Two graphs get the same code exactly when a bijection of vertices carries
slots to equal slots, keeps rotations and signs, and carries the cyclic
boundary sequence (or, with no boundary edges, the outer face) to the other
graph's, possibly after reflecting one of them.  Slot labels are never
shifted: label ``i`` stays label ``i``.

The work happens on a small raw form so that the enumerator can canonize
candidates without building :class:`FatGraph` objects first.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import PreconditionError
from .graph import DISC, SPHERE, FatGraph, Vertex


@dataclass(frozen=True)
class RawGraph:
    """``part[v][s-1]`` is ``(w, t)`` for an interior edge or ``(-1, k)`` for
    the ``k``-th boundary edge in cyclic order."""

    ambient: str
    mu: int
    signs: tuple[int, ...]
    part: tuple[tuple[tuple[int, int], ...], ...]
    boundary: tuple[tuple[int, int], ...]  # (v, s) in cyclic order
    outer: Optional[tuple[int, int]] = None  # dart (v, s) right of which lies the outer face

    def sigma(self, v: int, s: int) -> int:
        d = len(self.part[v])
        return (s - 1 + self.signs[v]) % d + 1

    def face(self, v: int, s: int) -> list[tuple[int, int]]:
        out = []
        x = (v, s)
        while True:
            out.append(x)
            w, t = self.part[x[0]][x[1] - 1]
            if w < 0:
                raise PreconditionError("faces are only traced here for graphs without boundary edges")
            x = (w, self.sigma(w, t))
            if x == (v, s):
                return out


def raw_from_graph(g: FatGraph) -> RawGraph:
    if g.ambient == SPHERE and g.suture_circles:
        raise PreconditionError("canonical codes are not defined for graphs with a suture circle")
    idx = {v.id: i for i, v in enumerate(g.vertices)}
    part = [[None] * g.degree(v) for v in g.vertices]
    if any(len(p) == 0 for p in part):
        raise PreconditionError("canonical codes need every vertex to carry an edge")
    for (a, s), (b, t) in g.interior_edges:
        part[idx[a]][s - 1] = (idx[b], t)
        part[idx[b]][t - 1] = (idx[a], s)
    order = sorted(range(len(g.boundary_edges)), key=lambda k: g.boundary_edges[k][1])
    boundary = []
    for k, j in enumerate(order):
        (a, s), _ = g.boundary_edges[j]
        part[idx[a]][s - 1] = (-1, k)
        boundary.append((idx[a], s))
    outer = None
    if g.ambient == DISC and not boundary:
        if g.boundary_face is None:
            raise PreconditionError("a disc graph without boundary edges needs its outer face")
        a, s = g.boundary_face
        outer = (idx[a], s)
    return RawGraph(
        g.ambient,
        g.mu,
        tuple(v.sign for v in g.vertices),
        tuple(tuple(p) for p in part),
        tuple(boundary),
        outer,
    )


def graph_from_raw(r: RawGraph, gabai: bool = False) -> FatGraph:
    vertices = [Vertex(i + 1, sign) for i, sign in enumerate(r.signs)]
    interior = []
    for v, row in enumerate(r.part):
        for s, (w, t) in enumerate(row, 1):
            if w >= 0 and (v, s) < (w, t):
                interior.append(((v + 1, s), (w + 1, t)))
    boundary = [((v + 1, s), k + 1) for k, (v, s) in enumerate(r.boundary)]
    face = (r.outer[0] + 1, r.outer[1]) if r.outer else None
    return FatGraph(r.ambient, r.mu, tuple(vertices), tuple(interior), tuple(boundary), gabai, 0, face)


def mirror_raw(r: RawGraph) -> RawGraph:
    """Reflect: flip every sign and reverse the boundary sequence."""
    b = len(r.boundary)
    remap = {k: (b - k) % b for k in range(b)}
    part = tuple(
        tuple((w, t) if w >= 0 else (-1, remap[t]) for w, t in row) for row in r.part
    )
    boundary = tuple(r.boundary[(b - k) % b] for k in range(b))
    outer = None
    if r.outer is not None:
        outer = r.part[r.outer[0]][r.outer[1] - 1]
    return RawGraph(r.ambient, r.mu, tuple(-s for s in r.signs), part, boundary, outer)


def _code_from(r: RawGraph, seeds: list[int], rot: int, outer_face):
    n = len(r.part)
    new = {}
    queue = []
    for v in seeds:
        if v not in new:
            new[v] = len(new)
            queue.append(v)
    i = 0
    while i < len(queue):
        v = queue[i]
        i += 1
        for w, _ in r.part[v]:
            if w >= 0 and w not in new:
                new[w] = len(new)
                queue.append(w)
    if len(new) != n:
        raise PreconditionError("canonical codes need a connected graph")
    b = len(r.boundary)
    rows = []
    for v in queue:
        row = [r.signs[v]]
        for w, t in r.part[v]:
            row.append((new[w], t) if w >= 0 else (-1, (t - rot) % b))
        rows.append(tuple(row))
    tail = ()
    if outer_face is not None:
        tail = (min((new[v], s) for v, s in outer_face),)
    return (r.ambient, r.mu, n, b, tuple(rows)) + tail


def _codes(r: RawGraph):
    b = len(r.boundary)
    if b:
        for k in range(b):
            seeds = [r.boundary[(k + j) % b][0] for j in range(b)]
            yield _code_from(r, seeds, k, None)
    else:
        outer = r.face(*r.outer) if r.outer is not None else None
        for v in range(len(r.part)):
            yield _code_from(r, [v], 0, outer)


def canonical_code_raw(r: RawGraph, reflect: bool = True) -> tuple:
    best = min(_codes(r))
    if reflect:
        best = min(best, min(_codes(mirror_raw(r))))
    return best


def canonical_code(g: FatGraph) -> tuple:
    """Least breadth-first code over all starts and both reflections."""
    return canonical_code_raw(raw_from_graph(g))


def mirror(g: FatGraph) -> FatGraph:
    return graph_from_raw(mirror_raw(raw_from_graph(g)), g.gabai)


def isomorphic(g: FatGraph, h: FatGraph) -> bool:
    return canonical_code(g) == canonical_code(h)

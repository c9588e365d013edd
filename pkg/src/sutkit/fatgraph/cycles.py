"""Lambda-cycles, the two sides of a cycle, and the Scharlemann-cycle search."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Optional

from ..errors import NoScharlemannCycle, NotAGabaiGraph, PreconditionError
from .graph import DISC, FatGraph, admissible

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class Cycle:
    """Directed cycle; each step is ``(tail vertex, tail slot, head vertex, head slot)``."""

    steps: tuple[tuple[Hashable, int, Hashable, int], ...]
    tail_label: int
    interior_edge_count: Optional[int] = field(default=None, compare=False)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def vertices(self) -> tuple:
        return tuple(s[0] for s in self.steps)

    def __str__(self):
        path = " -> ".join(f"{t}[{ts}|{hs}]" for t, ts, _, hs in self.steps)
        return f"lambda_{self.tail_label} cycle of length {self.length}: {path} -> {self.steps[0][0]}"


@dataclass
class SideContent:
    vertices: set = field(default_factory=set)
    floating: set = field(default_factory=set)
    edges: set = field(default_factory=set)
    circle: bool = False
    faces: set = field(default_factory=set)

    @property
    def empty(self) -> bool:
        """No vertex or edge of the graph on this side."""
        return not (self.vertices or self.floating or self.edges or self.circle)


@dataclass
class Sides:
    left: SideContent
    right: SideContent

    def __getitem__(self, side: str) -> SideContent:
        return self.left if side == LEFT else self.right


def _cycle_darts(g: FatGraph, c: Cycle) -> list[tuple[int, int]]:
    emb = g.embedding
    if not c.steps:
        raise PreconditionError("empty cycle")
    out = []
    seen = set()
    for k, (u, ts, w, hs) in enumerate(c.steps):
        t, h = emb.dart(u, ts), emb.dart(w, hs)
        if emb.alpha[t] != h:
            raise PreconditionError(f"step {k} of the cycle is not an edge of the graph")
        if ts != c.tail_label:
            raise PreconditionError(f"step {k} has tail label {ts}, expected {c.tail_label}")
        nxt = c.steps[(k + 1) % len(c.steps)][0]
        if w != nxt:
            raise PreconditionError(f"step {k} ends at {w!r} but the next step starts at {nxt!r}")
        if u in seen:
            raise PreconditionError(f"cycle visits {u!r} twice")
        seen.add(u)
        out.append((t, h))
    return out


def cycle_sides(g: FatGraph, c: Cycle) -> Sides:
    """Split everything not on ``c`` into the part left and right of it."""
    return sides_of_walk(g, _cycle_darts(g, c))


def sides_of_walk(g: FatGraph, darts: list[tuple[int, int]]) -> Sides:
    """Sides of a closed walk given as ``(outgoing, incoming)`` dart pairs.

    Consecutive pairs must be joined by an edge and no node may repeat.
    """
    emb = g.embedding
    on_cycle = {emb.node[t] for t, _ in darts}
    tails = {emb.node[t]: t for t, _ in darts}
    heads = {emb.node[h]: h for _, h in darts}
    side_of: dict[int, str] = {}
    for x in on_cycle:
        t, h = tails[x], heads[x]
        d = emb.sigma[t]
        while d != h:
            side_of[d] = LEFT
            d = emb.sigma[d]
        d = emb.sigma[h]
        while d != t:
            side_of[d] = RIGHT
            d = emb.sigma[d]

    node_side: dict[int, str] = {}
    stack = list(side_of)
    while stack:
        d = stack.pop()
        s = side_of[d]
        p = emb.alpha[d]
        if p not in side_of:
            side_of[p] = s
            stack.append(p)
        x = emb.node[p]
        if x not in on_cycle and x not in node_side:
            node_side[x] = s
            y = emb.sigma[p]
            while y != p:
                if y not in side_of:
                    side_of[y] = s
                    stack.append(y)
                y = emb.sigma[y]

    face_side: dict[int, str] = {}
    for d, s in side_of.items():
        face_side[emb.face_of[d]] = s
    for t, h in darts:
        face_side.setdefault(emb.face_of[t], RIGHT)
        face_side.setdefault(emb.face_of[h], LEFT)

    sides = Sides(SideContent(), SideContent())
    for f, s in face_side.items():
        sides[s].faces.add(f)
    for x, s in node_side.items():
        if x < emb.nv:
            sides[s].vertices.add(x)
        else:
            sides[s].circle = True
    for d, s in side_of.items():
        e = emb.edge_of[d]
        if e >= 0:
            sides[s].edges.add(e)
    for i, f in emb.floating.items():
        sides[face_side.get(f, LEFT)].floating.add(i)
    if emb.circle_face is not None and g.ambient == DISC:
        sides[face_side[emb.circle_face]].circle = True
    return sides


def disc_side(g: FatGraph, c: Cycle, sides: Optional[Sides] = None) -> str:
    """The side of ``c`` away from the boundary of the disc."""
    sides = sides or cycle_sides(g, c)
    if g.ambient != DISC:
        raise PreconditionError("the disc side is only defined in a disc ambient")
    return RIGHT if sides.left.circle else LEFT


def _with_count(g: FatGraph, c: Cycle) -> Cycle:
    if g.ambient != DISC:
        return c
    sides = cycle_sides(g, c)
    e = sides[disc_side(g, c, sides)]
    return Cycle(c.steps, c.tail_label, len(e.edges))


def _successor(g: FatGraph, x: int, i: int):
    emb = g.embedding
    if emb.deg[x] < i:
        return None
    d = emb.base[x] + i - 1
    p = emb.alpha[d]
    y = emb.node[p]
    if y >= emb.nv:
        return None
    return y, emb.slot[p]


def _step(g: FatGraph, x: int, i: int, y: int, hs: int):
    vs = g.vertices
    return (vs[x].id, i, vs[y].id, hs)


def _rotate_min(cyc: list[int], steps: list) -> tuple:
    k = cyc.index(min(cyc))
    return tuple(steps[k:] + steps[:k])


def find_lambda_cycles(g: FatGraph, i: int) -> list[Cycle]:
    """All simple directed cycles whose edges leave every vertex through slot ``i``.

    Each vertex has at most one such outgoing edge, so these are exactly the
    cycles of a partial function on the vertices.
    """
    emb = g.embedding
    succ = {}
    for x in range(emb.nv):
        nxt = _successor(g, x, i)
        if nxt is not None:
            succ[x] = nxt
    found = []
    state = {}
    for x0 in range(emb.nv):
        path = []
        x = x0
        while x in succ and x not in state:
            state[x] = x0
            path.append(x)
            x = succ[x][0]
        if x in state and state[x] == x0 and x in path:
            cyc = path[path.index(x):]
            steps = [_step(g, y, i, *succ[y]) for y in cyc]
            if len(cyc) == 2 and steps[0][1] == steps[1][3] and steps[0][3] == steps[1][1] == i:
                continue  # one edge walked both ways
            found.append((min(cyc), len(cyc), _rotate_min(cyc, steps)))
    found.sort(key=lambda t: (t[0], t[1]))
    return [_with_count(g, Cycle(s, i)) for _, _, s in found]


def _walk(g: FatGraph, start: int, i: int) -> Optional[Cycle]:
    seen = {}
    path = []
    x = start
    while x not in seen:
        seen[x] = len(path)
        path.append(x)
        nxt = _successor(g, x, i)
        if nxt is None:
            return None
        x = nxt[0]
    cyc = path[seen[x]:]
    steps = [_step(g, y, i, *_successor(g, y, i)) for y in cyc]
    return Cycle(_rotate_min(cyc, steps), i)


def is_great(g: FatGraph, c: Cycle) -> bool:
    _cycle_darts(g, c)
    return len({g.vertex(v).sign for v in c.vertices}) == 1


def scharlemann_side(g: FatGraph, c: Cycle) -> Optional[str]:
    """Which side of a great cycle is empty and qualifies it, or ``None``.

    In a disc only the side away from the boundary counts.  On a sphere
    either side may serve; the left side is reported when both do.
    """
    if not is_great(g, c):
        return None
    sides = cycle_sides(g, c)
    if g.ambient == DISC:
        side = disc_side(g, c, sides)
        return side if sides[side].empty else None
    for side in (LEFT, RIGHT):
        if sides[side].empty:
            return side
    return None


def is_scharlemann(g: FatGraph, c: Cycle) -> bool:
    return scharlemann_side(g, c) is not None


@dataclass
class SearchResult:
    first: Cycle
    cycle: Cycle
    trail: list[Cycle]
    start_label: int


def scharlemann_search(g: FatGraph) -> SearchResult:
    """Run the constructive search and keep the first cycle found and the trail."""
    rep = admissible(g)
    if not rep.ok or not g.gabai:
        why = "; ".join(rep.lines()) if not rep.ok else "the gabai flag is not set"
        raise NotAGabaiGraph(f"not a Gabai disc graph: {why}")
    emb = g.embedding
    mu = g.mu
    used = {a[1] for a, _ in g.boundary_edges}
    free = [i for i in range(1, mu + 1) if i not in used]
    i = free[0]
    first = _walk(g, 0, i)
    if first is None:
        raise NoScharlemannCycle(f"label {i} walk left the graph", g)
    cycle = first
    trail = []
    sign = g.vertices[0].sign
    cap = len(g.interior_edges) + 2
    for _ in range(cap):
        sides = cycle_sides(g, cycle)
        side = disc_side(g, cycle, sides)
        inside = sides[side]
        cycle = Cycle(cycle.steps, cycle.tail_label, len(inside.edges))
        trail.append(cycle)
        if inside.empty:
            return SearchResult(_with_count(g, first), cycle, trail, i)
        on_cycle = [emb.vindex[v] for v in cycle.vertices]
        darts_in = [
            d for x in on_cycle for d in emb.darts_of(x) if emb.edge_of[d] in inside.edges
        ]
        if not darts_in:
            # nothing enters from the cycle, so the vertices inside span a smaller Gabai disc
            start = min(inside.vertices)
            nxt = _walk(g, start, 1)
        else:
            j = cycle.tail_label
            d = 1 if (sign == 1) == (side == LEFT) else -1
            jj = (j - 1 + d) % mu + 1
            heads = {emb.node[emb.dart(w, hs)]: hs for _, _, w, hs in cycle.steps}
            start = next(x for x in on_cycle if heads[x] != jj)
            nxt = _walk(g, start, jj)
        if nxt is None:
            break
        cycle = nxt
    raise NoScharlemannCycle("the refinement did not reach an empty disc", g, trail)


def find_scharlemann_cycle(g: FatGraph) -> Cycle:
    return scharlemann_search(g).cycle

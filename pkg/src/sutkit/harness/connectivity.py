"""Index accounting for full vertices on a sphere carrying one suture.

Each instance is a sphere split by a single suture into discs ``R_-`` and
``R_+``, with ``k`` arcs of beta running from a vertex in ``R_-`` to a vertex
in ``R_+``.  Strand ``t`` of an arc leaves slot ``t`` at both of its ends, so
the boundary curves of the surface are traced by alternately running along a
strand and following the graph edge at its far end.  Edges cross the suture
at most once, and edges with both ends on the suture are not generated.

Whenever two full vertices of one region are not joined by an edge, every
admissible way of grouping the boundary curves into surface pieces must have
index at least ``2 mu``.  Rather than listing the set partitions, every
subset of curves is checked once as a piece and the least total index is
found by dynamic programming over subsets.
"""
from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from ..errors import StructureError
from ..sutured import (
    A,
    BetaArc,
    BoundaryPattern,
    ParamSurface,
    Piece,
    Region,
    S,
    Suture,
    SuturedData,
    classify_zero_index_disc,
    index,
    piece_index,
)
from ..fatgraph.graph import SPHERE, FatGraph, Vertex, planar_pieces
from .verify import VerificationReport

SUTURE = "g1"
FORBIDDEN_DISCS = ("cancelling", "non_self_amalgamating")


@dataclass(frozen=True)
class ConnectivityInstance:
    graph: FatGraph
    arcs: tuple[tuple[str, object, object], ...]  # (arc id, vertex in R_-, vertex in R_+)

    def data(self) -> SuturedData:
        pattern = BoundaryPattern(
            regions=(Region("Rm", "-", 0, (SUTURE,)), Region("Rp", "+", 0, (SUTURE,))),
            sutures=(Suture(SUTURE, "Rm", "Rp"),),
        )
        return SuturedData((pattern,), tuple(BetaArc(a, "Rm", "Rp") for a, _, _ in self.arcs))


@dataclass(frozen=True)
class Curve:
    word: tuple
    traversals: Counter  # arc id -> strands run along
    loops: Counter  # vertex -> loop edges followed there


@dataclass(frozen=True)
class ConnectivityFamily:
    arcs: tuple[int, ...] = (1, 2)
    mu: tuple[int, ...] = (1, 2, 3)
    excess: int = 1  # vertex degrees range over mu .. mu + excess
    max_genus: int = 0

    def to_record(self) -> dict:
        return {"arcs": list(self.arcs), "mu": list(self.mu), "excess": self.excess, "max_genus": self.max_genus}


# ---------------------------------------------------------------- tracing


def _partners(g: FatGraph) -> dict:
    """Graph-edge partner of every vertex end, flagged when the edge crosses the suture."""
    out = {}
    for a, b in g.interior_edges:
        out[a] = (b, False)
        out[b] = (a, False)
    at: dict[int, list] = {}
    for end, pos in g.boundary_edges:
        at.setdefault(pos, []).append(end)
    for pos, ends in at.items():
        if len(ends) != 2:
            raise StructureError(f"suture position {pos} is not crossed by exactly one edge")
        a, b = ends
        out[a] = (b, True)
        out[b] = (a, True)
    return out


def trace_curves(inst: ConnectivityInstance) -> list[Curve]:
    g = inst.graph
    partner = _partners(g)
    arc_of = {}
    for arc, m, p in inst.arcs:
        arc_of[m] = (arc, p)
        arc_of[p] = (arc, m)
    seen = set()
    curves = []
    for arc, m, _ in inst.arcs:
        for t in range(1, g.degree(g.vertex(m)) + 1):
            if (arc, t) in seen:
                continue
            word, trav, loops = [], Counter(), Counter()
            x = (m, t)
            while True:
                a, other = arc_of[x[0]]
                if (a, x[1]) in seen:
                    break
                seen.add((a, x[1]))
                word.append(A(a))
                trav[a] += 1
                y = (other, x[1])
                z, crossed = partner[y]
                if crossed:
                    word.append(S(SUTURE))
                elif z[0] == y[0]:
                    loops[y[0]] += 1
                x = z
            curves.append(Curve(tuple(word), trav, loops))
    return curves


def rho(inst: ConnectivityInstance, v) -> int:
    """Edges at ``v`` that are not loops, counting edges that cross the suture."""
    partner = _partners(inst.graph)
    d = inst.graph.degree(inst.graph.vertex(v))
    return sum(1 for s in range(1, d + 1) if partner[(v, s)][0][0] != v)


def adjacent(inst: ConnectivityInstance, v, w) -> bool:
    return any({a[0], b[0]} == {v, w} for a, b in inst.graph.interior_edges)


def touches_suture(inst: ConnectivityInstance, v) -> bool:
    return any(end[0] == v for end, _ in inst.graph.boundary_edges)


@dataclass
class DichotomyCase:
    kind: str  # "pair" or "suture"
    region: int
    v: object
    w: object  # second vertex, or the suture id


def dichotomy_cases(inst: ConnectivityInstance) -> list[DichotomyCase]:
    """Full vertex pairs of one region with no edge between them, and full
    vertices cut off from a full suture."""
    g = inst.graph
    mu = g.mu
    crossings = len(g.boundary_edges) // 2
    cases = []
    for region in (-1, 1):
        full = [v.id for v in g.vertices if v.region == region and rho(inst, v.id) >= mu]
        for v, w in itertools.combinations(full, 2):
            if not adjacent(inst, v, w):
                cases.append(DichotomyCase("pair", region, v, w))
        if crossings >= mu:
            for v in full:
                if not touches_suture(inst, v):
                    cases.append(DichotomyCase("suture", region, v, SUTURE))
    return cases


# ---------------------------------------------------------------- pieces


def _arc_at(inst: ConnectivityInstance, v) -> str:
    for arc, m, p in inst.arcs:
        if v in (m, p):
            return arc
    raise KeyError(v)


def _piece_bound_failures(inst, curves, mask, genus, idx, case) -> list[str]:
    """Per-piece lower bounds from counting the letters a curve must carry."""
    ev, ew = _arc_at(inst, case.v), _arc_at(inst, case.w)
    members = [c for k, c in enumerate(curves) if mask >> k & 1]
    st = [c.traversals[ev] + c.traversals[ew] for c in members]
    ll = [c.loops[case.v] + c.loops[case.w] for c in members]
    if sum(st) == 0:
        return []
    out = []
    total = sum(2 * a - 2 * b for a, b in zip(st, ll))
    if genus == 0 and len(members) == 1:
        if idx < -2 + total:
            out.append(f"disc index {idx} below -2 + 2(s+t) - 2L = {-2 + total}")
    elif idx < total:
        out.append(f"piece index {idx} below the sum of 2(s_i+t_i) - 2L_i = {total}")
    if idx < sum(st) - 2 * sum(ll):
        out.append(f"piece index {idx} below s+t-2L = {sum(st) - 2 * sum(ll)}")
    return out


@dataclass
class InstanceResult:
    cases: list
    min_index: Optional[int]
    best: Optional[ParamSurface]
    failures: list = field(default_factory=list)
    blocks: int = 0


def check_instance(inst: ConnectivityInstance, max_genus: int = 0) -> InstanceResult:
    cases = dichotomy_cases(inst)
    if not cases:
        return InstanceResult(cases, None, None)
    curves = trace_curves(inst)
    n = len(curves)
    mu = inst.graph.mu
    pair_cases = [c for c in cases if c.kind == "pair"]
    failures = []
    block_index = {}
    blocks = 0
    for mask in range(1, 1 << n):
        words = tuple(curves[k].word for k in range(n) if mask >> k & 1)
        for genus in range(max_genus + 1):
            piece = Piece(genus, words)
            if piece.is_disc and classify_zero_index_disc(piece) in FORBIDDEN_DISCS:
                continue
            blocks += 1
            idx = piece_index(piece)
            if idx < block_index.get(mask, (idx + 1,))[0]:
                block_index[mask] = (idx, piece)
            for case in pair_cases:
                for msg in _piece_bound_failures(inst, curves, mask, genus, idx, case):
                    failures.append({"reason": f"{case.v},{case.w}: {msg}", "words": _words(words)})
    # least total index over groupings of the curves into pieces
    best: dict[int, tuple] = {0: (0, ())}
    for mask in range(1, 1 << n):
        low = mask & -mask
        rest = mask ^ low
        choice = None
        sub = rest
        while True:
            block = sub | low
            if block in block_index and (mask ^ block) in best:
                val = block_index[block][0] + best[mask ^ block][0]
                if choice is None or val < choice[0]:
                    choice = (val, best[mask ^ block][1] + (block_index[block][1],))
            if sub == 0:
                break
            sub = (sub - 1) & rest
        if choice is not None:
            best[mask] = choice
    full = (1 << n) - 1
    if full not in best:
        return InstanceResult(cases, None, None, failures, blocks)
    value, pieces = best[full]
    q = ParamSurface(tuple(pieces))
    # the sutured module recomputes the index, including its admissibility checks
    computed = index(q, inst.data())
    if computed != value:
        failures.append({"reason": f"piece sum {value} disagrees with the index {computed}"})
    for case in cases:
        if computed < 2 * mu:
            failures.append(
                {
                    "reason": f"{case.kind} case {case.v},{case.w} in R{'+' if case.region > 0 else '-'}: "
                    f"index {computed} < 2 mu = {2 * mu}",
                    "words": [_words(p.words) for p in pieces],
                }
            )
    return InstanceResult(cases, computed, q, failures, blocks)


def _words(words) -> list:
    return [" ".join(map(str, w)) for w in words]


# ---------------------------------------------------------------- family


def _matchings(darts: list) -> Iterator[tuple[list, list]]:
    """Pair up some darts as edges and leave the rest to cross the suture."""
    if not darts:
        yield [], []
        return
    first, rest = darts[0], darts[1:]
    for edges, cross in _matchings(rest):
        yield edges, [first] + cross
    for k, other in enumerate(rest):
        for edges, cross in _matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, other)] + edges, cross


def _side_configs(vertices: list[Vertex], mu: int, fix_rotation: bool) -> dict[int, list]:
    """Planar layouts of one side of the suture, keyed by number of crossings.

    Each side is a disc, so the whole sphere is planar exactly when both
    sides are.
    """
    darts = [(v.id, s) for v in vertices for s in range(1, v.degree + 1)]
    out: dict[int, list] = {}
    for edges, cross in _matchings(darts):
        if fix_rotation and cross:
            orders = ((cross[0],) + p for p in itertools.permutations(cross[1:]))
        else:
            orders = itertools.permutations(cross)
        for order in orders:
            g = FatGraph(
                SPHERE,
                mu,
                tuple(vertices),
                tuple(edges),
                tuple((end, pos) for pos, end in enumerate(order, 1)),
                suture_circles=1,
            )
            if planar_pieces(g):
                out.setdefault(len(order), []).append((tuple(edges), tuple(order)))
    return out


def connectivity_family(family: ConnectivityFamily = ConnectivityFamily()) -> Iterator[ConnectivityInstance]:
    """Every layout of the configured sizes; symmetric copies are not removed."""
    for k in family.arcs:
        for mu in family.mu:
            for degrees in itertools.combinations_with_replacement(range(mu, mu + family.excess + 1), k):
                arcs = tuple((f"e{j + 1}", f"m{j + 1}", f"p{j + 1}") for j in range(k))
                minus = [Vertex(f"m{j + 1}", 1, -1, d) for j, d in enumerate(degrees)]
                plus = [Vertex(f"p{j + 1}", -1, 1, d) for j, d in enumerate(degrees)]
                left = _side_configs(plus, mu, True)
                right = _side_configs(minus, mu, False)
                for c in sorted(set(left) & set(right)):
                    for pe, po in left[c]:
                        for me, mo in right[c]:
                            bnd = tuple((end, pos) for pos, end in enumerate(po, 1)) + tuple(
                                (end, pos) for pos, end in enumerate(mo, 1)
                            )
                            g = FatGraph(SPHERE, mu, tuple(plus + minus), pe + me, bnd, suture_circles=1)
                            yield ConnectivityInstance(g, arcs)


def verify_connectivity_dichotomy(
    family: ConnectivityFamily = ConnectivityFamily(),
    extra: Iterable[ConnectivityInstance] = (),
) -> VerificationReport:
    """Check the index bound on every instance with a dichotomy case."""
    start = time.perf_counter()
    rep = VerificationReport("connectivity dichotomy", family.to_record())
    for inst in itertools.chain(connectivity_family(family), extra):
        rep.instances += 1
        res = check_instance(inst, family.max_genus)
        if not res.cases:
            continue
        kinds = Counter(c.kind for c in res.cases)
        rep.bump("instances with a non-adjacent full pair", int(kinds["pair"] > 0))
        rep.bump("instances with a full vertex cut off from a full suture", int(kinds["suture"] > 0))
        rep.bump("pieces checked", res.blocks)
        if res.min_index is None:
            rep.bump("instances with no admissible grouping")
        for f in res.failures:
            f = dict(f)
            from ..records import graph_to_record

            f["graph"] = graph_to_record(inst.graph)
            rep.failures.append(f)
    rep.wall_time = time.perf_counter() - start
    return rep

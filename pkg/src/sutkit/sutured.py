"""Sutured manifold boundary data and parameterizing surfaces.

Only what is decidable from the boundary pattern is checked.  Irreducibility
of ``M - beta`` and tautness of ``R(gamma)`` are 3-manifold facts; they enter as
declared flags and are echoed back in reports, never computed.

Boundary words are cyclic words over three letters::

    S:<suture id>   the boundary curve crosses a suture
    A:<edge id>     the curve runs along a spanning arc of the annulus A(e)
    C:<edge id>     the whole curve is a circle on the boundary of eta(e)

``C`` on a loop of beta denotes a curve on the torus boundary of the loop's
neighbourhood, which is how a punctured closed surface meets a surgered knot.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional

from .errors import DanglingReference, PreconditionError
from .surfaces import Component

SIGNS = ("+", "-", "T")


@dataclass(frozen=True)
class Region:
    id: str
    sign: str
    genus: int = 0
    circles: tuple[str, ...] = ()


@dataclass(frozen=True)
class Suture:
    id: str
    minus: str
    plus: str


@dataclass(frozen=True)
class BoundaryPattern:
    regions: tuple[Region, ...] = ()
    sutures: tuple[Suture, ...] = ()


@dataclass(frozen=True)
class BetaArc:
    id: str
    minus: str
    plus: str


@dataclass(frozen=True)
class SuturedData:
    boundary_components: tuple[BoundaryPattern, ...] = ()
    beta_arcs: tuple[BetaArc, ...] = ()
    beta_loops: tuple[str, ...] = ()
    irreducible: bool = True
    taut_regions: bool = True

    def regions(self) -> dict[str, Region]:
        return {r.id: r for bc in self.boundary_components for r in bc.regions}

    def sutures(self) -> dict[str, Suture]:
        return {s.id: s for bc in self.boundary_components for s in bc.sutures}

    def arcs(self) -> dict[str, BetaArc]:
        return {a.id: a for a in self.beta_arcs}


@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str

    def __str__(self):
        return f"{self.axiom}: {self.message}"


@dataclass
class Report:
    """Line-oriented validation result; empty ``violations`` means valid."""

    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, axiom: str, message: str):
        self.violations.append(Violation(axiom, message))

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def lines(self) -> list[str]:
        return [str(v) for v in self.violations] + [f"note: {n}" for n in self.notes]

    def extend(self, other: "Report"):
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)


def check_sutured_axioms(data: SuturedData) -> Report:
    rep = Report()
    seen: set[str] = set()
    for bc in data.boundary_components:
        for rid in [r.id for r in bc.regions] + [s.id for s in bc.sutures]:
            if rid in seen:
                rep.add("ids", f"id {rid!r} is used twice")
            seen.add(rid)

    for k, bc in enumerate(data.boundary_components):
        regions = {r.id: r for r in bc.regions}
        sutures = {s.id: s for s in bc.sutures}
        for r in bc.regions:
            if r.sign not in SIGNS:
                rep.add("region sign", f"region {r.id!r} has sign {r.sign!r}; expected +, - or T")
            if not isinstance(r.genus, int) or r.genus < 0:
                rep.add("region genus", f"region {r.id!r} has genus {r.genus!r}")
            if r.sign == "T" and (r.genus != 1 or r.circles):
                rep.add(
                    "T(gamma) torus",
                    f"region {r.id!r} is in T(gamma) but has genus {r.genus} "
                    f"and {len(r.circles)} boundary circles",
                )
        for s in bc.sutures:
            want = (("minus", s.minus, "-"), ("plus", s.plus, "+"))
            for side, rid, sign in want:
                r = regions.get(rid)
                if r is None:
                    rep.add(
                        "suture adjacency",
                        f"suture {s.id!r}: {side} neighbour {rid!r} is not a region of boundary component {k}",
                    )
                elif r.sign != sign:
                    rep.add(
                        "suture adjacency",
                        f"suture {s.id!r}: {side} neighbour {rid!r} has sign {r.sign}",
                    )
        # boundary circles of regions <-> sides of sutures
        uses: dict[str, list[str]] = {}
        for r in bc.regions:
            for c in r.circles:
                if c not in sutures:
                    rep.add(
                        "suture circles",
                        f"region {r.id!r} lists boundary circle {c!r} which is not a suture of boundary component {k}",
                    )
                uses.setdefault(c, []).append(r.id)
        for s in bc.sutures:
            got = sorted(uses.get(s.id, []))
            if got != sorted([s.minus, s.plus]):
                rep.add(
                    "suture circles",
                    f"suture {s.id!r} bounds regions {got}, expected {sorted([s.minus, s.plus])}",
                )

    regions = data.regions()
    sutures = data.sutures()
    for a in data.beta_arcs:
        for rid in (a.minus, a.plus):
            if rid in sutures:
                rep.add("beta avoids sutures", f"beta edge {a.id!r} ends on suture {rid!r}")
            elif rid not in regions:
                rep.add("beta reference", f"beta edge {a.id!r} ends on unknown region {rid!r}")
    return rep


def check_beta_taut_conditions(data: SuturedData) -> Report:
    rep = Report()
    regions = data.regions()
    for a in data.beta_arcs:
        signs = []
        for rid in (a.minus, a.plus):
            r = regions.get(rid)
            if r is None:
                rep.add("beta reference", f"beta edge {a.id!r} ends on unknown region {rid!r}")
                signs.append(None)
            else:
                signs.append(r.sign)
        if "T" in signs:
            rep.add("beta avoids A(gamma) u T(gamma)", f"beta edge {a.id!r} has an endpoint in T(gamma)")
        elif signs[0] is not None and signs[0] == signs[1]:
            rep.add(
                "beta endpoints",
                f"beta edge {a.id!r} has both endpoints in R{signs[0]}",
            )
    if data.irreducible:
        rep.notes.append("irreducible: declared true (not computed)")
    else:
        rep.add("irreducible", "M - beta declared reducible")
    if data.taut_regions:
        rep.notes.append("R(gamma) beta-taut: declared true (not computed)")
    else:
        rep.add("R(gamma) taut", "R(gamma) declared not beta-taut")
    return rep


# ---------------------------------------------------------------- words


class Letter(NamedTuple):
    kind: str  # "S", "A" or "C"
    ref: str

    @classmethod
    def parse(cls, token: str) -> "Letter":
        kind, sep, ref = token.partition(":")
        if not sep or kind not in ("S", "A", "C") or not ref:
            raise ValueError(f"bad boundary-word token {token!r}; expected S:<id>, A:<id> or C:<id>")
        return cls(kind, ref)

    def __str__(self):
        return f"{self.kind}:{self.ref}"


def S(ref) -> Letter:
    return Letter("S", str(ref))


def A(ref) -> Letter:
    return Letter("A", str(ref))


def C(ref) -> Letter:
    return Letter("C", str(ref))


Word = tuple[Letter, ...]


def canonical_word(word: Iterable[Letter]) -> Word:
    """Least rotation of the word or its reverse; equal curves share it."""
    w = tuple(word)
    if not w:
        return w
    cands = []
    for seq in (w, w[::-1]):
        for i in range(len(seq)):
            cands.append(seq[i:] + seq[:i])
    return min(cands)


def same_curve(w1: Iterable[Letter], w2: Iterable[Letter]) -> bool:
    return canonical_word(w1) == canonical_word(w2)


@dataclass(frozen=True)
class Piece:
    genus: int
    words: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))

    @property
    def component(self) -> Component:
        return Component(self.genus, len(self.words))

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - len(self.words)

    @property
    def is_disc(self) -> bool:
        return self.genus == 0 and len(self.words) == 1

    def count(self, kind: str) -> int:
        return sum(1 for w in self.words for l in w if l.kind == kind)


@dataclass(frozen=True)
class ParamSurface:
    pieces: tuple[Piece, ...] = ()
    mu_per_edge: Optional[dict] = None

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    def __hash__(self):
        return hash(self.pieces)


def _structural_report(q: ParamSurface, arc_ids=None) -> Report:
    rep = Report()
    for n, piece in enumerate(q.pieces):
        if piece.genus < 0:
            rep.add("surface", f"piece {n} has negative genus")
        if piece.genus == 0 and not piece.words:
            rep.add("P3", f"piece {n} is a sphere")
        for w in piece.words:
            if any(l.kind == "C" for l in w) and len(w) != 1:
                rep.add(
                    "P2",
                    f"piece {n}: word {' '.join(map(str, w))} mixes a circle on eta(beta) with other letters",
                )
        if piece.is_disc:
            (w,) = piece.words
            if not w:
                rep.add("P3", f"piece {n} is a disc disjoint from gamma and eta(beta)")
            elif len(w) == 1 and w[0].kind == "C":
                kind = "meridian circle of A(e)" if arc_ids is None or w[0].ref in arc_ids else "curve on a loop of beta"
                rep.add(
                    "meridian-disc",
                    f"piece {n} is a disc bounded by a {kind} ({w[0].ref}); its index would be -2",
                )
    return rep


def check_param_conditions(q: ParamSurface, data: SuturedData) -> Report:
    """Check (P1)-(P3) for ``q`` against the boundary data.

    (P1) is checked as well-formedness of each boundary word: every letter
    resolves, and the curve switches between R_- and R_+ an even number of
    times.  Dangling ids raise :class:`DanglingReference`.
    """
    regions = data.regions()
    sutures = data.sutures()
    arcs = data.arcs()
    loops = set(data.beta_loops)

    switches = {}
    for a in data.beta_arcs:
        sm = regions[a.minus].sign if a.minus in regions else None
        sp = regions[a.plus].sign if a.plus in regions else None
        switches[a.id] = sm != sp

    for n, piece in enumerate(q.pieces):
        for w in piece.words:
            for l in w:
                if l.kind == "S" and l.ref not in sutures:
                    raise DanglingReference(f"piece {n}: unknown suture {l.ref!r}")
                if l.kind == "A" and l.ref not in arcs:
                    raise DanglingReference(f"piece {n}: unknown beta edge {l.ref!r}")
                if l.kind == "C" and l.ref not in arcs and l.ref not in loops:
                    raise DanglingReference(f"piece {n}: unknown beta edge or loop {l.ref!r}")

    rep = _structural_report(q, arc_ids=set(arcs))
    for n, piece in enumerate(q.pieces):
        for w in piece.words:
            flips = sum(1 for l in w if l.kind == "S" or (l.kind == "A" and switches[l.ref]))
            if flips % 2:
                rep.add(
                    "P1",
                    f"piece {n}: word {' '.join(map(str, w))} changes side of gamma an odd number of times",
                )

    if q.mu_per_edge is not None:
        for e in q.mu_per_edge:
            if e not in arcs:
                raise DanglingReference(f"mu_per_edge names unknown beta edge {e!r}")
        for e in arcs:
            got = sum(1 for p in q.pieces for w in p.words for l in w if l == Letter("A", e))
            want = q.mu_per_edge.get(e, 0)
            if got != want:
                rep.add("mu", f"beta edge {e!r}: {got} spanning arcs in the words, {want} declared")
    return rep


def piece_index(piece: Piece) -> int:
    return -2 * piece.euler + piece.count("S") + piece.count("A")


def index(q: ParamSurface, data: Optional[SuturedData] = None) -> int:
    """-2 chi(Q) + |dQ n gamma| + mu(Q), summed over pieces.

    With ``data`` the full parameterizing conditions are enforced first;
    without it only the conditions readable from the words themselves are.
    """
    rep = check_param_conditions(q, data) if data is not None else _structural_report(q)
    if not rep.ok:
        raise PreconditionError("not a parameterizing surface: " + "; ".join(rep.lines()))
    return sum(piece_index(p) for p in q.pieces)


def dehn_surgery_index(closed_euler: int, alpha_intersections: int) -> int:
    """Index of Q = Qbar n N for a closed surface Qbar in a surgered manifold."""
    return -2 * closed_euler + 2 * alpha_intersections


def two_handle_index(capped_euler: int, boundary_count: int, delta: int) -> int:
    """Index after 2-handle addition, in terms of the capped-off surface."""
    return -2 * capped_euler + 2 * boundary_count + boundary_count * delta


ZERO_INDEX_TYPES = ("cancelling", "non_self_amalgamating", "product", "self_amalgamating")


def classify_zero_index_disc(word) -> str:
    """Name the index-zero disc type of a disc's boundary word, or ``"none"``."""
    if isinstance(word, Piece):
        if not word.is_disc:
            raise PreconditionError("classification applies to disc pieces only")
        (word,) = word.words
    w = tuple(word)
    if len(w) != 2:
        return "none"
    kinds = sorted(l.kind for l in w)
    if kinds == ["A", "S"]:
        return "cancelling"
    if kinds == ["S", "S"]:
        return "product"
    if kinds == ["A", "A"]:
        return "self_amalgamating" if w[0].ref == w[1].ref else "non_self_amalgamating"
    return "none"

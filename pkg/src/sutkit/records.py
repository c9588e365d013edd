"""Reading and writing structured-text records.

Files are JSON (any YAML flow document is also accepted) holding one
top-level mapping with ``"version": 1`` and a ``"kind"``.  Parsing goes
through the YAML node tree so every diagnostic can name the line of the
offending field.
"""
from __future__ import annotations

import json
from typing import Any, Optional

import yaml

from .cobordism import TubeCompressionData
from .errors import RecordError, SutkitError
from .fatgraph.graph import FatGraph, Vertex
from .harness.scenarios import FLAGS, Scenario
from .slopes import OrientedMulticurve
from .surfaces import SurfaceSpec
from .sutured import (
    BetaArc,
    BoundaryPattern,
    Letter,
    ParamSurface,
    Piece,
    Region,
    Suture,
    SuturedData,
)

VERSION = 1


class _Doc:
    """Plain data plus the line on which each path starts."""

    def __init__(self, text: str, path: Optional[str]):
        self.path = path
        self.lines: dict[tuple, int] = {}
        try:
            loader = yaml.SafeLoader(text)
            try:
                node = loader.get_single_node()
            finally:
                loader.dispose()
        except yaml.YAMLError as exc:
            mark = getattr(exc, "problem_mark", None)
            line = mark.line + 1 if mark is not None else None
            raise RecordError(f"malformed file: {getattr(exc, 'problem', exc)}", path, line) from None
        if node is None:
            raise RecordError("empty file", path, 1)
        self.loader = yaml.SafeLoader("")
        self.data = self._walk(node, ())

    def _walk(self, node, at: tuple):
        self.lines[at] = node.start_mark.line + 1
        if isinstance(node, yaml.MappingNode):
            out = {}
            for k, v in node.value:
                key = self.loader.construct_object(k)
                if not isinstance(key, str):
                    raise RecordError("keys must be strings", self.path, k.start_mark.line + 1)
                if key in out:
                    raise RecordError("duplicate key", self.path, k.start_mark.line + 1, key)
                out[key] = self._walk(v, at + (key,))
            return out
        if isinstance(node, yaml.SequenceNode):
            return [self._walk(v, at + (i,)) for i, v in enumerate(node.value)]
        return self.loader.construct_object(node)

    def error(self, at: tuple, msg: str) -> RecordError:
        line = None
        probe = at
        while probe not in self.lines and probe:
            probe = probe[:-1]
        line = self.lines.get(probe)
        return RecordError(msg, self.path, line, _field_name(at))


def _field_name(at: tuple) -> Optional[str]:
    out = ""
    for p in at:
        out += f"[{p}]" if isinstance(p, int) else (f".{p}" if out else str(p))
    return out or None


class _Fields:
    """Typed access to one mapping of a document."""

    def __init__(self, doc: _Doc, at: tuple, value):
        if not isinstance(value, dict):
            raise doc.error(at, "expected a mapping")
        self.doc, self.at, self.value = doc, at, value

    def get(self, key: str, kind=None, default: Any = ..., check=None):
        if key not in self.value:
            if default is ...:
                raise self.doc.error(self.at + (key,), "missing")
            return default
        v = self.value[key]
        if kind is not None and not _is(v, kind):
            raise self.doc.error(self.at + (key,), f"expected {_kind_name(kind)}, got {v!r}")
        if check is not None:
            msg = check(v)
            if msg:
                raise self.doc.error(self.at + (key,), msg)
        return v

    def sub(self, key: str, index: Optional[int] = None) -> "_Fields":
        at = self.at + (key,) if index is None else self.at + (key, index)
        v = self.value[key] if index is None else self.value[key][index]
        return _Fields(self.doc, at, v)

    def error(self, key, msg: str) -> RecordError:
        path = key if isinstance(key, tuple) else (key,)
        return self.doc.error(self.at + path, msg)


def _is(v, kind) -> bool:
    if kind is int:
        return isinstance(v, int) and not isinstance(v, bool)
    return isinstance(v, kind)


def _kind_name(kind) -> str:
    names = {int: "an integer", str: "a string", list: "a list", bool: "true or false", dict: "a mapping"}
    if isinstance(kind, tuple):
        return " or ".join(names.get(k, k.__name__) for k in kind)
    return names.get(kind, kind.__name__)


def _nonneg(v) -> Optional[str]:
    return None if v >= 0 else "must be nonnegative"


def _positive(v) -> Optional[str]:
    return None if v >= 1 else "must be positive"


# ---------------------------------------------------------------- graphs


def _sign(v) -> int:
    return {"+": 1, "-": -1, 1: 1, -1: -1}[v]


def _slot_end(f: _Fields, key, value) -> tuple:
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not _is(value[1], int)
        or isinstance(value[0], (list, dict))
    ):
        raise f.error(key, f"expected [vertex, slot], got {value!r}")
    return (value[0], value[1])


def graph_from_fields(f: _Fields) -> FatGraph:
    ambient = f.get("ambient", str, check=lambda v: None if v in ("disc", "sphere") else "must be 'disc' or 'sphere'")
    mu = f.get("mu", int, check=_positive)
    gabai = f.get("gabai", bool, False)
    sutures = f.get("suture_circles", int, 0, check=_nonneg)
    vertices = []
    for i, _ in enumerate(f.get("vertices", list)):
        vf = f.sub("vertices", i)
        vid = vf.get("id", (int, str))
        sign = vf.get("sign", (str, int), "+", check=lambda v: None if v in ("+", "-", 1, -1) else "must be '+' or '-'")
        region = vf.get("region", (str, int), None, check=lambda v: None if v in ("+", "-", 1, -1) else "must be '+' or '-'")
        degree = vf.get("degree", int, None, check=_nonneg)
        face = vf.get("face", list, None)
        vertices.append(
            Vertex(
                vid,
                _sign(sign),
                None if region is None else _sign(region),
                degree,
                None if face is None else _slot_end(vf, "face", face),
            )
        )
    interior = []
    for i, e in enumerate(f.get("interior_edges", list, [])):
        if not isinstance(e, list) or len(e) != 2:
            raise f.error(("interior_edges", i), "expected [[v, slot], [w, slot]]")
        interior.append(tuple(_slot_end(f, ("interior_edges", i, k), e[k]) for k in range(2)))
    boundary = []
    for i, _ in enumerate(f.get("boundary_edges", list, [])):
        bf = f.sub("boundary_edges", i)
        end = _slot_end(bf, "end", bf.get("end", list))
        boundary.append((end, bf.get("boundary_pos", int)))
    face = f.get("boundary_face", list, None)
    try:
        g = FatGraph(
            ambient,
            mu,
            tuple(vertices),
            tuple(interior),
            tuple(boundary),
            gabai,
            sutures,
            None if face is None else _slot_end(f, "boundary_face", face),
        )
        g.embedding
    except SutkitError as exc:
        raise f.doc.error(f.at, str(exc)) from None
    return g


def graph_to_record(g: FatGraph) -> dict:
    verts = []
    for v in g.vertices:
        rec = {"id": v.id, "sign": "+" if v.sign > 0 else "-"}
        if v.region is not None:
            rec["region"] = "+" if v.region > 0 else "-"
        if v.degree is not None:
            rec["degree"] = v.degree
        if v.face is not None:
            rec["face"] = list(v.face)
        verts.append(rec)
    rec = {
        "version": VERSION,
        "kind": "graph",
        "ambient": g.ambient,
        "mu": g.mu,
        "gabai": g.gabai,
        "suture_circles": g.suture_circles,
        "vertices": verts,
        "interior_edges": [[list(a), list(b)] for a, b in g.interior_edges],
        "boundary_edges": [{"end": list(a), "boundary_pos": p} for a, p in g.boundary_edges],
    }
    if g.boundary_face is not None:
        rec["boundary_face"] = list(g.boundary_face)
    return rec


# ---------------------------------------------------------------- sutured data


def sutured_from_fields(f: _Fields) -> SuturedData:
    comps = []
    for i, _ in enumerate(f.get("boundary_components", list, [])):
        cf = f.sub("boundary_components", i)
        regions = []
        for j, _ in enumerate(cf.get("regions", list, [])):
            rf = cf.sub("regions", j)
            regions.append(
                Region(
                    str(rf.get("id", (str, int))),
                    rf.get("sign", str),
                    rf.get("genus", int, 0),
                    tuple(str(c) for c in rf.get("circles", list, [])),
                )
            )
        sutures = []
        for j, _ in enumerate(cf.get("sutures", list, [])):
            sf = cf.sub("sutures", j)
            sutures.append(Suture(str(sf.get("id", (str, int))), str(sf.get("minus", (str, int))), str(sf.get("plus", (str, int)))))
        comps.append(BoundaryPattern(tuple(regions), tuple(sutures)))
    arcs = []
    for i, _ in enumerate(f.get("beta_arcs", list, [])):
        af = f.sub("beta_arcs", i)
        arcs.append(BetaArc(str(af.get("id", (str, int))), str(af.get("minus", (str, int))), str(af.get("plus", (str, int)))))
    loops = f.get("beta_loops", (int, list), 0)
    if isinstance(loops, int):
        if loops < 0:
            raise f.error("beta_loops", "must be nonnegative")
        loops = tuple(f"loop{k + 1}" for k in range(loops))
    else:
        loops = tuple(str(x) for x in loops)
    return SuturedData(
        tuple(comps),
        tuple(arcs),
        loops,
        f.get("irreducible", bool, True),
        f.get("taut_regions", bool, True),
    )


def sutured_to_record(d: SuturedData) -> dict:
    return {
        "version": VERSION,
        "kind": "sutured",
        "boundary_components": [
            {
                "regions": [
                    {"id": r.id, "sign": r.sign, "genus": r.genus, "circles": list(r.circles)} for r in bc.regions
                ],
                "sutures": [{"id": s.id, "minus": s.minus, "plus": s.plus} for s in bc.sutures],
            }
            for bc in d.boundary_components
        ],
        "beta_arcs": [{"id": a.id, "minus": a.minus, "plus": a.plus} for a in d.beta_arcs],
        "beta_loops": list(d.beta_loops),
        "irreducible": d.irreducible,
        "taut_regions": d.taut_regions,
    }


# ---------------------------------------------------------------- surfaces


def _word(f: _Fields, at: tuple, w) -> tuple:
    tokens = w.split() if isinstance(w, str) else w
    if not isinstance(tokens, list):
        raise f.error(at, "a boundary word is a string of tokens or a list of tokens")
    try:
        return tuple(Letter.parse(str(t)) for t in tokens)
    except ValueError as exc:
        raise f.error(at, str(exc)) from None


def param_surface_from_fields(f: _Fields) -> tuple[ParamSurface, Optional[SuturedData]]:
    pieces = []
    for i, _ in enumerate(f.get("pieces", list)):
        pf = f.sub("pieces", i)
        genus = pf.get("genus", int, 0, check=_nonneg)
        words = tuple(_word(pf, ("words", k), w) for k, w in enumerate(pf.get("words", list, [])))
        pieces.append(Piece(genus, words))
    mu = f.get("mu_per_edge", dict, None)
    if mu is not None:
        for k, v in mu.items():
            if not _is(v, int) or v < 0:
                raise f.error(("mu_per_edge", k), "must be a nonnegative integer")
    data = None
    if "sutured" in f.value:
        data = sutured_from_fields(f.sub("sutured"))
    return ParamSurface(tuple(pieces), mu), data


def param_surface_to_record(q: ParamSurface, data: Optional[SuturedData] = None) -> dict:
    rec = {
        "version": VERSION,
        "kind": "param_surface",
        "pieces": [{"genus": p.genus, "words": [" ".join(map(str, w)) for w in p.words]} for p in q.pieces],
    }
    if q.mu_per_edge is not None:
        rec["mu_per_edge"] = dict(q.mu_per_edge)
    if data is not None:
        sub = sutured_to_record(data)
        del sub["version"], sub["kind"]
        rec["sutured"] = sub
    return rec


def surface_from_fields(f: _Fields) -> SurfaceSpec:
    comps = f.get("components", list)
    for i, c in enumerate(comps):
        cf = f.sub("components", i)
        for key in ("g", "b", "punctures"):
            cf.get(key, int, 0, check=_nonneg)
        if "signs" in c:
            cf.get("signs", list)
    try:
        return SurfaceSpec.from_records(comps)
    except SutkitError as exc:
        raise f.error("components", str(exc)) from None


def surface_to_record(s: SurfaceSpec) -> dict:
    return {"version": VERSION, "kind": "surface", "components": s.to_records()}


# ---------------------------------------------------------------- scenarios


def scenario_from_fields(f: _Fields) -> Scenario:
    flags = f.get("flags", (dict, list), {})
    if isinstance(flags, dict):
        for k, v in flags.items():
            if k not in FLAGS:
                raise f.error(("flags", k), "unknown hypothesis flag")
            if not isinstance(v, bool):
                raise f.error(("flags", k), "expected true or false")
        on = frozenset(k for k, v in flags.items() if v)
    else:
        for i, k in enumerate(flags):
            if k not in FLAGS:
                raise f.error(("flags", i), f"unknown hypothesis flag {k!r}")
        on = frozenset(flags)
    try:
        return Scenario(
            f.get("delta", int),
            f.get("surface_kind", str),
            f.get("chi", int),
            f.get("alpha_intersections", int, 0),
            on,
        )
    except SutkitError as exc:
        raise f.doc.error(f.at, str(exc)) from None


def scenario_to_record(s: Scenario) -> dict:
    return {"version": VERSION, "kind": "scenario", **s.to_record()}


def multicurve_from_fields(f: _Fields) -> OrientedMulticurve:
    terms = f.get("terms", list)
    for i, _ in enumerate(terms):
        tf = f.sub("terms", i)
        tf.get("slope", str)
        tf.get("mult", int)
        tf.get("orient", int)
    try:
        return OrientedMulticurve.from_records(terms)
    except SutkitError as exc:
        raise f.error("terms", str(exc)) from None


def cobordism_from_fields(f: _Fields) -> TubeCompressionData:
    a = f.get("a", list, [])
    for i, x in enumerate(a):
        if not _is(x, int):
            raise f.error(("a", i), "expected an integer")
    try:
        return TubeCompressionData(
            f.get("genus", int, 0),
            f.get("surface_kind", str),
            f.get("q", int),
            tuple(a),
            f.get("alpha_intersections", int, None),
            f.get("boundary_count", int, 0),
            f.get("p", int, None),
        )
    except SutkitError as exc:
        raise f.doc.error(f.at, str(exc)) from None


def graph_to_dot(g: FatGraph) -> str:
    """Dot-language sketch of a graph; slot labels sit on the edge ends."""
    out = ["graph G {"]
    for v in g.vertices:
        sign = "+" if v.sign > 0 else "-"
        out.append(f'  "{v.id}" [label="{v.id} ({sign})"];')
    if g.boundary_edges:
        for _, pos in g.boundary_edges:
            out.append(f'  "b{pos}" [shape=point];')
    for a, b in g.interior_edges:
        out.append(f'  "{a[0]}" -- "{b[0]}" [taillabel="{a[1]}", headlabel="{b[1]}"];')
    for a, pos in g.boundary_edges:
        out.append(f'  "{a[0]}" -- "b{pos}" [taillabel="{a[1]}"];')
    out.append("}")
    return "\n".join(dict.fromkeys(out)) + "\n"


# ---------------------------------------------------------------- entry points

READERS = {
    "graph": graph_from_fields,
    "sutured": sutured_from_fields,
    "surface": surface_from_fields,
    "param_surface": param_surface_from_fields,
    "scenario": scenario_from_fields,
    "multicurve": multicurve_from_fields,
    "cobordism": cobordism_from_fields,
}


def loads(text: str, path: Optional[str] = None, expect: Optional[str] = None):
    """Parse one record and return ``(kind, value)``."""
    doc = _Doc(text, path)
    f = _Fields(doc, (), doc.data)
    version = f.get("version", int)
    if version != VERSION:
        raise f.error("version", f"unsupported version {version}; this reader understands {VERSION}")
    kind = f.get("kind", str, check=lambda v: None if v in READERS else f"unknown kind; expected one of {', '.join(READERS)}")
    if expect is not None and kind != expect:
        raise f.error("kind", f"expected a {expect} record, got {kind}")
    return kind, READERS[kind](f)


def load(path: str, expect: Optional[str] = None):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise RecordError(exc.strerror or str(exc), path) from None
    return loads(text, path, expect)


def dumps(record: dict) -> str:
    return json.dumps(record, indent=2, sort_keys=False) + "\n"

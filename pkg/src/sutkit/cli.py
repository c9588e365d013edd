"""Command-line front end.

Exit status is 0 on success, 1 when a check finds violations, failures or
an inapplicable theorem, and 2 on unreadable input or bad usage.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import records
from .cobordism import TubeCompressionData, cobordism_homology
from .errors import NoScharlemannCycle, NotAGabaiGraph, PreconditionError, RecordError, SutkitError
from .fatgraph.cycles import scharlemann_search
from .fatgraph.graph import admissible
from .harness.connectivity import ConnectivityFamily, verify_connectivity_dichotomy
from .harness.scenarios import FLAGS, Scenario, scenario_report
from .harness.verify import verify_lambda_cycle_existence, verify_scharlemann_existence
from .slopes import Slope, delta
from .surfaces import Component, SurfaceSpec, beta_norm, euler, thurston_norm
from .sutured import check_param_conditions, index


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Output:
    def __init__(self, fmt: str, stream):
        self.fmt, self.stream = fmt, stream

    def emit(self, lines: Sequence[str], record: dict):
        if self.fmt == "records":
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            for line in lines:
                self.stream.write(line + "\n")


def _components(items: Sequence[str]) -> SurfaceSpec:
    comps = []
    for item in items:
        try:
            parts = [int(x) for x in item.split(":")]
        except ValueError:
            raise UsageError(f"bad component {item!r}; expected g:b[:punctures]") from None
        if not 2 <= len(parts) <= 3:
            raise UsageError(f"bad component {item!r}; expected g:b[:punctures]")
        comps.append(Component(*parts))
    return SurfaceSpec(tuple(comps))


# ---------------------------------------------------------------- commands


def cmd_slope_delta(a, out: Output) -> int:
    s1, s2 = Slope.parse(a.first), Slope.parse(a.second)
    d = delta(s1, s2)
    out.emit([str(d)], {"first": str(s1), "second": str(s2), "delta": d})
    return 0


def cmd_norm(a, out: Output) -> int:
    if a.file:
        spec = records.load(a.file, "surface")[1]
    elif a.component:
        spec = _components(a.component)
    else:
        raise UsageError("give a surface file or at least one --component")
    vals = {"euler": euler(spec), "thurston_norm": thurston_norm(spec), "beta_norm": beta_norm(spec)}
    out.emit([f"{k.replace('_', ' ')} = {v}" for k, v in vals.items()], vals)
    return 0


def cmd_index(a, out: Output) -> int:
    q, data = records.load(a.file, "param_surface")[1]
    if data is not None:
        rep = check_param_conditions(q, data)
        if not rep.ok:
            out.emit(rep.lines(), {"ok": False, "violations": [str(v) for v in rep.violations]})
            return 1
    try:
        value = index(q, data)
    except PreconditionError as exc:
        out.emit([str(exc)], {"ok": False, "violations": [str(exc)]})
        return 1
    out.emit([str(value)], {"ok": True, "index": value})
    return 0


def cmd_graph_check(a, out: Output) -> int:
    g = records.load(a.file, "graph")[1]
    rep = admissible(g)
    emb = g.embedding
    stats = {
        "vertices": len(g.vertices),
        "edges": g.edge_count,
        "faces": len(emb.faces),
        "euler": emb.euler(),
    }
    lines = [f"{k} = {v}" for k, v in stats.items()]
    lines += rep.lines() if not rep.ok else ["admissible"]
    out.emit(lines, {"ok": rep.ok, **stats, "violations": [str(v) for v in rep.violations]})
    if a.dot:
        with open(a.dot, "w", encoding="utf-8") as fh:
            fh.write(records.graph_to_dot(g))
    return 0 if rep.ok else 1


def cmd_graph_scharlemann(a, out: Output) -> int:
    g = records.load(a.file, "graph")[1]
    try:
        res = scharlemann_search(g)
    except (NoScharlemannCycle, NotAGabaiGraph) as exc:
        out.emit([f"no Scharlemann cycle: {exc}"], {"ok": False, "error": str(exc)})
        return 1
    c = res.cycle
    lines = [str(c)]
    if res.first != c:
        lines.append(f"first cycle found: {res.first}")
    rec = {
        "ok": True,
        "length": c.length,
        "tail_label": c.tail_label,
        "steps": [list(s) for s in c.steps],
        "refined": res.first != c,
    }
    out.emit(lines, rec)
    return 0


def cmd_cobordism(a, out: Output) -> int:
    if a.file:
        d = records.load(a.file, "cobordism")[1]
    else:
        if a.q is None or a.kind is None:
            raise UsageError("give a cobordism file or --kind and --q")
        d = TubeCompressionData(a.genus, a.kind, a.q, tuple(a.a), a.alpha, a.boundary, a.p)
    rep = cobordism_homology(d)
    out.emit(rep.lines(), rep.to_record())
    return 0


def cmd_verify(a, out: Output) -> int:
    if a.check == "connectivity":
        fam = ConnectivityFamily(
            arcs=tuple(a.arcs),
            mu=tuple(a.mu) if a.mu else ConnectivityFamily().mu,
            excess=a.excess,
        )
        rep = verify_connectivity_dichotomy(fam)
    else:
        run = verify_scharlemann_existence if a.check == "scharlemann" else verify_lambda_cycle_existence
        mus = a.mu or [2, 3, 4]
        for m in mus:
            if m < 1:
                raise UsageError("--mu values must be positive")
        rep = run(
            a.max_v,
            mus,
            max_boundary=a.max_boundary,
            jobs=a.jobs,
            seed=a.seed,
            artifact_dir=a.artifact_dir,
        )
    out.emit(rep.lines(a.timing), rep.to_record(a.timing))
    return 0 if rep.ok else 1


def cmd_scenario(a, out: Output) -> int:
    if a.file:
        s = records.load(a.file, "scenario")[1]
    else:
        if a.delta is None or a.kind is None or a.chi is None:
            raise UsageError("give a scenario file or --delta, --kind and --chi")
        flags = set(FLAGS) if a.all_flags else set()
        for f in a.flag or []:
            if f not in FLAGS:
                raise UsageError(f"unknown flag {f!r}")
            flags.add(f)
        for f in a.unset or []:
            flags.discard(f)
        s = Scenario(a.delta, a.kind, a.chi, a.alpha, frozenset(flags))
    o = scenario_report(s)
    rec = {
        "applicable": o.applicable,
        "conclusion": o.conclusion,
        "failed_flag": o.failed_flag,
        "surgery_inequality": o.inequality,
    }
    out.emit(o.lines(), rec)
    return 0 if o.applicable else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    # the subcommand copy must not overwrite a value given before the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default=argparse.SUPPRESS)

    p = _Parser(prog="sutkit", description="Sutured manifold and fat graph checks.")
    p.add_argument("--format", choices=("text", "records"), default="text")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("slope-delta", parents=[common], help="distance between two slopes p/q")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_slope_delta)

    s = sub.add_parser("norm", parents=[common], help="Euler characteristic and norms of a surface")
    s.add_argument("file", nargs="?")
    s.add_argument("-c", "--component", action="append", help="g:b[:punctures], repeatable")
    s.set_defaults(func=cmd_norm)

    s = sub.add_parser("index", parents=[common], help="index of a parameterizing surface")
    s.add_argument("file")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("graph-check", parents=[common], help="admissibility of a fat graph")
    s.add_argument("file")
    s.add_argument("--dot", help="also write a dot-language drawing here")
    s.set_defaults(func=cmd_graph_check)

    s = sub.add_parser("graph-scharlemann", parents=[common], help="find a Scharlemann cycle")
    s.add_argument("file")
    s.set_defaults(func=cmd_graph_scharlemann)

    s = sub.add_parser("cobordism", parents=[common], help="homology of a tube-compression cobordism")
    s.add_argument("file", nargs="?")
    s.add_argument("--kind", choices=("sphere", "disc", "closed_genus_g", "bounded"))
    s.add_argument("--genus", type=int, default=0)
    s.add_argument("--q", type=int)
    s.add_argument("--a", type=int, nargs="*", default=[])
    s.add_argument("--alpha", type=int, help="intersections of Qbar with the core")
    s.add_argument("--boundary", type=int, default=0)
    s.add_argument("--p", type=int)
    s.set_defaults(func=cmd_cobordism)

    s = sub.add_parser("verify", parents=[common], help="exhaustive checks")
    s.add_argument("check", choices=("scharlemann", "lambda", "connectivity"))
    s.add_argument("--max-v", type=int, default=4)
    s.add_argument("--mu", type=int, action="append", help="repeatable; default 2, 3 and 4")
    s.add_argument("--max-boundary", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--artifact-dir")
    s.add_argument("--arcs", type=int, nargs="+", default=[1, 2], help="connectivity: numbers of beta arcs")
    s.add_argument("--excess", type=int, default=1, help="connectivity: extra vertex degree allowed")
    s.add_argument("--timing", action="store_true", help="include wall time")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scenario", parents=[common], help="decision table for the surgery theorems")
    s.add_argument("file", nargs="?")
    s.add_argument("--delta", type=int)
    s.add_argument("--kind", choices=("sphere", "disc", "annulus", "torus", "genus_g"))
    s.add_argument("--chi", type=int)
    s.add_argument("--alpha", type=int, default=0)
    s.add_argument("--flag", action="append", help="hypothesis flag to set, repeatable")
    s.add_argument("--all-flags", action="store_true")
    s.add_argument("--unset", action="append", help="flag to clear after --all-flags")
    s.set_defaults(func=cmd_scenario)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
        if not getattr(a, "func", None):
            raise UsageError("a subcommand is required")
        return a.func(a, Output(a.format, stdout))
    except UsageError as exc:
        stderr.write(f"sutkit: {exc}\n")
        return 2
    except RecordError as exc:
        stderr.write(exc.diagnostic() + "\n")
        return 2
    except SutkitError as exc:
        stderr.write(f"sutkit: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

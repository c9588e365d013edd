"""Exhaustive checks of the cycle lemmas over enumerated Gabai graphs."""
from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..cobordism import scharlemann_cycle_to_cobordism
from ..errors import NoScharlemannCycle, SutkitError
from ..fatgraph.canonical import canonical_code
from ..fatgraph.cycles import find_lambda_cycles, is_scharlemann, scharlemann_search
from ..fatgraph.graph import FatGraph, admissible
from ..surfaces import Component, SurfaceSpec
from .enumerate import enumerate_gabai_graphs


@dataclass
class VerificationReport:
    name: str
    family: dict
    instances: int = 0
    rejected: int = 0
    failures: list = field(default_factory=list)
    counters: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Combine shard reports; the result does not depend on merge order."""
        counters = dict(self.counters)
        for k, v in other.counters.items():
            counters[k] = counters.get(k, 0) + v
        failures = sorted(self.failures + other.failures, key=lambda f: json.dumps(f, sort_keys=True))
        return VerificationReport(
            self.name,
            self.family,
            self.instances + other.instances,
            self.rejected + other.rejected,
            failures,
            counters,
            max(self.wall_time, other.wall_time),
        )

    def bump(self, key: str, by: int = 1):
        self.counters[key] = self.counters.get(key, 0) + by

    def lines(self, timing: bool = False) -> list[str]:
        fam = ", ".join(f"{k}={v}" for k, v in self.family.items())
        out = [f"{self.name}: {fam}", f"instances: {self.instances}"]
        if self.rejected:
            out.append(f"rejected by admissibility: {self.rejected}")
        for k in sorted(self.counters):
            out.append(f"{k}: {self.counters[k]}")
        out.append(f"failures: {len(self.failures)}")
        for f in self.failures:
            out.append(f"failure: {f.get('reason')}")
        if timing:
            out.append(f"wall time: {self.wall_time:.2f}s")
        return out

    def to_record(self, timing: bool = False) -> dict:
        rec = {
            "check": self.name,
            "family": self.family,
            "instances": self.instances,
            "rejected": self.rejected,
            "counters": dict(sorted(self.counters.items())),
            "failures": self.failures,
        }
        if timing:
            rec["wall_time"] = round(self.wall_time, 3)
        return rec


def _graph_record(g: FatGraph) -> dict:
    from ..records import graph_to_record

    return graph_to_record(g)


def _check_scharlemann(g: FatGraph, rep: VerificationReport, rng: random.Random):
    try:
        res = scharlemann_search(g)
    except NoScharlemannCycle as exc:
        rep.failures.append({"reason": f"search failed: {exc}", "graph": _graph_record(g)})
        return
    c = res.cycle
    if not is_scharlemann(g, c):
        rep.failures.append({"reason": f"output is not a Scharlemann cycle: {c}", "graph": _graph_record(g)})
        return
    # the answer must be one of the cycles full enumeration sees, and full
    # enumeration must agree that a Scharlemann cycle exists
    if c not in find_lambda_cycles(g, c.tail_label):
        rep.failures.append({"reason": f"cycle missing from full enumeration: {c}", "graph": _graph_record(g)})
        return
    if res.first != c:
        rep.bump("refined")
    # tube-compression bookkeeping for the cycle just found
    genus = rng.randint(0, 3)
    hits = rng.randint(2, 2 + len(g.vertices))
    cob = scharlemann_cycle_to_cobordism(g, c, SurfaceSpec((Component(genus, 0, hits),)), hits)
    (r,) = cob.r_surface.components
    if r.genus != genus or r.punctures != hits - 2 or cob.h1_rational_rank != 2 * genus:
        rep.failures.append({"reason": f"cobordism bookkeeping broke on {c}", "graph": _graph_record(g)})
    else:
        rep.bump("cobordism bookkeeping checked")


def _check_lambda(g: FatGraph, rep: VerificationReport, rng: random.Random):
    used = {a[1] for a, _ in g.boundary_edges}
    for i in range(1, g.mu + 1):
        if i in used:
            continue
        rep.bump("labels checked")
        if not find_lambda_cycles(g, i):
            rep.failures.append({"reason": f"no lambda_{i} cycle", "graph": _graph_record(g)})


CHECKS = {"scharlemann": _check_scharlemann, "lambda": _check_lambda}
NAMES = {"scharlemann": "Scharlemann cycle existence", "lambda": "lambda-cycle existence"}


def _run_shard(args) -> VerificationReport:
    kind, max_vertices, mus, max_boundary, shard, seed, extra = args
    start = time.perf_counter()
    rep = VerificationReport(
        NAMES[kind],
        {"max_vertices": max_vertices, "mu": list(mus), "max_boundary": max_boundary, "seed": seed},
    )
    check = CHECKS[kind]
    graphs: list[FatGraph] = []
    for mu in mus:
        mb = mu - 1 if max_boundary is None else min(max_boundary, mu - 1)
        graphs.extend(enumerate_gabai_graphs(max_vertices, mu, mb, shard))
    if shard is None or shard[0] == 0:
        graphs.extend(extra)
    for g in graphs:
        rng = random.Random(f"{seed}:{canonical_code(g)}") if kind == "scharlemann" else None
        try:
            if not admissible(g).ok:
                rep.rejected += 1
                continue
        except SutkitError:
            rep.rejected += 1
            continue
        rep.instances += 1
        check(g, rep, rng)
    rep.wall_time = time.perf_counter() - start
    return rep


def _verify(kind, max_vertices, mu, max_boundary, jobs, seed, extra, artifact_dir) -> VerificationReport:
    mus = [mu] if isinstance(mu, int) else list(mu)
    extra = list(extra)
    start = time.perf_counter()
    if jobs <= 1:
        rep = _run_shard((kind, max_vertices, mus, max_boundary, None, seed, extra))
    else:
        tasks = [(kind, max_vertices, mus, max_boundary, (k, jobs), seed, extra) for k in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_run_shard, tasks))
        rep = parts[0]
        for p in parts[1:]:
            rep = rep.merge(p)
    rep.wall_time = time.perf_counter() - start
    if artifact_dir and rep.failures:
        os.makedirs(artifact_dir, exist_ok=True)
        for n, f in enumerate(rep.failures):
            with open(os.path.join(artifact_dir, f"failure-{kind}-{n}.json"), "w") as fh:
                json.dump(f, fh, indent=2, sort_keys=True)
    return rep


def verify_scharlemann_existence(
    max_vertices: int,
    mu,
    max_boundary: Optional[int] = None,
    jobs: int = 1,
    seed: int = 0,
    extra: Iterable[FatGraph] = (),
    artifact_dir: Optional[str] = None,
) -> VerificationReport:
    """Run the search on every enumerated graph and check what it returns.

    ``extra`` graphs are pushed through the same gate; inadmissible ones are
    counted as rejected rather than as failures.
    """
    return _verify("scharlemann", max_vertices, mu, max_boundary, jobs, seed, extra, artifact_dir)


def verify_lambda_cycle_existence(
    max_vertices: int,
    mu,
    max_boundary: Optional[int] = None,
    jobs: int = 1,
    seed: int = 0,
    extra: Iterable[FatGraph] = (),
    artifact_dir: Optional[str] = None,
) -> VerificationReport:
    """Every label missed by the boundary edges carries a lambda-cycle."""
    return _verify("lambda", max_vertices, mu, max_boundary, jobs, seed, extra, artifact_dir)

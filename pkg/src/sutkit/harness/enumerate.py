"""Exhaustive generation of Gabai disc graphs.

Graphs are grown one edge at a time.  The partial map keeps unpaired darts
as dangling half-edges, so two darts may be joined only when they face the
same region or sit in different components; anything else would add a
handle, and genus never goes back down.  New vertices are brought in in
index order, which removes most relabelled copies before the canonical code
removes the rest.

All vertices are generated with sign ``+``.  A graph whose vertices are all
``-`` is the mirror image of one of these, and codes identify mirrors.
"""
from __future__ import annotations

import zlib
from typing import Iterator, Optional

from ..errors import PreconditionError
from ..fatgraph.canonical import RawGraph, canonical_code_raw, graph_from_raw
from ..fatgraph.graph import DISC, FatGraph


class _Partial:
    def __init__(self, n: int, mu: int, b: int):
        self.n, self.mu, self.b = n, mu, b
        nv = n * mu
        self.nv = nv
        total = nv + 3 * b
        self.alpha = [-1] * total
        self.sigma = [0] * total
        self.node = [0] * total
        for v in range(n):
            for s in range(mu):
                d = v * mu + s
                self.sigma[d] = v * mu + (s + 1) % mu
                self.node[d] = v
        for k in range(b):
            nxt, inn, prv = nv + 3 * k, nv + 3 * k + 1, nv + 3 * k + 2
            self.sigma[nxt], self.sigma[inn], self.sigma[prv] = inn, prv, nxt
            self.node[nxt] = self.node[inn] = self.node[prv] = n + k
        for k in range(b):
            a, c = nv + 3 * k, nv + 3 * ((k + 1) % b) + 2
            self.alpha[a], self.alpha[c] = c, a
        self.touched = [False] * (n + b)
        if b:
            for k in range(b):
                self.touched[n + k] = True
        else:
            self.touched[0] = True

    def phi(self, d: int) -> int:
        a = self.alpha[d]
        return self.sigma[d] if a < 0 else self.sigma[a]

    def same_face(self, d1: int, d2: int) -> bool:
        x = self.phi(d1)
        while x != d1:
            if x == d2:
                return True
            x = self.phi(x)
        return False

    def same_component(self, d1: int, d2: int) -> bool:
        target = self.node[d2]
        start = self.node[d1]
        if start == target:
            return True
        seen = {start}
        stack = [start]
        mu, nv, n = self.mu, self.nv, self.n
        while stack:
            x = stack.pop()
            darts = range(x * mu, x * mu + mu) if x < n else range(nv + 3 * (x - n), nv + 3 * (x - n) + 3)
            for d in darts:
                a = self.alpha[d]
                if a >= 0:
                    y = self.node[a]
                    if y == target:
                        return True
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return False

    def is_boundary_in(self, d: int) -> bool:
        return d >= self.nv and (d - self.nv) % 3 == 1


def _raw_graphs(n: int, mu: int, b: int) -> Iterator[RawGraph]:
    pm = _Partial(n, mu, b)
    nv = pm.nv
    free = [d for d in range(nv)] + [nv + 3 * k + 1 for k in range(b)]

    def lowest():
        for d in free:
            if pm.alpha[d] < 0 and pm.touched[pm.node[d]]:
                return d
        return None

    def candidates(d):
        first_new = next((v for v in range(n) if not pm.touched[v]), None)
        for e in free:
            if e == d or pm.alpha[e] >= 0:
                continue
            x = pm.node[e]
            if pm.is_boundary_in(d) and pm.is_boundary_in(e):
                continue
            if d < nv and e < nv and d % mu == e % mu:
                continue  # equal labels at both ends
            if x < n and not pm.touched[x]:
                if x != first_new:
                    continue
                yield e
            elif pm.same_face(d, e) or not pm.same_component(d, e):
                yield e

    def rec(remaining: int):
        if remaining == 0:
            if all(pm.touched[:n]):
                yield from _finish(pm)
            return
        d = lowest()
        if d is None:
            return
        for e in list(candidates(d)):
            x = pm.node[e]
            was = pm.touched[x]
            pm.alpha[d], pm.alpha[e] = e, d
            pm.touched[x] = True
            yield from rec(remaining - 2)
            pm.alpha[d] = pm.alpha[e] = -1
            pm.touched[x] = was

    total = nv + b
    if total % 2:
        return
    yield from rec(total)


def _finish(pm: _Partial) -> Iterator[RawGraph]:
    n, mu, b, nv = pm.n, pm.mu, pm.b, pm.nv
    part = [[None] * mu for _ in range(n)]
    boundary = [None] * b
    for v in range(n):
        for s in range(mu):
            a = pm.alpha[v * mu + s]
            if a < nv:
                part[v][s] = (a // mu, a % mu + 1)
            else:
                k = (a - nv) // 3
                part[v][s] = (-1, k)
                boundary[k] = (v, s + 1)
    signs = (1,) * n
    frozen = tuple(tuple(r) for r in part)
    if b:
        yield RawGraph(DISC, mu, signs, frozen, tuple(boundary))
        return
    seen = set()
    for d in range(nv):
        if d in seen:
            continue
        x = d
        while True:
            seen.add(x)
            x = pm.phi(x)
            if x == d:
                break
        yield RawGraph(DISC, mu, signs, frozen, (), (d // mu, d % mu + 1))


def _boundary_counts(n: int, mu: int, max_boundary: int) -> list[int]:
    return [b for b in range(max_boundary + 1) if (n * mu - b) % 2 == 0]


def enumerate_raw(max_vertices: int, mu: int, max_boundary_edges: int) -> list[tuple[tuple, RawGraph]]:
    """Unique ``(code, raw graph)`` pairs, sorted by vertex count, boundary count, code."""
    if max_boundary_edges >= mu:
        raise PreconditionError(
            f"a Gabai disc meets Q fewer than mu={mu} times; max_boundary_edges={max_boundary_edges} is too large"
        )
    if max_boundary_edges < 0 or max_vertices < 0 or mu < 1:
        raise PreconditionError("bounds must be nonnegative and mu positive")
    out = []
    for n in range(1, max_vertices + 1):
        for b in _boundary_counts(n, mu, max_boundary_edges):
            found = {}
            for r in _raw_graphs(n, mu, b):
                code = canonical_code_raw(r)
                if code not in found:
                    found[code] = r
            out.extend(sorted(found.items(), key=lambda kv: kv[0]))
    return out


def shard_of(code: tuple, shards: int) -> int:
    """Stable shard index of a canonical code."""
    return zlib.crc32(repr(code).encode()) % shards


def enumerate_gabai_graphs(
    max_vertices: int,
    mu: int,
    max_boundary_edges: int,
    shard: Optional[tuple[int, int]] = None,
) -> Iterator[FatGraph]:
    """Every admissible Gabai disc graph within the bounds, once up to isomorphism.

    ``shard=(k, m)`` keeps only the graphs whose code falls in shard ``k`` of ``m``.
    """
    for code, r in enumerate_raw(max_vertices, mu, max_boundary_edges):
        if shard is not None and shard_of(code, shard[1]) != shard[0]:
            continue
        yield graph_from_raw(r, gabai=True)

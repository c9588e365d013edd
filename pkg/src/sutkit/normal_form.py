"""Integer normal form and finitely generated abelian groups."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np


@dataclass(frozen=True, order=True)
class AbelianGroup:
    """``Z^free_rank`` plus cyclic factors of the listed orders (each at least 2)."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    @property
    def trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def smith_diagonal(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix, each dividing the next."""
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for r in a:
            r[t], r[j] = r[j], r[t]
        while True:
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    for r in a:
                        r[j] -= q * r[t]
                if a[t][j]:
                    done = False
            if done:
                # the pivot must divide everything left over
                bad = next(
                    ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest nonzero entry of row t / column t to the pivot
            best = (abs(a[t][t]), t, t)
            for i in range(t + 1, m):
                if a[i][t] and abs(a[i][t]) < best[0]:
                    best = (abs(a[i][t]), i, t)
            for j in range(t + 1, n):
                if a[t][j] and abs(a[t][j]) < best[0]:
                    best = (abs(a[t][j]), t, j)
            _, i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
            if j != t:
                for r in a:
                    r[t], r[j] = r[j], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def quotient_group(generators: int, relations: Sequence[Sequence[int]]) -> AbelianGroup:
    """``Z^generators`` modulo the row span of ``relations``."""
    diag = smith_diagonal(relations) if relations else []
    return AbelianGroup(generators - len(diag), tuple(d for d in diag if d > 1))


def single_relation_batch(rel: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Free rank and torsion order for many one-relation presentations at once.

    Row ``k`` of ``rel`` is a relation on ``rel.shape[1]`` generators.  The
    torsion order is 1 when the quotient is torsion-free.
    """
    rel = np.asarray(rel)
    g = np.gcd.reduce(np.abs(rel), axis=1)
    nonzero = g > 0
    free = np.where(nonzero, rel.shape[1] - 1, rel.shape[1])
    order = np.where(nonzero, g, 1)
    return free, order


def relation_gcd(values: Sequence[int]) -> int:
    out = 0
    for v in values:
        out = gcd(out, v)
    return out

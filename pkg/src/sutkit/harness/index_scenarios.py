"""Random parameterizing surfaces built from closed or capped surfaces.

Two constructions are produced, each returning the surface, the sutured data
it lives in, and the numbers needed to predict its index independently:

* surgery on a knot: a closed surface punctured where it meets the core of
  the surgery torus, each puncture a circle on the knot's neighbourhood;
* 2-handle addition: a surface whose boundary curves each cross the cocore
  of the handle ``delta`` times.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from ..sutured import (
    A,
    BetaArc,
    BoundaryPattern,
    C,
    ParamSurface,
    Piece,
    Region,
    Suture,
    SuturedData,
)

KNOT = "knot"
COCORE = "cocore"


@dataclass(frozen=True)
class SurgeryScenario:
    surface: ParamSurface
    data: SuturedData
    closed_euler: int
    alpha_intersections: int


@dataclass(frozen=True)
class TwoHandleScenario:
    surface: ParamSurface
    data: SuturedData
    capped_euler: int
    boundary_count: int
    delta: int


def surgery_data() -> SuturedData:
    return SuturedData(beta_loops=(KNOT,))


def two_handle_data() -> SuturedData:
    pattern = BoundaryPattern(
        regions=(Region("Rm", "-", 0, ("b",)), Region("Rp", "+", 0, ("b",))),
        sutures=(Suture("b", "Rm", "Rp"),),
    )
    return SuturedData((pattern,), (BetaArc(COCORE, "Rm", "Rp"),))


def surgery_scenario(rng: random.Random, max_pieces: int = 3, max_genus: int = 3, max_punctures: int = 5) -> SurgeryScenario:
    pieces = []
    chi = 0
    hits = 0
    for _ in range(rng.randint(1, max_pieces)):
        while True:
            g = rng.randint(0, max_genus)
            n = rng.randint(0, max_punctures)
            # a sphere is not allowed, and a once-punctured sphere is a meridian disc
            if not (g == 0 and n <= 1):
                break
        pieces.append(Piece(g, tuple((C(KNOT),) for _ in range(n))))
        chi += 2 - 2 * g
        hits += n
    return SurgeryScenario(ParamSurface(tuple(pieces)), surgery_data(), chi, hits)


def two_handle_scenario(rng: random.Random, max_pieces: int = 3, max_genus: int = 3, max_boundary: int = 4, max_delta: int = 6) -> TwoHandleScenario:
    # a closed curve meeting a single suture crosses it an even number of times
    delta = 2 * rng.randint(1, max_delta // 2)
    pieces = []
    chi = 0
    count = 0
    for _ in range(rng.randint(1, max_pieces)):
        g = rng.randint(0, max_genus)
        n = rng.randint(1, max_boundary)
        word = tuple(A(COCORE) for _ in range(delta))
        pieces.append(Piece(g, tuple(word for _ in range(n))))
        chi += 2 - 2 * g
        count += n
    return TwoHandleScenario(ParamSurface(tuple(pieces)), two_handle_data(), chi, count, delta)

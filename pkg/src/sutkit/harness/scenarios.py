"""Decision tables for the two surgery theorems.

Every hypothesis about the 3-manifolds involved is a flag the user asserts;
nothing here checks one.  The tables only say which conclusion the theorems
deliver once the flags are granted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import ScenarioError

KINDS = ("sphere", "disc", "annulus", "torus", "genus_g")

FLAGS = (
    "N_irreducible",
    "N_boundary_irreducible",
    "M_irreducible",
    "H2_nonzero",
    "exceptional_class",
    "M_prime_irreducible",
    "M_prime_atoroidal",
    "boundary_component_bound_ok",
    "assumptions_A_to_D",
)

# hypotheses shared by all four conclusions about M', in the order they are checked
COMMON = ("N_irreducible", "N_boundary_irreducible", "H2_nonzero", "M_irreducible", "exceptional_class")
EXTRA = {
    "disc": (),
    "sphere": (),
    "torus": ("M_prime_irreducible",),
    "annulus": ("M_prime_irreducible", "M_prime_atoroidal", "boundary_component_bound_ok"),
}
EULER = {"sphere": 2, "disc": 1, "annulus": 0, "torus": 0}

HOLDS, VIOLATED = "holds", "violated"

BOUNDARY_IRREDUCIBLE = "boundary-irreducible: M' has no essential disc (contradiction)"
LENS_SUMMAND = "lens space proper summand"
DELTA_ONE = "Delta = 1"
GENUS_TWO_SUBMANIFOLD = "genus-2 submanifold branch (Delta != 1)"
SINGLE_TORUS_GENUS_TWO = "single torus boundary, Heegaard genus 2 branch (Delta != 1)"
NOT_APPLICABLE = "theorem not applicable"


@dataclass(frozen=True)
class Scenario:
    delta: int
    surface_kind: str
    chi: int
    alpha_intersections: int = 0
    flags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "flags", frozenset(self.flags))
        if not isinstance(self.delta, int) or self.delta < 1:
            raise ScenarioError(f"delta must be a positive integer, got {self.delta!r}")
        if self.surface_kind not in KINDS:
            raise ScenarioError(f"surface_kind must be one of {', '.join(KINDS)}")
        if not isinstance(self.alpha_intersections, int) or self.alpha_intersections < 0:
            raise ScenarioError("alpha_intersections must be a nonnegative integer")
        unknown = set(self.flags) - set(FLAGS)
        if unknown:
            raise ScenarioError(f"unknown flags: {', '.join(sorted(unknown))}")
        want = EULER.get(self.surface_kind)
        if want is not None and self.chi != want:
            raise ScenarioError(f"a {self.surface_kind} has Euler characteristic {want}, not {self.chi}")
        if self.surface_kind == "genus_g" and (self.chi > 2 or self.chi % 2):
            raise ScenarioError(f"a closed orientable surface cannot have Euler characteristic {self.chi}")

    def has(self, flag: str) -> bool:
        return flag in self.flags

    def to_record(self) -> dict:
        return {
            "delta": self.delta,
            "surface_kind": self.surface_kind,
            "chi": self.chi,
            "alpha_intersections": self.alpha_intersections,
            "flags": {f: f in self.flags for f in FLAGS},
        }


def check_surgery_inequality(s: Scenario) -> str:
    """``(Delta - 1) |Qbar n alpha| <= -chi(Qbar)``, evaluated as written."""
    return HOLDS if (s.delta - 1) * s.alpha_intersections <= -s.chi else VIOLATED


@dataclass(frozen=True)
class Outcome:
    applicable: bool
    conclusion: str
    failed_flag: Optional[str] = None
    inequality: Optional[str] = None

    def lines(self) -> list[str]:
        out = [f"conclusion: {self.conclusion}"]
        if self.failed_flag:
            out.append(f"missing hypothesis: {self.failed_flag}")
        if self.inequality:
            out.append(f"surgery inequality: {self.inequality}")
        return out


def required_flags(kind: str) -> tuple[str, ...]:
    if kind == "genus_g":
        return ("assumptions_A_to_D",)
    return COMMON + EXTRA[kind]


def scenario_report(s: Scenario) -> Outcome:
    ineq = check_surgery_inequality(s)
    for flag in required_flags(s.surface_kind):
        if not s.has(flag):
            return Outcome(False, NOT_APPLICABLE, flag, ineq)
    kind = s.surface_kind
    if kind == "genus_g":
        # M reducible or an exceptional class
        if s.has("M_irreducible") and not s.has("exceptional_class"):
            return Outcome(False, NOT_APPLICABLE, "exceptional_class", ineq)
        if ineq == HOLDS:
            return Outcome(True, "surgery inequality holds for a rationally essential surface", None, ineq)
        return Outcome(True, "Qbar is rationally inessential (the inequality fails)", None, ineq)
    if kind == "disc":
        return Outcome(True, BOUNDARY_IRREDUCIBLE, None, ineq)
    if kind == "sphere":
        return Outcome(True, LENS_SUMMAND, None, ineq)
    if kind == "torus":
        return Outcome(True, DELTA_ONE if s.delta == 1 else GENUS_TWO_SUBMANIFOLD, None, ineq)
    return Outcome(True, DELTA_ONE if s.delta == 1 else SINGLE_TORUS_GENUS_TWO, None, ineq)

"""Multiplicity vectors over a fixed generator list, and membership verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .rationals import Vec2

__all__ = [
    "Factorization",
    "Membership",
    "apply_mults",
    "PHI_OUT_OF_RANGE",
    "DIVISIBILITY_FAILS",
    "X_NOT_REPRESENTABLE",
]

# Reason codes for not-member verdicts.
PHI_OUT_OF_RANGE = "PhiOutOfRange"
DIVISIBILITY_FAILS = "DivisibilityFails"
X_NOT_REPRESENTABLE = "XNotRepresentable"


def apply_mults(gens: Sequence[Vec2], mults: Sequence[int]) -> Vec2:
    """Evaluate the factorization homomorphism: sum of mults[i] * gens[i]."""
    x = 0
    y = 0
    for g, m in zip(gens, mults):
        x += m * g.x
        y += m * g.y
    return Vec2(x, y)


@dataclass(frozen=True)
class Factorization:
    """One factorization: how many copies of each generator are used."""

    mults: tuple[int, ...]

    def __post_init__(self):
        if len(self.mults) < 1:
            raise ValueError("a factorization needs at least one multiplicity")
        if any(m < 0 for m in self.mults):
            raise ValueError(f"multiplicities must be nonnegative: {self.mults}")

    @property
    def length(self) -> int:
        return sum(self.mults)

    @classmethod
    def checked(cls, mults: Sequence[int], gens: Sequence[Vec2], target: Vec2) -> "Factorization":
        """Construct and verify that the multiplicities really hit the target."""
        if len(mults) != len(gens):
            raise ValueError("one multiplicity per generator required")
        got = apply_mults(gens, mults)
        if got != target:
            raise ValueError(f"multiplicities {tuple(mults)} map to {got}, not {target}")
        return cls(tuple(mults))


@dataclass(frozen=True)
class Membership:
    """Outcome of a membership test.

    ``factorization`` is the canonical witness when one is computed;
    ``factorizations`` is the complete list when the solver enumerates all of
    them (None means "not computed", not "none exist").
    """

    member: bool
    factorization: Optional[Factorization] = None
    factorizations: Optional[tuple[Factorization, ...]] = None
    reason: Optional[str] = None

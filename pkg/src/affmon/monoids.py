"""Canonical form for affine submonoids of N0^2 with 2 or 3 generators.

A monoid is described by a list of generators.  Canonicalization applies a
determinant-one change of coordinates (computed by ``row_swapped_hnf``) so
that the generator of least slope becomes (0, 1) and the rest follow in
strictly increasing slope order.  Because the transform is unimodular, all
membership and factorization questions can be answered in the canonical
coordinates: multiplicity vectors are untouched, only the query vector is
mapped through the transform.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import gcd
from typing import Optional, Sequence, Union

from .errors import (
    DuplicateGeneratorError,
    DuplicatePhiError,
    NegativeResultError,
    NormalizationEscapesConeError,
    NotPhiMinimalError,
    ZeroGeneratorError,
)
from .intlin import Mat2xP, UniMat2, row_swapped_hnf
from .oracle import enumerate_factorizations
from .rationals import Vec2, is_phi_minimal, slope_compare

__all__ = [
    "CanonicalMonoid2",
    "CanonicalMonoid3",
    "Monoid",
    "canonicalize",
    "canonical_coords",
    "validate_minimal_generation",
]


@dataclass(frozen=True)
class CanonicalMonoid2:
    """Monoid generated by (0, 1) and (a, b), in canonical coordinates."""

    a: int
    b: int
    transform: UniMat2

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 0:
            raise ValueError("canonical second generator needs a >= 1, b >= 0")
        if gcd(self.a, self.b) != 1:
            raise NotPhiMinimalError(f"({self.a}, {self.b}) has coordinate gcd > 1")

    @property
    def dim(self) -> int:
        return 2

    @property
    def gens(self) -> tuple[Vec2, Vec2]:
        return (Vec2(0, 1), Vec2(self.a, self.b))


@dataclass(frozen=True)
class CanonicalMonoid3:
    """Monoid generated by (0, 1), (a, b), (c, d), in canonical coordinates.

    Slope order is part of the invariant: 0 < a/b < c/d (compared by
    cross-multiplication, so d = 0 meaning infinite slope is fine).
    """

    a: int
    b: int
    c: int
    d: int
    transform: UniMat2

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 0 or self.c < 1 or self.d < 0:
            raise ValueError("canonical generators need a >= 1, c >= 1 and b, d >= 0")
        if gcd(self.a, self.b) != 1:
            raise NotPhiMinimalError(f"({self.a}, {self.b}) has coordinate gcd > 1")
        if gcd(self.c, self.d) != 1:
            raise NotPhiMinimalError(f"({self.c}, {self.d}) has coordinate gcd > 1")
        if self.a * self.d >= self.b * self.c:
            raise ValueError("generators must come in strictly increasing slope order")

    @property
    def dim(self) -> int:
        return 3

    @property
    def star(self) -> bool:
        """Whether b*c - a*d = 1, the hypothesis behind all closed forms."""
        return self.b * self.c - self.a * self.d == 1

    @property
    def gens(self) -> tuple[Vec2, Vec2, Vec2]:
        return (Vec2(0, 1), Vec2(self.a, self.b), Vec2(self.c, self.d))


Monoid = Union[CanonicalMonoid2, CanonicalMonoid3]


def _validate_raw(gens: Sequence[Vec2]) -> tuple[Vec2, ...]:
    out = tuple(gens)
    if len(out) not in (2, 3):
        raise ValueError(f"expected 2 or 3 generators, got {len(out)}")
    seen = set()
    for g in out:
        if g.is_zero:
            raise ZeroGeneratorError("(0, 0) is not a valid generator")
        if not is_phi_minimal(g):
            raise NotPhiMinimalError(f"generator {g} has coordinate gcd > 1")
        if (g.x, g.y) in seen:
            raise DuplicateGeneratorError(f"generator {g} appears twice")
        seen.add((g.x, g.y))
    return out


def canonicalize(gens: Sequence[Vec2]) -> Monoid:
    """Sort the generators by slope and change coordinates to canonical form.

    The returned monoid records the unimodular transform that was applied,
    so callers can map query vectors into canonical coordinates with
    ``canonical_coords``.  Generators that already are canonical come back
    unchanged with the identity transform.
    """
    raw = _validate_raw(gens)
    ordered = sorted(raw, key=functools.cmp_to_key(slope_compare))
    for u, v in zip(ordered, ordered[1:]):
        # Unreachable for phi-minimal distinct vectors (equal slope would
        # force equal vectors), kept as a guard.
        if slope_compare(u, v) == 0:
            raise DuplicatePhiError(f"{u} and {v} have the same slope")
    try:
        transform, canon = row_swapped_hnf(Mat2xP.from_vecs(ordered))
    except NegativeResultError as exc:
        raise NormalizationEscapesConeError(str(exc)) from exc
    vecs = sorted(
        (Vec2(x, y) for x, y in canon.cols),
        key=functools.cmp_to_key(slope_compare),
    )
    if (vecs[0].x, vecs[0].y) != (0, 1):
        raise NormalizationEscapesConeError(f"first canonical generator is {vecs[0]}, not (0, 1)")
    if len(vecs) == 2:
        return CanonicalMonoid2(a=vecs[1].x, b=vecs[1].y, transform=transform)
    return CanonicalMonoid3(
        a=vecs[1].x, b=vecs[1].y, c=vecs[2].x, d=vecs[2].y, transform=transform
    )


def canonical_coords(m: Monoid, s: Vec2) -> Optional[Vec2]:
    """Map a vector given in original coordinates through the transform.

    Returns None when the image leaves N0^2; such a vector cannot belong to
    the monoid, because every member is a nonnegative combination of the
    original generators and those map into N0^2 by construction.
    """
    tx, ty = m.transform.apply(s.x, s.y)
    if tx < 0 or ty < 0:
        return None
    return Vec2(tx, ty)


def validate_minimal_generation(m: Monoid) -> bool:
    """True when no generator is a combination of the remaining generators.

    Decided by brute-force enumeration, which is cheap here: the targets are
    single generators.
    """
    gens = m.gens
    for i, g in enumerate(gens):
        rest = gens[:i] + gens[i + 1 :]
        if enumerate_factorizations(rest, g).member:
            return False
    return True

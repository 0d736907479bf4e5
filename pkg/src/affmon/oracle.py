"""Brute-force factorization oracle.

``enumerate_factorizations`` finds every way to write a target as a
nonnegative integer combination of the given generators by bounded exhaustive
search: the multiplicity of a generator g can never exceed
min(target.x // g.x, target.y // g.y) over the coordinates where g is
positive, so the search space is finite and the enumeration is complete.

This module is deliberately independent of the closed-form solvers -- it
shares only the Vec2/Factorization value types -- so it can serve as ground
truth in tests.  The only liberties taken are orderings and solving the final
one or two multiplicities by divisibility instead of looping, which prunes
nothing that could have succeeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NotMemberError, ZeroElementError, ZeroGeneratorError
from .factorization import Factorization
from .rationals import ExtRat, Vec2

__all__ = ["FactorizationSet", "enumerate_factorizations", "elasticity_oracle"]


@dataclass(frozen=True)
class FactorizationSet:
    """The complete factorization set of one target element."""

    target: Vec2
    facts: tuple[Factorization, ...]

    @property
    def member(self) -> bool:
        return bool(self.facts)

    @property
    def lengths(self) -> tuple[int, ...]:
        """Sorted multiset of factorization lengths."""
        return tuple(sorted(f.length for f in self.facts))


def _bound(rx: int, ry: int, gx: int, gy: int) -> int:
    # Highest multiplicity of (gx, gy) that fits under (rx, ry).
    if gx and gy:
        return min(rx // gx, ry // gy)
    return rx // gx if gx else ry // gy


def _solve_single(rx: int, ry: int, gx: int, gy: int) -> Optional[int]:
    # The unique m with m * (gx, gy) == (rx, ry), if it exists.
    if rx < 0 or ry < 0:
        return None
    if gx:
        if rx % gx:
            return None
        m = rx // gx
        return m if m * gy == ry else None
    if rx:
        return None
    return ry // gy if ry % gy == 0 else None


def _pair_solutions(rx: int, ry: int, g: tuple[int, int], h: tuple[int, int]) -> list[tuple[int, int]]:
    # All (mg, mh) with mg * g + mh * h == (rx, ry).
    gx, gy = g
    hx, hy = h
    if gx > 0 and hx == 0:
        # mg is forced by the x coordinate.
        if rx % gx:
            return []
        mg = rx // gx
        mh = _solve_single(0, ry - mg * gy, hx, hy)
        return [(mg, mh)] if mh is not None and ry - mg * gy >= 0 else []
    if hx > 0 and gx == 0:
        return [(mg, mh) for mh, mg in _pair_solutions(rx, ry, h, g)]
    if gy > 0 and hy == 0:
        # mg is forced by the y coordinate.
        if ry % gy:
            return []
        mg = ry // gy
        mh = _solve_single(rx - mg * gx, 0, hx, hy)
        return [(mg, mh)] if mh is not None and rx - mg * gx >= 0 else []
    if hy > 0 and gy == 0:
        return [(mg, mh) for mh, mg in _pair_solutions(rx, ry, h, g)]
    if gx == 0 and hx == 0 and rx:
        return []
    # Nothing is forced: loop the generator with the smaller range.
    if _bound(rx, ry, hx, hy) < _bound(rx, ry, gx, gy):
        return [(mg, mh) for mh, mg in _pair_solutions(rx, ry, h, g)]
    out = []
    for mg in range(_bound(rx, ry, gx, gy) + 1):
        mh = _solve_single(rx - mg * gx, ry - mg * gy, hx, hy)
        if mh is not None:
            out.append((mg, mh))
    return out


def enumerate_factorizations(gens: Sequence[Vec2], s: Vec2) -> FactorizationSet:
    """Every factorization of s over the given generators.

    Generators must be nonzero; any count >= 1 and any (even equal-slope or
    non-coprime) generators are accepted.  The zero target has exactly the
    empty factorization.  Results are sorted lexicographically by
    multiplicities, in the order the generators were given.
    """
    gens = tuple(gens)
    if not gens:
        raise ValueError("at least one generator required")
    for g in gens:
        if g.is_zero:
            raise ZeroGeneratorError("(0, 0) is not a valid generator")

    # Internal search order: loop generators with positive x first (largest x
    # first, so ranges shrink fastest); leave vertical generators to be solved
    # by divisibility at the end.
    order = sorted(range(len(gens)), key=lambda i: (gens[i].x == 0, -gens[i].x, -gens[i].y))
    cols = [(gens[i].x, gens[i].y) for i in order]
    p = len(cols)
    found: list[tuple[int, ...]] = []

    def search(rx: int, ry: int, depth: int, prefix: tuple[int, ...]) -> None:
        if depth == p - 1:
            m = _solve_single(rx, ry, *cols[depth])
            if m is not None:
                found.append(prefix + (m,))
            return
        if depth == p - 2:
            for mg, mh in _pair_solutions(rx, ry, cols[depth], cols[depth + 1]):
                found.append(prefix + (mg, mh))
            return
        gx, gy = cols[depth]
        for m in range(_bound(rx, ry, gx, gy) + 1):
            search(rx - m * gx, ry - m * gy, depth + 1, prefix + (m,))

    search(s.x, s.y, 0, ())

    facts = []
    for internal in found:
        mults = [0] * p
        for pos, idx in enumerate(order):
            mults[idx] = internal[pos]
        facts.append(tuple(mults))
    facts.sort()
    return FactorizationSet(
        target=s,
        facts=tuple(Factorization.checked(m, gens, s) for m in facts),
    )


def elasticity_oracle(gens: Sequence[Vec2], s: Vec2) -> ExtRat:
    """max length / min length over the enumerated factorization set."""
    if s.is_zero:
        raise ZeroElementError("elasticity of the zero element is undefined")
    fs = enumerate_factorizations(gens, s)
    if not fs.member:
        raise NotMemberError(f"{s} has no factorization")
    lengths = fs.lengths
    return ExtRat(lengths[-1], lengths[0])

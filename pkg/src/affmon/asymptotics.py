"""Elasticity of multiples k*s in star monoids and its k -> infinity limit.

For a member s = (x, y) of a star monoid <(0,1), (a,b), (c,d)> the elasticity
of k*s is eventually periodic in k, and along the right residue classes it is
constant and given by a ratio of linear forms in x and y:

  with a*c | k and x*b <= y*a:   ( c*(y*a - x*(b-1)) / (a*(y*c - x*(d-1))) ) ** tau
  with c | k  and x*b >= y*a:    ( c*(y*(c-a) - x*(d-b)) / (y*c - x*(d-1)) ) ** tau

where tau = sign(c - a - 1) and the exponent -1 means the reciprocal, which
keeps every value >= 1.  The k -> infinity limit of the elasticity equals the
same expressions, so it is a linear fractional transformation of (x, y),
exposed here as ``LimitLFT``.  ``scan_multiples`` tabulates exact values
against the limit for empirical convergence studies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    NotMemberError,
    PeriodicityViolatedError,
    StarRequiredError,
    WrongBranchError,
    ZeroElementError,
)
from .monoids import CanonicalMonoid3
from .rationals import ExtRat, Vec2
from .solve3 import elasticity3, member3_star

__all__ = [
    "LimitLFT",
    "ScanRow",
    "SCAN_CSV_HEADER",
    "tau",
    "rho_special_ac",
    "rho_special_c",
    "rho_limit",
    "scan_multiples",
]

SCAN_CSV_HEADER = "k,rho_exact,rho_limit,gap"


def tau(m: CanonicalMonoid3) -> int:
    """Sign of c - a - 1: orients the length line and the elasticity formulas."""
    diff = m.c - m.a - 1
    return (diff > 0) - (diff < 0)


@dataclass(frozen=True)
class LimitLFT:
    """The limit elasticity as a map (x, y) -> ((p*x + q*y)/(r*x + t*y)) ** tau.

    Coefficients may be negative individually; on a nonzero member of the
    monoid both linear forms are strictly positive.
    """

    p: int
    q: int
    r: int
    t: int
    tau: int

    def __post_init__(self) -> None:
        if self.tau not in (-1, 0, 1):
            raise ValueError("tau must be -1, 0, or +1")

    def evaluate(self, s: Vec2) -> ExtRat:
        num = self.p * s.x + self.q * s.y
        den = self.r * s.x + self.t * s.y
        if num <= 0 or den <= 0:
            raise ValueError(f"linear forms not positive at {s}; not a nonzero member")
        return ExtRat(num, den).pow_sign(self.tau)


def _lft_low(m: CanonicalMonoid3) -> LimitLFT:
    # c*(y*a - x*(b-1)) over a*(y*c - x*(d-1)), as coefficients on (x, y).
    return LimitLFT(
        p=-m.c * (m.b - 1),
        q=m.c * m.a,
        r=-m.a * (m.d - 1),
        t=m.a * m.c,
        tau=tau(m),
    )


def _lft_high(m: CanonicalMonoid3) -> LimitLFT:
    # c*(y*(c-a) - x*(d-b)) over y*c - x*(d-1), as coefficients on (x, y).
    return LimitLFT(
        p=-m.c * (m.d - m.b),
        q=m.c * (m.c - m.a),
        r=-(m.d - 1),
        t=m.c,
        tau=tau(m),
    )


def _check_multiple_args(m: CanonicalMonoid3, s: Vec2, k: int, period: int, name: str) -> None:
    if not m.star:
        raise StarRequiredError("periodic elasticity formulas need b*c - a*d = 1")
    if s.is_zero:
        raise ZeroElementError("elasticity of the zero element is undefined")
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k % period:
        raise PeriodicityViolatedError(f"{name} requires {period} | k, got k={k}")
    if not member3_star(m, s).member:
        raise NotMemberError(f"{s} is not in the monoid")


def rho_special_ac(m: CanonicalMonoid3, s: Vec2, k: int) -> ExtRat:
    """Exact elasticity of k*s when a*c divides k and slope(s) <= a/b.

    The value does not depend on k beyond the divisibility requirement.
    """
    _check_multiple_args(m, s, k, m.a * m.c, "rho_special_ac")
    if s.x * m.b > s.y * m.a:
        raise WrongBranchError("rho_special_ac needs x*b <= y*a")
    return _lft_low(m).evaluate(s)


def rho_special_c(m: CanonicalMonoid3, s: Vec2, k: int) -> ExtRat:
    """Exact elasticity of k*s when c divides k and slope(s) >= a/b.

    The value does not depend on k beyond the divisibility requirement.
    """
    _check_multiple_args(m, s, k, m.c, "rho_special_c")
    if s.x * m.b < s.y * m.a:
        raise WrongBranchError("rho_special_c needs x*b >= y*a")
    return _lft_high(m).evaluate(s)


def rho_limit(m: CanonicalMonoid3, s: Vec2) -> tuple[LimitLFT, ExtRat]:
    """Limit of the elasticity of k*s as k grows, with its LFT form.

    The branch follows the slope comparison with a/b; on the boundary both
    formulas are computed and asserted equal (the low-slope form is
    returned).
    """
    if not m.star:
        raise StarRequiredError("the limit formula needs b*c - a*d = 1")
    if s.is_zero:
        raise ZeroElementError("elasticity of the zero element is undefined")
    if not member3_star(m, s).member:
        raise NotMemberError(f"{s} is not in the monoid")
    low, high = s.x * m.b, s.y * m.a
    if low <= high:
        lft = _lft_low(m)
        value = lft.evaluate(s)
        if low == high:
            assert _lft_high(m).evaluate(s) == value, "limit branches disagree on the boundary"
    else:
        lft = _lft_high(m)
        value = lft.evaluate(s)
    return lft, value


@dataclass(frozen=True)
class ScanRow:
    """One row of a convergence scan: exact elasticity of k*s vs the limit."""

    k: int
    rho_exact: ExtRat
    rho_limit: ExtRat
    gap: ExtRat

    def to_csv_row(self) -> str:
        return f"{self.k},{self.rho_exact},{self.rho_limit},{self.gap}"


def scan_multiples(m: CanonicalMonoid3, s: Vec2, k_max: int) -> list[ScanRow]:
    """Exact elasticity of k*s for k = 1..k_max, with gaps to the limit."""
    if k_max < 1:
        raise ValueError("k_max must be a positive integer")
    _, limit = rho_limit(m, s)
    rows = []
    for k in range(1, k_max + 1):
        exact = elasticity3(m, k * s)
        rows.append(ScanRow(k=k, rho_exact=exact, rho_limit=limit, gap=limit.abs_diff(exact)))
    return rows

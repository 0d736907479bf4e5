"""Membership, factorizations, and elasticity for three canonical generators.

Write S = <u, v, w> with u = (0,1), v = (a,b), w = (c,d) in increasing slope
order.  Only v and w contribute to the first coordinate, so any factorization
of s = (x, y) starts from a representation x = alpha*a + beta*c with
alpha, beta >= 0; the multiplicity of u is then forced to
delta = y - alpha*b - beta*d, and the representation lifts exactly when
delta >= 0.

Under the determinant condition b*c - a*d = 1 ("star"), gcd(a, c) = 1 and
the representation with 0 <= alpha < c is unique and optimal: s is a member
iff x is representable and x*d <= y*c, and then the whole factorization set
is the line (delta - t, alpha + c*t, beta - a*t).  Its length varies as
t*(c - a - 1), which yields closed-form extreme lengths and elasticity.

Without the star condition only the exhaustive walk over representations is
valid (``member3_general``); the closed-form entry points refuse such
monoids instead of silently guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .errors import (
    GcdNotOneError,
    NotMemberError,
    RepMismatchError,
    StarRequiredError,
    ZeroElementError,
)
from .factorization import (
    PHI_OUT_OF_RANGE,
    X_NOT_REPRESENTABLE,
    Factorization,
    Membership,
)
from .intlin import ext_gcd
from .monoids import CanonicalMonoid3
from .rationals import ExtRat, Vec2

__all__ = [
    "BRANCH_LOW",
    "BRANCH_HIGH",
    "CanonicalRep",
    "ExtremeFactorizations",
    "canonical_rep",
    "delta",
    "member3_star",
    "member3_general",
    "extreme_factorizations",
    "elasticity3",
]

# Which side of slope a/b the element lies on; decides the t-range bound.
BRANCH_LOW = "low-slope"  # x*b <= y*a
BRANCH_HIGH = "high-slope"  # x*b >= y*a


@dataclass(frozen=True)
class CanonicalRep:
    """The representation x = alpha*a + beta*c with 0 <= alpha < c."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("canonical representation entries must be nonnegative")


def canonical_rep(a: int, c: int, x: int) -> Optional[CanonicalRep]:
    """Solve x = alpha*a + beta*c with 0 <= alpha < c, or None if beta < 0.

    Requires gcd(a, c) = 1, which makes alpha unique; returning None decides
    that x is not a nonnegative combination of a and c at all.
    """
    if a < 1 or c < 1:
        raise ValueError("a and c must be positive")
    if x < 0:
        raise ValueError("x must be nonnegative")
    if gcd(a, c) != 1:
        raise GcdNotOneError(f"gcd({a}, {c}) != 1")
    alpha = (x * pow(a, -1, c)) % c
    beta, rem = divmod(x - alpha * a, c)
    assert rem == 0
    return None if beta < 0 else CanonicalRep(alpha=alpha, beta=beta)


def delta(m: CanonicalMonoid3, s: Vec2, alpha: int, beta: int) -> int:
    """Forced multiplicity of (0, 1) for one representation of s.x.

    May be negative; the representation lifts to a factorization of s
    exactly when the result is >= 0.
    """
    if alpha < 0 or beta < 0:
        raise ValueError("representation entries must be nonnegative")
    if alpha * m.a + beta * m.c != s.x:
        raise RepMismatchError(f"{alpha}*{m.a} + {beta}*{m.c} != {s.x}")
    return s.y - alpha * m.b - beta * m.d


def member3_star(m: CanonicalMonoid3, s: Vec2) -> Membership:
    """Decide s in S via the closed form; star monoids only.

    On membership the returned factorization is the canonical one
    (delta, alpha, beta).  The full set is available through
    ``member3_general`` or ``extreme_factorizations``.
    """
    if not m.star:
        raise StarRequiredError("closed-form membership needs b*c - a*d = 1")
    if s.x * m.d > s.y * m.c:
        return Membership(member=False, reason=PHI_OUT_OF_RANGE)
    rep = canonical_rep(m.a, m.c, s.x)
    if rep is None:
        return Membership(member=False, reason=X_NOT_REPRESENTABLE)
    dlt = s.y - rep.alpha * m.b - rep.beta * m.d
    # Guaranteed under the star condition once both membership conditions
    # hold; a failure here would mean the implementation is wrong.
    assert dlt >= 0, f"canonical representation of {s} does not lift"
    fact = Factorization.checked((dlt, rep.alpha, rep.beta), m.gens, s)
    return Membership(member=True, factorization=fact)


def member3_general(m: CanonicalMonoid3, s: Vec2) -> Membership:
    """Decide s in S by walking every representation of s.x; no star needed.

    Representations step by c/g in alpha and a/g in beta for g = gcd(a, c),
    so there are at most x/(a*c/g) + 1 of them; each is kept iff its delta
    is nonnegative.  Returns the complete factorization list, sorted by
    multiplicities.
    """
    if s.x * m.d > s.y * m.c:
        return Membership(member=False, factorizations=(), reason=PHI_OUT_OF_RANGE)
    g = gcd(m.a, m.c)
    if s.x % g:
        return Membership(member=False, factorizations=(), reason=X_NOT_REPRESENTABLE)
    _, s0, _ = ext_gcd(m.a, m.c)
    step = m.c // g
    alpha = (s0 * (s.x // g)) % step
    mults = []
    representable = False
    while alpha * m.a <= s.x:
        beta, rem = divmod(s.x - alpha * m.a, m.c)
        assert rem == 0
        representable = True
        dlt = s.y - alpha * m.b - beta * m.d
        if dlt >= 0:
            mults.append((dlt, alpha, beta))
        alpha += step
    if not mults:
        reason = None if representable else X_NOT_REPRESENTABLE
        return Membership(member=False, factorizations=(), reason=reason)
    mults.sort()
    facts = tuple(Factorization.checked(t, m.gens, s) for t in mults)
    return Membership(member=True, factorization=facts[0], factorizations=facts)


@dataclass(frozen=True)
class ExtremeFactorizations:
    """Both ends of the factorization line of a star-monoid member.

    ``fact_t0`` is the canonical factorization (t = 0) and ``fact_tmax`` the
    one at the last valid t.  Lengths differ by t_max*(c - a - 1), so which
    end is the short one depends on the sign of c - a - 1.
    """

    branch: str
    t_max: int
    fact_t0: Factorization
    fact_tmax: Factorization

    @property
    def len_t0(self) -> int:
        return self.fact_t0.length

    @property
    def len_tmax(self) -> int:
        return self.fact_tmax.length


def extreme_factorizations(m: CanonicalMonoid3, s: Vec2) -> ExtremeFactorizations:
    """Closed-form extreme factorizations of a member of a star monoid.

    The branch is picked by comparing the slope of s with a/b: below it the
    t-range is bounded by beta, above it by delta.  At equality both bounds
    agree (then beta = delta*a exactly), which is asserted rather than
    silently picking a side.
    """
    if not m.star:
        raise StarRequiredError("closed-form extremes need b*c - a*d = 1")
    mem = member3_star(m, s)
    if not mem.member:
        raise NotMemberError(f"{s} is not in the monoid ({mem.reason})")
    assert mem.factorization is not None
    dlt, alpha, beta = mem.factorization.mults
    low, high = s.x * m.b, s.y * m.a
    if low <= high:
        branch = BRANCH_LOW
        t_max = beta // m.a
        if low == high:
            assert beta == dlt * m.a, "branch formulas disagree on the boundary"
    else:
        branch = BRANCH_HIGH
        t_max = dlt
    fact_tmax = Factorization.checked(
        (dlt - t_max, alpha + m.c * t_max, beta - m.a * t_max), m.gens, s
    )
    ext = ExtremeFactorizations(
        branch=branch, t_max=t_max, fact_t0=mem.factorization, fact_tmax=fact_tmax
    )
    assert ext.len_tmax == ext.len_t0 + t_max * (m.c - m.a - 1)
    return ext


def elasticity3(m: CanonicalMonoid3, s: Vec2) -> ExtRat:
    """Elasticity (max length / min length) of a nonzero star-monoid member."""
    if not m.star:
        raise StarRequiredError("closed-form elasticity needs b*c - a*d = 1")
    if s.is_zero:
        raise ZeroElementError("elasticity of the zero element is undefined")
    ext = extreme_factorizations(m, s)
    lo, hi = sorted((ext.len_t0, ext.len_tmax))
    return ExtRat(hi, lo)

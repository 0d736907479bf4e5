"""Exception hierarchy for affmon.

Every exception carries a stable machine-readable ``code`` string; the CLI
echoes these codes in its JSON error payloads, so they are part of the public
interface and should not be renamed casually.
"""

from __future__ import annotations

__all__ = [
    "AffmonError",
    "ZeroVectorError",
    "BothZeroError",
    "NotPhiMinimalError",
    "NegativeResultError",
    "DuplicatePhiError",
    "NormalizationEscapesConeError",
    "GcdNotOneError",
    "RepMismatchError",
    "StarRequiredError",
    "NotMemberError",
    "ZeroElementError",
    "PeriodicityViolatedError",
    "WrongBranchError",
    "ZeroGeneratorError",
    "DuplicateGeneratorError",
    "NotMinimallyGeneratedError",
    "MonoidParseError",
]


class AffmonError(Exception):
    """Base class for all affmon-specific errors."""

    code = "Error"


class ZeroVectorError(AffmonError):
    """The slope of the zero vector is undefined."""

    code = "ZeroVector"


class BothZeroError(AffmonError):
    """gcd(0, 0) has no Bezout certificate."""

    code = "BothZero"


class NotPhiMinimalError(AffmonError):
    """A generator's coordinates share a common factor greater than 1."""

    code = "NotPhiMinimal"


class NegativeResultError(AffmonError):
    """A normalized column left the nonnegative quadrant."""

    code = "NegativeResult"


class DuplicatePhiError(AffmonError):
    """Two generators have the same slope."""

    code = "DuplicatePhi"


class NormalizationEscapesConeError(AffmonError):
    """Canonicalization produced a generator outside N0^2."""

    code = "NormalizationEscapesCone"


class GcdNotOneError(AffmonError):
    """The two step sizes are not coprime, so no canonical representation exists."""

    code = "GcdNotOne"


class RepMismatchError(AffmonError):
    """The supplied multiplicities do not reproduce the first coordinate."""

    code = "RepMismatch"


class StarRequiredError(AffmonError):
    """The operation is only valid when b*c - a*d = 1."""

    code = "StarRequired"


class NotMemberError(AffmonError):
    """The element does not belong to the monoid."""

    code = "NotMember"


class ZeroElementError(AffmonError):
    """Elasticity of the zero element is undefined."""

    code = "ZeroElement"


class PeriodicityViolatedError(AffmonError):
    """The multiplier does not satisfy the divisibility precondition."""

    code = "PeriodicityViolated"


class WrongBranchError(AffmonError):
    """The element lies on the wrong side of the middle generator's slope."""

    code = "WrongBranch"


class ZeroGeneratorError(AffmonError):
    """(0, 0) generates nothing and is not allowed as a generator."""

    code = "ZeroGenerator"


class DuplicateGeneratorError(AffmonError):
    """The same generator was listed twice."""

    code = "DuplicateGenerator"


class NotMinimallyGeneratedError(AffmonError):
    """Some generator already lies in the monoid generated by the others."""

    code = "NotMinimallyGenerated"


class MonoidParseError(AffmonError):
    """Malformed monoid or vector text; ``offset`` points at the bad character."""

    code = "SyntaxError"

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset

"""Exception hierarchy. Every domain failure maps to a category slug used by the CLI."""


class BaraltError(Exception):
    """Base class for all domain errors."""

    category = "error"


class FieldCharacteristicError(BaraltError):
    category = "bad-field"


class DimensionMismatchError(BaraltError):
    category = "dimension-mismatch"


class NotAnIdealError(BaraltError):
    category = "not-an-ideal"


class NotIdempotentError(BaraltError):
    category = "not-idempotent"


class OrthogonalityError(BaraltError):
    category = "orthogonality"


class WeightError(BaraltError):
    category = "bad-weight"


class NonSplitError(BaraltError):
    """A recognition step needed a root or presentation outside the base field."""

    category = "non-split"


class SearchExhaustedError(BaraltError):
    """A bounded deterministic/seeded search hit its retry bound."""

    category = "search-exhausted"


class LiftError(BaraltError):
    """A lifting construction violated one of its verified postconditions."""

    category = "lift-failure"


class VerificationError(BaraltError):
    """A mandatory certificate failed (internal guard, never accepted output)."""

    category = "verification-failure"


class ParseError(BaraltError):
    category = "parse-error"

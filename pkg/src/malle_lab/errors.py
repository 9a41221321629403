"""Exception hierarchy shared by all malle_lab modules."""


class MalleLabError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(MalleLabError):
    """Permutations of different degrees were combined."""


class OrderCapExceeded(MalleLabError):
    """Group closure grew past the configured order cap."""


class NotASubgroup(MalleLabError):
    """A claimed subgroup is not contained in the ambient group."""


class NonCyclicQuotient(MalleLabError):
    """N/G is not cyclic, so no cyclic complement data exists."""


class TrivialGroup(MalleLabError):
    """The operation is undefined for the trivial group."""


class NotSplit(MalleLabError):
    """G has no cyclic complement in N; the split hypothesis fails."""


class NotAHomomorphism(MalleLabError):
    """A supplied unit-to-coset table is not a group homomorphism."""


class BadModulus(MalleLabError):
    """The cyclotomic level is too small for the classes acted on."""


class NoAdmissibleSubgroup(MalleLabError):
    """No normal subgroup satisfies the constraints of the search."""


class EnumerationCapExceeded(MalleLabError):
    """Tuple enumeration grew past the configured cap."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class IndexOutOfRange(MalleLabError, IndexError):
    """A braid generator index is outside 1..k-1."""


class TrivialClassPresent(MalleLabError):
    """A block built from the identity class was passed downstream."""


class InsufficientRange(MalleLabError):
    """Too few series coefficients for a meaningful asymptotic fit."""


class ParseError(MalleLabError):
    """Cycle-notation text failed to parse."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PointOutOfRange(MalleLabError):
    """A cycle mentions a point outside 1..degree."""


class UnknownPreset(MalleLabError):
    """No preset scenario with the requested name exists."""

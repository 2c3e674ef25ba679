"""Exception hierarchy shared by every module in the package."""


class FaceEnumError(Exception):
    """Base class for all errors raised by this package."""


# --- complex construction and local operations ---

class EmptyInput(FaceEnumError):
    pass


class DuplicateVertexInFacet(FaceEnumError):
    pass


class DimensionOutOfRange(FaceEnumError):
    pass


class FaceNotInComplex(FaceEnumError):
    pass


class VertexLabelCollision(FaceEnumError):
    pass


class NotAFacet(FaceEnumError):
    pass


class BijectionArityMismatch(FaceEnumError):
    pass


class AdmissibilityViolation(FaceEnumError):
    """Handle addition refused; carries the offending vertex pair or witness."""

    def __init__(self, message, pair=None, common_neighbor=None):
        super().__init__(message)
        self.pair = pair
        self.common_neighbor = common_neighbor


class NotPure(FaceEnumError):
    pass


class NotConnected(FaceEnumError):
    pass


class NotBalanced(FaceEnumError):
    """Coloring fails the balancedness test; carries a violating facet."""

    def __init__(self, message, facet=None):
        super().__init__(message)
        self.facet = facet


class TypeVectorMismatch(FaceEnumError):
    pass


class ArgumentOutOfRange(FaceEnumError):
    pass


class DimensionParity(FaceEnumError):
    pass


# --- posets ---

class InvalidPoset(FaceEnumError):
    pass


class NotComparable(FaceEnumError):
    pass


class NotSemiEulerian(FaceEnumError):
    pass


class NotInCDSpan(FaceEnumError):
    """ab-polynomial is not in the span of cd-monomials; carries the residual."""

    def __init__(self, message, residual=None, partial=None):
        super().__init__(message)
        self.residual = residual
        self.partial = partial


# --- constructions ---

class IllegalMove(FaceEnumError):
    """Bistellar move refused; the message names the failing condition."""


class NotSimpleTree(FaceEnumError):
    """Ordered facet list is not a simple tree; carries the first bad index."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class NotABall(FaceEnumError):
    pass


class VertexCollision(FaceEnumError):
    pass


class NotASphereLink(FaceEnumError):
    pass


class TargetOutOfRange(FaceEnumError):
    pass


class ScheduleBlocked(FaceEnumError):
    """The grouped bistellar fill could not perform a scheduled move."""

    def __init__(self, message, state=None):
        super().__init__(message)
        self.state = state


class TargetInfeasible(FaceEnumError):
    pass


class PreconditionFailed(FaceEnumError):
    pass


class HypothesisNotMet(FaceEnumError):
    pass


class UnknownSpace(FaceEnumError):
    pass


class UnknownEntry(FaceEnumError):
    pass


class TreeNotFound(FaceEnumError):
    """Spanning simple tree search exhausted its node budget."""


class ParseError(FaceEnumError):
    """Input file could not be parsed; carries position information."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

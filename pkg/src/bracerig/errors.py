"""Exception hierarchy shared by all bracerig modules."""

from __future__ import annotations


class BraceRigError(Exception):
    """Base class for every error raised by this package."""


# --- structural graph construction ---------------------------------------

class UnknownVertex(BraceRigError):
    pass


class SelfLoop(BraceRigError):
    pass


class DuplicateEdge(BraceRigError):
    pass


class DisconnectedGraph(BraceRigError):
    pass


class EdgeNotFound(BraceRigError):
    """An operation referenced an edge that is not in the graph."""


class RibbonNotSimpleCut(BraceRigError):
    """The ribbon is not both simple and an edge cut, as the operation requires."""


# --- geometry --------------------------------------------------------------

class MissingCoordinate(BraceRigError):
    pass


class NotEdgeCut(BraceRigError):
    pass


class ForbiddenTranslation(BraceRigError):
    """The translation vector would make two vertices coincide."""


class InconsistentRibbon(BraceRigError):
    """Edges of one ribbon disagree on their placed vector; the placement is invalid."""


class SeparationViolated(BraceRigError):
    """The framework does not satisfy the pairwise ribbon-separation hypothesis.

    Carries diagnostics: either ``offending_ribbons`` (ribbons that are not
    edge cuts) or ``witness_pair`` (two vertices no ribbon separates), or the
    unseparated vertices blocking a close-four-cycle step.
    """

    def __init__(self, message: str, *, offending_ribbons=(), witness_pair=None,
                 blocked_vertices=()):
        super().__init__(message)
        self.offending_ribbons = tuple(offending_ribbons)
        self.witness_pair = witness_pair
        self.blocked_vertices = tuple(blocked_vertices)


class BadIntersection(BraceRigError):
    pass


class BoundaryNotSimple(BraceRigError):
    pass


class DegenerateParallelogram(BraceRigError):
    pass


# --- colorings -------------------------------------------------------------

class PartialColoring(BraceRigError):
    pass


class TooLarge(BraceRigError):
    pass


class TrivialFactor(BraceRigError):
    pass


class NotCartesian(BraceRigError):
    pass


class PreconditionUnverified(UserWarning):
    """Warning: enumeration fell back to brute force on an unverified graph."""


# --- bracing ---------------------------------------------------------------

class NotADiagonal(BraceRigError):
    pass


class DuplicateBrace(BraceRigError):
    pass


class BraceIsStructuralEdge(BraceRigError):
    pass


# --- flexes ----------------------------------------------------------------

class OffsetInconsistent(BraceRigError):
    """Offset recomputation along an alternative walk disagreed; invalid input pair."""


class LengthDriftExceeded(BraceRigError):
    pass


class UnsupportedFormat(BraceRigError):
    pass


# --- documents and CLI -------------------------------------------------------

class SchemaError(BraceRigError):
    """Malformed framework document. ``path`` points at the offending JSON node."""

    def __init__(self, message: str, path: str = "/"):
        super().__init__(message)
        self.path = path


class ValidationError(BraceRigError):
    """A well-formed document failed module validation. Wraps the module error."""

    def __init__(self, message: str, cause: BraceRigError | None = None):
        super().__init__(message)
        self.cause = cause

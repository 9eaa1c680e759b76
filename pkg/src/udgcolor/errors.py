"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class UdgError(Exception):
    """Base class for all library errors."""


class EmptyInput(UdgError):
    """A geometric operation received an empty point list."""


class EmptyInstance(UdgError):
    """An operation requires a nonempty instance."""


class DuplicatePoint(UdgError):
    """Two vertices are represented by the same point."""

    def __init__(self, i: int, j: int):
        super().__init__(f"points {i} and {j} coincide")
        self.i = i
        self.j = j


class InvalidVertex(UdgError):
    """A vertex id is out of range or not where it must be."""


class DegenerateCollinear(UdgError):
    """All points lie on one line, so no circular boundary order exists."""


class StabilityViolated(UdgError):
    """The instance has three pairwise non-adjacent vertices."""

    def __init__(self, witness: tuple[int, int, int]):
        super().__init__(f"independent triple {witness}")
        self.witness = witness


class StructureViolation(UdgError):
    """An assembled set failed a structural check that valid input guarantees.

    Reaching this on an instance with stability <= 2 indicates a bug, never
    an expected runtime condition.
    """


class AuditFailure(UdgError):
    """The matching audit hit a structurally impossible state."""


class LimitExceeded(UdgError):
    """The graph is larger than the configured brute-force limit."""


class SearchCancelled(UdgError):
    """A cooperative cancellation token stopped a brute-force search."""


class NotRealizable(UdgError):
    """No circle radius realizes the requested circulant adjacency."""


class SnapFailure(UdgError):
    """Rounding the generated coordinates changed the intended adjacency."""


class ParseError(UdgError):
    """A text artifact could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no

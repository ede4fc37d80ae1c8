"""Exception hierarchy for the toolkit.

All input-level failures derive from NskError so the CLI can map them to
exit code 1; internal consistency failures use plain assertions.
"""


class NskError(Exception):
    """Base class for all toolkit errors."""


class TriParseError(NskError):
    """Malformed .tri input. Carries the 1-based line number when known."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GluingError(NskError):
    """Structurally invalid gluing table (involution broken, face glued to
    itself, target index out of range, unglued face)."""


class NonManifoldError(NskError):
    """A vertex link is not a 2-sphere, or the triangulation is disconnected."""


class CoordinateError(NskError):
    """Bad normal coordinate vector: wrong length, negative entries, or an
    operation that requires admissibility/matching was given a vector
    without it."""


class IncompatibleSurfacesError(NskError):
    """Two coordinate vectors use different quadrilateral types in the same
    tetrahedron, so their sum is not admissible."""

    def __init__(self, tet):
        super().__init__(f"incompatible quad types in tetrahedron {tet}")
        self.tet = tet


class UnsupportedTriangulationError(NskError):
    """The triangulation is accepted by the validator but falls outside what
    an operation supports (e.g. a surface crossing an edge orbit that is
    identified with itself in reverse)."""


class EnvelopeExceededError(NskError):
    """Enumeration request outside the supported search envelope."""

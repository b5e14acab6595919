#   pyQuiver Errors Module

"""Defines custom exceptions that are used across the pyQuiver package."""

class Error(Exception):
    pass

class QuiverError(Error):
    """Raised when a quiver or self-dual quiver violates one of its structural invariants."""
    pass

class ParseError(QuiverError):
    """Raised by the quiver file parser. Carries the offending line number."""
    def __init__(self, message, lineNumber = None):
        self.lineNumber = lineNumber
        if lineNumber is not None:
            message = "line " + str(lineNumber) + ": " + message
        super(ParseError, self).__init__(message)

class CyclicQuiver(QuiverError):
    pass

class NotSelfDualStability(Error):
    pass

class NotIncreasing(Error):
    pass

class NonBinaryClass(Error):
    pass

class UnsupportedShape(Error):
    pass

class ClassMismatch(Error):
    pass

class NonNilpotentTerm(Error):
    pass

class MissingRule(Error):
    pass

class TruncationTooSmall(Error):
    pass

class IncompleteTable(Error):
    pass

class ResidualNonzero(Error):
    pass

class Unbounded(Error):
    pass

class InvalidMorphism(Error):
    pass

class AxiomViolation(Error):
    """Raised when an algebraic identity fails on a concrete input.

    transcript -- a human-readable record of the failing inputs and both sides of the identity.
    """
    def __init__(self, message, transcript = None):
        self.transcript = transcript
        if transcript:
            message = message + "\n" + transcript
        super(AxiomViolation, self).__init__(message)

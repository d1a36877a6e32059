"""Exception hierarchy shared by every module.

All errors derive from :class:`CageLiftError` (itself a ``ValueError``) so the
CLI can turn any of them into a one-line diagnostic.
"""


class CageLiftError(ValueError):
    pass


# voltage graphs and lifts
class DuplicateName(CageLiftError):
    pass


class UnknownEndpoint(CageLiftError):
    pass


class PinnedToPinnedArc(CageLiftError):
    pass


class NonzeroVoltageAtPinned(CageLiftError):
    pass


class PinnedNameMismatch(CageLiftError):
    """A vertex name ends in ``*`` but is not pinned, or vice versa."""


class LiftCollision(CageLiftError):
    def __init__(self, message, arcs=()):
        super().__init__(message)
        self.arcs = tuple(arcs)


# certification and search
class RangeTooSmall(CageLiftError):
    pass


class SearchSpaceTooLarge(CageLiftError):
    pass


# identification
class NotCubic(CageLiftError):
    pass


class WrongGirth(CageLiftError):
    pass


class NoRemotePair(CageLiftError):
    pass


class BadM(CageLiftError):
    pass


# file formats
class ParseError(CageLiftError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph6Error(CageLiftError):
    pass


class MalformedHeader(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass


class NonPrintableChar(Graph6Error):
    pass

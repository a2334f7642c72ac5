"""Exception types shared across tdspace modules."""


class TdSpaceError(Exception):
    """Base class for all tdspace errors."""


class IndexOutOfRangeError(TdSpaceError, IndexError):
    """A duplication choice points outside the word it applies to."""


class ValidationError(TdSpaceError, ValueError):
    """Structurally invalid input (bad steps, malformed tree, bad choice)."""


class ParseError(TdSpaceError, ValueError):
    """Malformed serialized input.

    ``position`` holds the character offset where parsing failed, when known.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class BudgetExceededError(TdSpaceError, RuntimeError):
    """An enumeration or memory budget was exceeded."""


class CycleDetectedError(TdSpaceError):
    """The order diagram built from a tree contains a directed cycle."""


class MalformedGraphError(TdSpaceError):
    """A graph handed to the counting routines violates its shape contract."""


class DerivationCollisionError(TdSpaceError):
    """Two distinct derivations produced the same word.

    The counting theory relies on every word having a unique derivation;
    this is raised (never silently repaired) if enumeration ever observes
    a collision.
    """


class NotInducedError(TdSpaceError, ValueError):
    """The supplied evolution pair is not related by first-TD deletion."""

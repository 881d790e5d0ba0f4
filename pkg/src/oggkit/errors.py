"""Exception types shared across the package."""


class OggkitError(Exception):
    """Base class for every error raised by oggkit."""


class ValidationError(OggkitError):
    """A raw structure failed a well-formedness or axiom check."""


class BadNameError(ValidationError):
    """Empty, duplicate, or ill-formed element / gamma name."""


class UnknownElementError(ValidationError):
    """A name was used that is not declared in the carrier or gamma list."""


class TableIncompleteError(ValidationError):
    """An operation table is missing an entry."""


class NotAntisymmetricError(ValidationError):
    """The order relation contains a cycle between distinct elements."""


class IncompatibleError(ValidationError):
    """The order is not compatible with some operation on some side."""


class EmptySubsetError(OggkitError):
    """Ideal predicates require a nonempty subset."""


class ThresholdOutOfRangeError(OggkitError):
    """A level-cut threshold fell outside [0, 1]."""


class CarrierMismatchError(OggkitError):
    """A fuzzy subset does not grade exactly the structure's carrier."""


class InternalInconsistencyError(OggkitError):
    """Two routes that must agree produced different answers (a bug)."""


class SizeLimitError(OggkitError):
    """A product construction would exceed the configured element cap."""


class CapExceededError(OggkitError):
    """Enumeration bounds exceed the configured caps."""


class ParseError(OggkitError):
    """A document violated the file grammar; carries the line number."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason

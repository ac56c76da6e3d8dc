"""Exception types shared across the package."""


class DesignToolkitError(Exception):
    """Base class for all errors raised by this package."""


# permutation engine

class PermutationError(DesignToolkitError, ValueError):
    pass


class DuplicateImage(PermutationError):
    pass


class OutOfRange(PermutationError):
    pass


class LengthMismatch(PermutationError):
    pass


class DegreeMismatch(PermutationError):
    pass


class DegreeOverflow(PermutationError):
    pass


class OrbitLimitExceeded(PermutationError):
    pass


class NotTransitive(PermutationError):
    pass


class BoundExceeded(PermutationError):
    pass


# input files

class ParseError(DesignToolkitError, ValueError):
    """Malformed input text. ``line`` (or ``position`` for words) is 1-based."""

    def __init__(self, message, line=None, position=None):
        self.line = line
        self.position = position
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif position is not None:
            where = f"position {position}: "
        super().__init__(where + message)


class NonBijection(ParseError):
    pass


class FileDegreeMismatch(ParseError):
    pass


class NonDividingMaximal(DesignToolkitError, ValueError):
    def __init__(self, entry, record):
        self.entry = entry
        self.record = record
        super().__init__(
            f"maximal subgroup {record} of {entry} has an order not dividing |{entry}|"
        )


class UnboundName(DesignToolkitError, KeyError):
    def __str__(self):
        return f"generator name {self.args[0]!r} is not bound"


# arithmetic

class DomainError(DesignToolkitError, ValueError):
    pass


class SizeLimitExceeded(DesignToolkitError, ValueError):
    pass


# incidence structures

class MalformedStructure(DomainError):
    pass


class NotDeveloped(DesignToolkitError, ValueError):
    pass


class FixtureMissing(DesignToolkitError, LookupError):
    pass

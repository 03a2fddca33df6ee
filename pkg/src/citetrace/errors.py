"""Exception types shared across the package."""


class CitetraceError(Exception):
    """Base class for all citetrace errors."""


class ValidationError(CitetraceError):
    """A record violates a hard invariant (mathematically impossible data)."""


class ParseError(CitetraceError):
    """Malformed input file (bad header, bad integer, empty citation list)."""


class DuplicateEntity(CitetraceError):
    """The same entity name appears more than once in a dataset."""


class LengthMismatch(CitetraceError):
    """Paired sequences differ in length."""


class DegenerateInput(CitetraceError):
    """Statistical input without enough information (constant column, n too small)."""


class UnknownIndicator(CitetraceError):
    """An indicator key that no ranking column matches."""


class JoinError(CitetraceError):
    """Entity names of two datasets have an empty intersection."""

"""Exception types shared across the package."""


class GradedRingsError(Exception):
    """Base class for every error raised by this package."""


class MalformedInputError(GradedRingsError, ValueError):
    """A value does not satisfy a type's structural contract."""


class PreconditionError(GradedRingsError, ValueError):
    """An operation was called outside its stated domain."""


class TheoremViolationError(GradedRingsError, RuntimeError):
    """A structure theorem failed on input that passed validation.

    Seeing this means either the input ring is corrupt in a way validation
    does not catch, or there is a bug in this library.  It is never the
    expected outcome on a validated ring.
    """


class SpecFileError(GradedRingsError, ValueError):
    """A ring-spec file could not be parsed.  The message names the
    offending line or field."""

"""Exceptions shared by the analysis modules and mapped to CLI exit codes."""


class PalinseqError(Exception):
    """Base class for every error raised by this package."""


class PreconditionFailed(PalinseqError, ValueError):
    """An input violates an operation's precondition."""


class CapExceeded(PalinseqError):
    """A scan ran out of its configured budget without finding a non-palindrome.

    This is a reportable outcome rather than a bug: for geometric progressions
    there is no proven index bound, so any cap is a guess.
    """

    def __init__(self, message, *, terms_checked, cap_used):
        super().__init__(message)
        self.terms_checked = terms_checked
        self.cap_used = cap_used


class TheoryViolation(PalinseqError):
    """A result contradicts a proven bound, or a fast path disagrees with its oracle."""

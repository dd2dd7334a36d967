"""Exception types shared across the package."""


class VerificationError(RuntimeError):
    """An internal consistency check failed.

    Raised when a constructed object (witness, certificate, embedding)
    does not re-verify.  This signals a bug in the library, never bad
    user input; bad input raises ValueError at the boundary.
    """

"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-range input data."""


class GhostVertexError(InputError):
    """An operation would create or require a vertex that is not a face."""


class AmbientMismatchError(InputError):
    """Two cochains over different ambient complexes were combined."""


class NotACocycleError(ValueError):
    """A cohomology class was requested for a cochain with nonzero differential."""


class CapacityError(RuntimeError):
    """A computation exceeded one of its enumeration bounds.

    The offending guard is named so callers (and the CLI) can report which
    bound fired instead of degrading silently.
    """

    def __init__(self, guard, message):
        super().__init__(message)
        self.guard = guard


class VerificationError(RuntimeError):
    """A certified computation did not produce the promised outcome."""

"""Exception classes shared by every module."""


class StructuralError(ValueError):
    """Operands built over incompatible variable sets, or malformed input."""


class DomainError(ValueError):
    """An argument lies outside the domain where the operation is defined."""


class InvariantViolation(AssertionError):
    """An exact division or internal consistency check failed.

    This never signals bad user input; it means a bug in the library.
    """


class ResourceError(RuntimeError):
    """A computation would exceed a configured size cap."""

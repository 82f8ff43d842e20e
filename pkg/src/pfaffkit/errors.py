"""Exception hierarchy shared by every pfaffkit module."""


class PfaffkitError(Exception):
    pass


class DomainError(PfaffkitError, ValueError):
    """Argument outside the operation's domain (bad order, odd size, ...)."""


class RingMismatchError(PfaffkitError, ValueError):
    """Operands live in quadratic rings with different alpha."""


class ResourceError(PfaffkitError):
    """Brute-force oracle asked to exceed its enumeration cap."""


class StructuralError(PfaffkitError):
    """A structural identity that must hold by construction failed."""


class SingularExtensionError(PfaffkitError, ZeroDivisionError):
    """Backward extension of the w-sequence needs 1/alpha**2 with alpha = 0."""

"""Exception hierarchy shared by every module of the package."""


class Hecke2bError(Exception):
    """Base class for all library errors."""


class DomainError(Hecke2bError, ValueError):
    """Invalid input in the mathematical domain (maps to CLI exit code 2)."""


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class SizeMismatch(DomainError):
    pass


class BoundExceeded(DomainError):
    pass


class InconsistentRegion(DomainError):
    pass


class NotInRegion(DomainError):
    pass


class NotSkew(DomainError):
    pass


class GenericityViolated(DomainError):
    pass


class UndefinedIntertwiner(DomainError):
    pass


class NotInvariant(DomainError):
    pass


class UnknownClass(DomainError):
    pass


class FloatBackendUnsupported(DomainError):
    pass


class NotReachable(DomainError):
    pass


class InconsistentPath(DomainError):
    pass


class TooManyRows(DomainError):
    pass

"""Exception hierarchy shared by all sidonkit modules."""


class SidonKitError(Exception):
    """Base class for every error raised on purpose by this package."""


class DomainError(SidonKitError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class PrimalityError(DomainError):
    pass


class ModulusError(DomainError):
    pass


class FieldMismatchError(SidonKitError, TypeError):
    pass


class GroupMismatchError(SidonKitError, TypeError):
    pass


class LogOfZeroError(DomainError):
    pass


class NotGeneratorError(DomainError):
    pass


class CapacityError(SidonKitError):
    """A brute-force operation would exceed the enumeration ceiling."""


class DegreeError(DomainError):
    pass


class DegenerateFamilyError(DomainError):
    pass


class LambdaZeroError(DomainError):
    pass


class EmptySetError(DomainError):
    pass


class ZeroElementError(DomainError):
    pass


class SlopeError(DomainError):
    pass


class EvenCharacteristicError(DomainError):
    pass

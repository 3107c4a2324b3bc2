"""Domain error hierarchy shared by all modules.

Every invalid-input condition raises a subclass of DomainError so the
service layer can map them uniformly to 422 responses and the CLI to
exit code 1.
"""


class DomainError(ValueError):
    """Base class for all domain-level failures."""


class NotABijection(DomainError):
    pass


class AntisymmetryViolated(DomainError):
    pass


class OddSignChanges(DomainError):
    pass


class RankMismatch(DomainError):
    pass


class GroupMismatch(DomainError):
    pass


class EmptyInput(DomainError):
    pass


class NotAPartition(DomainError):
    pass


class InvariantViolation(DomainError):
    pass


class DecompositionUnavailable(DomainError):
    pass


class SystemMismatch(DomainError):
    pass


class SystemTooLarge(DomainError):
    pass


class NotAdmissible(DomainError):
    pass


class WidthPrecondition(DomainError):
    pass


class NotBounded(DomainError):
    pass


class NotDominant(DomainError):
    pass


class SpinorSquare(DomainError):
    pass


class BoundRequired(DomainError):
    pass


class RankTooSmall(DomainError):
    pass


class NotDivisible(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class NoQualifyingInterval(DomainError):
    pass


class WindowNotRegular(DomainError):
    pass

class QStepError(Exception):
    """Base class for all errors raised by qstep."""


class DomainError(QStepError, ValueError):
    """Input outside the supported physical regime (E <= m, m <= 0, V0 < 0, ...)."""


class PreconditionViolation(QStepError, ValueError):
    """A special-case routine was called outside its case (e.g. V0 != 0)."""


class SingularDenominator(QStepError, ArithmeticError):
    """A closed-form denominator vanished to within relative tolerance."""


class SingularMatrix(QStepError, ArithmeticError):
    """The matching system is numerically singular."""

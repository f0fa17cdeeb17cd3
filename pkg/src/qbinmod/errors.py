"""Exception hierarchy for qbinmod."""


class QbinmodError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgs(QbinmodError, ValueError):
    pass


class InvalidModulus(InvalidArgs):
    pass


class InvalidPrime(InvalidArgs):
    pass


class InvalidResidue(InvalidArgs):
    pass


class DomainError(InvalidArgs):
    """An asymptotic estimate was requested outside the range where it is defined."""


class NonExactDivision(QbinmodError, ArithmeticError):
    pass


class NoPeriodFound(QbinmodError):
    """Too little data to certify a period (fewer than three repetitions).

    This never means the sequence is aperiodic.
    """


class NotFound(QbinmodError):
    pass


class StructureViolation(QbinmodError, AssertionError):
    """A proven structural identity failed to hold; signals a bug."""


class NonlinearFit(QbinmodError, AssertionError):
    pass


class HypothesisNotMet(QbinmodError):
    pass

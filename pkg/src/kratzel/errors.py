"""Exception types shared across the package."""


class KratzelError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(KratzelError):
    """Arguments lie outside the validity region of the requested routine."""


class PoleError(KratzelError):
    """A gamma-function argument sits on (or too close to) a pole."""


class ConvergenceError(KratzelError):
    """An iterative scheme exhausted its budget before meeting tolerance."""


class LogarithmicCase(KratzelError):
    """Parameter combination produces double poles; series would need log terms."""


class ZeroConstantTerm(KratzelError):
    """Series operation requires a nonzero constant coefficient."""


class NotInvertible(KratzelError):
    """Series reversion requires c0 = 0 and c1 != 0."""

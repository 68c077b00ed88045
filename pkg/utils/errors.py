# Exceptions raised across the filtering stack.


class VbakfError(Exception):
    """Base class of every error raised by this package."""


class InvalidCovarianceError(VbakfError, ValueError):
    """A matrix handed to a factorization is not symmetric positive definite."""


class UnsupportedSchemeError(VbakfError, ValueError):
    pass


class PropagationError(VbakfError, ArithmeticError):
    """A propagated function returned non-finite values."""
    def __init__(self, message, point=None):
        super().__init__(message)
        self.point = point


class InvalidBeliefError(VbakfError, ValueError):
    pass


class NumericalFailureError(VbakfError, ArithmeticError):
    """SPD repair gave up or the innovation covariance is singular.

    Run loops attach the index of the failing measurement as `step`.
    """
    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step

    def __str__(self):
        msg = super().__str__()
        if self.step is not None:
            msg = '[step {}] {}'.format(self.step, msg)
        return msg


class UndefinedBearingError(VbakfError, ValueError):
    pass


class ConfigError(VbakfError, ValueError):
    def __init__(self, message, key=None):
        if key is not None:
            message = '{}: {}'.format(key, message)
        super().__init__(message)
        self.key = key

from .errors import (VbakfError, InvalidCovarianceError, UnsupportedSchemeError, PropagationError,
                     InvalidBeliefError, NumericalFailureError, UndefinedBearingError, ConfigError)

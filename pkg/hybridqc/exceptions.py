"""
   Provide exception classes for :mod:`hybridqc`
"""


class Error(Exception):
    """Error base class."""


class ApiError(Error):
    """Base class for API errors."""


class KnownError(ApiError):
    """A known error condition."""


class UsageError(ApiError):
    """A known error condition where help should be displayed."""


class ConfigError(UsageError):
    """An experiment configuration failed validation.

    ``problems`` lists every problem found, not only the first one.
    """

    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super(ConfigError, self).__init__(
            'invalid configuration:\n  ' + '\n  '.join(self.problems))


class InvalidInputError(Error):
    """Input outside the domain of an operation (unknown letter, bad matrix)."""


class PreconditionError(Error):
    """An operation precondition does not hold."""


class InsufficientDataError(Error):
    """Not enough data points for a statistic."""


class ResourceLimitError(Error):
    """A configured size limit would be exceeded."""


class NumericalFailureError(Error):
    """Time integration produced non-finite values."""


class IntegratorInstabilityError(NumericalFailureError):
    """Norm drift exceeded the hard limit; try a smaller time step."""


class PathError(Error):
    """Base class for path errors."""


class PathNotFoundError(PathError):
    """A path with a file was required; found no file."""


class PathFoundError(PathError):
    """A path with no file was required; found a file."""


class HybridQCWarning(UserWarning):
    """Warning for borderline numerical verdicts."""

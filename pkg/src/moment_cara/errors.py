"""Exception hierarchy.

Every error raised for a mathematically invalid request derives from
:class:`CaraError`, so callers (and the command line front end) can tell a
domain failure apart from a programming error.
"""


class CaraError(ValueError):
    code = "domain-error"


class SingularSystemError(CaraError):
    code = "singular-or-inconsistent"


class RegimeError(CaraError):
    code = "out-of-regime"


class EnumerationLimitError(CaraError):
    code = "enumeration-limit"


class DegreeError(CaraError):
    code = "degree-overflow"


class MomentFormatError(CaraError):
    code = "parse-error"


class GridTooLargeError(CaraError):
    code = "grid-cap-exceeded"


class InterpolationError(CaraError):
    code = "candidates-exhausted"

    def __init__(self, message, achieved_rank):
        super().__init__(message)
        self.achieved_rank = achieved_rank


class IllConditionedError(CaraError):
    code = "ill-conditioned"


class ConvergenceError(CaraError):
    code = "no-convergence"


class PreconditionError(CaraError):
    code = "precondition"

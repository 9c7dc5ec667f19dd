"""Exception taxonomy shared by every module.

The CLI maps each class to a stable exit code through ``exit_code``.
"""


class ReebforgeError(Exception):
    exit_code = 1


class ParseError(ReebforgeError):
    exit_code = 2

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ArityError(ReebforgeError):
    exit_code = 2


class ZeroPolynomial(ReebforgeError):
    exit_code = 2


class NotIsolating(ReebforgeError):
    pass


class MissingVertex(ReebforgeError):
    exit_code = 2


class TooLarge(ReebforgeError):
    pass


class DegenerateInput(ReebforgeError):
    exit_code = 3


class Singular(ReebforgeError):
    exit_code = 3


class NotCertifiablyCompact(ReebforgeError):
    exit_code = 4


class NotStable(ReebforgeError):
    exit_code = 5


class NotMorse(ReebforgeError):
    exit_code = 5


class PrecisionExhausted(ReebforgeError):
    exit_code = 6


class NonRegularFiber(ReebforgeError):
    pass


class InternalSweepError(ReebforgeError):
    pass


class NoConvergence(ReebforgeError):
    pass


class ResolutionTooCoarse(ReebforgeError):
    pass


class UnrealizableEmbedding(ReebforgeError):
    exit_code = 7


class ClearanceViolated(ReebforgeError):
    exit_code = 8


class IllConditionedFit(ReebforgeError):
    exit_code = 8


class RealizationFailed(ReebforgeError):
    exit_code = 8

    def __init__(self, message, last_graph=None, last_poly=None):
        self.last_graph = last_graph
        self.last_poly = last_poly
        super().__init__(message)


class BadRadii(ReebforgeError):
    exit_code = 2


class TubeEscapesDomain(ReebforgeError):
    exit_code = 8

"""Shared exception types.

Every domain error the library raises deliberately lives here, so callers
(and the CLI) can map them to stable error codes.
"""


class ToricaError(Exception):
    """Base class for all deliberate domain errors."""

    code = "ERROR"


class NotStronglyConvex(ToricaError):
    """The cone contains a nonzero linear subspace where it must not."""

    code = "NOT_STRONGLY_CONVEX"


class NotPointed(ToricaError):
    """Hilbert basis requested for a cone containing a line."""

    code = "NOT_POINTED"


class NotHomogeneous(ToricaError):
    """A graded computation received non-homogeneous input."""

    code = "NOT_HOMOGENEOUS"


class InconclusiveAtBound(ToricaError):
    """Degree-by-degree comparison ran out of budget before certifying."""

    code = "INCONCLUSIVE"

    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class InfiniteCokernel(ToricaError):
    """A monomial map whose cokernel is infinite where finiteness is required."""

    code = "INFINITE_COKERNEL"


class VarietyMismatch(ToricaError):
    """Divisor arithmetic mixing objects from different varieties."""

    code = "VARIETY_MISMATCH"


class NoSolution(ToricaError):
    """The requested class equation has no solution."""

    code = "NO_SOLUTION"


class NonUnique(ToricaError):
    """The requested class equation has several solutions."""

    code = "NON_UNIQUE"

    def __init__(self, message, count):
        super().__init__(message)
        self.count = count

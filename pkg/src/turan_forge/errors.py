"""Exception hierarchy shared by every turan_forge module."""


class TuranForgeError(Exception):
    """Base class for all library errors."""


class InvalidParameterError(TuranForgeError, ValueError):
    """Raised when (t, p) or another input violates a precondition."""


class SearchCapError(TuranForgeError):
    """Raised when a prime search runs past its ceiling."""


class MemoryCapError(TuranForgeError):
    """Raised when a graph would exceed the configured vertex cap."""


class BudgetExceededError(TuranForgeError):
    """Raised when the exact search runs out of nodes.

    ``best`` holds the best edge count found so far; it is a lower estimate,
    never an exact value.
    """

    def __init__(self, message, best=None, nodes_explored=0):
        super().__init__(message)
        self.best = best
        self.nodes_explored = nodes_explored

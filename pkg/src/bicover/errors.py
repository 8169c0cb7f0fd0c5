"""Exception types shared across the toolkit."""


class BicoverError(Exception):
    """Base class for all toolkit errors."""


class SizeLimitExceeded(BicoverError):
    """An exact or exhaustive routine was asked to go beyond its configured limit."""


class CapExceeded(BicoverError):
    """An enumeration or pairwise check would exceed the configured cap."""


class RangeError(BicoverError):
    """A vertex label lies outside the ground set 1..n."""


class ParseError(BicoverError):
    """Malformed serialized input.

    Carries ``line`` and ``column`` when the underlying JSON decoder
    reports a position, None for semantic (well-formed JSON, wrong shape)
    failures.
    """

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class OverlapError(BicoverError):
    """The two sides of a bipartite block intersect."""


class TargetUnreached(BicoverError):
    """A greedy construction finished its scan short of the requested size."""

    def __init__(self, message, achieved, code=None):
        super().__init__(message)
        self.achieved = achieved
        self.code = code


class FieldError(BicoverError):
    """No usable primitive polynomial for the requested field extension."""


class NoConstruction(BicoverError):
    """No implemented construction reaches the requested parameters."""


class NotEnoughCodewords(BicoverError):
    """The code has fewer codewords than the requested ground-set size."""


class GroundSetMismatch(BicoverError):
    """Two coverings (or a covering and a graph) disagree on the vertex count."""


class ImproperColoring(BicoverError):
    """Two adjacent vertices share a color."""


class DomainError(BicoverError):
    """Arguments violate a formula's or construction's precondition."""


class BudgetExhausted(BicoverError):
    """Exhaustive search ran out of budget before settling the instance.

    ``lower`` is the proven lower bound at interruption time; ``upper`` and
    ``witness`` describe the best covering found so far, if any.
    """

    def __init__(self, message, lower=None, upper=None, witness=None, nodes=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.witness = witness
        self.nodes = nodes


class InvalidCovering(BicoverError):
    """A diagnostic was invoked on a covering that fails verification."""

"""Exception types shared across the package."""


class FibertraceError(Exception):
    """Base class for all domain errors raised by this package."""


class BadInput(FibertraceError):
    """An argument violates a documented precondition."""


class NotInvertible(BadInput):
    """Modular inverse requested for a non-unit residue."""


class ModulusMismatch(FibertraceError):
    """Arithmetic between group-ring elements over different moduli."""


class NotStable(FibertraceError):
    """Closed-form trace requested for a multiplicity chain that has not
    yet reached its large-degree shape."""


class ParseError(FibertraceError):
    """Malformed graph file; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ValidationError(FibertraceError):
    """A structurally well-formed graph violates a fiber invariant."""


class NonIntegralSelfIntersection(ValidationError):
    """Adjacent chain-end multiplicities do not sum to a multiple of the
    vertex multiplicity; the input cannot be a special fiber."""


class NegativeCharacterCoefficient(FibertraceError):
    """1 - total trace has a negative coefficient; the graph is not a
    valid fiber (or there is a bug upstream)."""


class InconsistentRounding(FibertraceError):
    """Jump candidates from independent sweeps rounded to different
    multisets; the sweep degrees are too small or the graph is invalid."""


class ToleranceExceeded(FibertraceError):
    """A jump candidate is farther from every admissible rational than
    the sweep tolerance allows."""


class UnknownType(FibertraceError):
    """Catalog lookup for an unsupported fiber type."""

"""Exception taxonomy shared across the package."""


class FlowError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FlowError, ValueError):
    """An argument is outside the mathematical domain of a state function."""


class BranchError(DomainError):
    """A subsonic speed was passed to an operation that only serves the
    supersonic branch."""


class SonicDegeneracyError(DomainError):
    """The wave-speed factor is unbounded at the sonic state."""


class VacuumBudgetError(DomainError):
    """A turning value at or beyond the finite budget was requested;
    signals a vacuum state."""


class DataError(FlowError):
    """Input data (geometry, inlet profile, restriction data) violates a
    required condition."""


class FormatError(DataError):
    """Malformed input representation (non-monotone spline abscissas,
    bad config keys, ...)."""


class NumericError(FlowError):
    """A numerical procedure failed to converge or produced an
    inconsistent result."""


class ConsistencyError(NumericError):
    """An internal cross-check failed (invalid Jacobian, CFL violation)."""


class VacuumReached(FlowError):
    """Control signal: the marching state hit the vacuum budget.

    Carries the offending state so the caller can refine the vacuum
    location.
    """

    def __init__(self, phi, state=None):
        super().__init__(f"vacuum budget exhausted at phi={phi!r}")
        self.phi = phi
        self.state = state

"""Exceptions raised by the well_pressure library."""


class WellPressureError(Exception):
    """Base class for all library errors."""


# Domain errors: the inputs are outside what the model accepts

class DomainError(WellPressureError, ValueError):
    """An input lies outside the domain of an operation."""


class UnknownUnit(DomainError):
    """A quantity carries a unit token that is not in the unit grammar."""


class MalformedNumber(DomainError):
    """The numeric part of a quantity cannot be parsed as a finite real."""


class DimensionMismatch(DomainError):
    """A quantity has a different dimension than the one required."""


class NoSuchBranch(DomainError):
    """The requested even-parity branch has an empty bracket."""


class FitOutOfRange(DomainError):
    """The fitted series was evaluated where 1 - E/V0 goes negative."""


# Numerical errors: the inputs are valid but the computation failed

class NumericalError(WellPressureError, ArithmeticError):
    """A numerical procedure failed on valid inputs."""


class ConvergenceFailure(NumericalError):
    """A root finder did not reach its tolerance."""


class SingularSystem(NumericalError):
    """A least-squares design matrix is numerically rank-deficient."""


class PoleSingularity(NumericalError):
    """A denominator vanished within the pole tolerance."""


class NoRoot(NumericalError):
    """A polynomial has no positive real root in the scanned range."""


# Usage errors: the command line is incomplete

class UsageError(WellPressureError):
    """A required command-line value is missing."""

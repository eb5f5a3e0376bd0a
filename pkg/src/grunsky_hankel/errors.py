"""Exception types shared across the package."""


class GrunskyHankelError(Exception):
    """Base class for all package errors."""


class NonUnitConstantTerm(GrunskyHankelError, ValueError):
    """Log or fractional power requested for a series whose constant term is not 1."""


class NotNormalized(GrunskyHankelError, ValueError):
    """Coefficients do not have the form z + a_2 z^2 + ..."""


class InsufficientOrder(GrunskyHankelError, ValueError):
    """The truncation order is too small for the requested quantity."""


class InvalidAtoms(GrunskyHankelError, ValueError):
    """Herglotz weights/points violate the measure constraints."""


class NotCertified(GrunskyHankelError, ValueError):
    """A constructor needed a certified starlike input."""


class DimensionMismatch(GrunskyHankelError, ValueError):
    """Probe vector length does not fit the Grunsky table."""


class DomainError(GrunskyHankelError, ValueError):
    """Argument outside the domain of an auxiliary function."""


class BadParametrization(GrunskyHankelError, ValueError):
    """Parameter vector has the wrong length for the requested family."""

"""Exception types raised across the package."""


class LameError(ValueError):
    """Base class for invalid inputs and ill-posed evaluations."""


class DegenerateSingularityError(LameError):
    """Expansion point coincides with another singular point (a == b or a == c)."""


class ParameterDomainError(LameError):
    """A parameter lies outside the range an operation is defined on."""


class ComplexRootsError(LameError):
    """Characteristic roots are complex, so their moduli coincide."""


class EqualModuliError(LameError):
    """Distinct characteristic roots share a modulus; the ratio limit does not exist."""


class ZeroCoefficientError(LameError):
    """A vanishing coefficient makes a ratio undefined."""


class PoleError(LameError):
    """Closed-form generating function evaluated at a pole."""


class DoubleSumOverflowError(OverflowError):
    """Truncated double sum is not representable as a float64."""

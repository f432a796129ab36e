"""Exception types shared across the package."""


class StarkmemError(Exception):
    """Base class for all package-specific errors."""


class NearResonance(StarkmemError):
    """Laser frequency too close to a hyperfine line for perturbative formulas."""


class DivisionNearZero(StarkmemError):
    """Detuning too small for the simplified far-detuned scaling formula."""


class LifetimeNotReached(StarkmemError):
    """Efficiency never dropped below 1/e on the supplied time grid; extend it."""


class FieldOutOfRange(StarkmemError):
    """Requested compensation field exceeds what the intensity cap can deliver."""


class NonPhysicalProfile(StarkmemError):
    """No non-negative intensity profile within the cap realizes the request."""


class TargetInfeasible(StarkmemError):
    """Target intensity exceeds what the zero diffraction order can carry."""


class GridMismatch(StarkmemError):
    """Phase mask and incident-beam grids differ."""


class DomainError(StarkmemError):
    """Argument outside the mathematical domain of the operation."""


class ConfigError(StarkmemError):
    """Scenario configuration could not be parsed or validated."""

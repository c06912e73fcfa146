"""Exception types shared across the package."""


class HoledTorusError(Exception):
    """Base class for all package errors."""


class EmptyAfterReduction(HoledTorusError):
    """Input word freely reduces to the identity."""


class CapTooLarge(HoledTorusError):
    """Requested enumeration exceeds the configured memory budget."""


class SeedNotReduced(HoledTorusError):
    """Orbit seed is not a valid cyclically reduced word."""


class NonPrimitive(HoledTorusError):
    """Operation only defined for non-power (primitive) classes."""


class EqualRays(HoledTorusError):
    """Two boundary rays coincide as infinite words."""


class DegeneratePoints(HoledTorusError):
    """Chord endpoints are not pairwise distinct."""


class NoPentagon(HoledTorusError):
    """No pentagon with the requested side lengths and an acute apex."""


class NonConvergence(HoledTorusError):
    """Newton iteration failed to reach the residual target."""


class InvalidMetric(HoledTorusError):
    """Constructed representation fails the discreteness proxies."""


class EllipticOrParabolic(HoledTorusError):
    """Holonomy matrix has |trace| <= 2, so there is no geodesic length."""


class NotHyperbolic(HoledTorusError):
    """Isometry has no axis (|trace| <= 2)."""


class EndpointCollision(HoledTorusError):
    """Two axis endpoints coincide within tolerance."""


class DegenerateSpectrum(HoledTorusError):
    """Spectrum too small for coefficient estimation (T < 2 or M == u)."""


class NoFormulaFound(HoledTorusError):
    """Totient-formula search space exhausted without a match."""

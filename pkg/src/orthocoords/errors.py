"""Exception types raised across the package."""


class OrthoCoordsError(Exception):
    """Base class for all package-specific errors."""


class InvalidDimensionError(OrthoCoordsError, ValueError):
    """A dimension parameter is outside its admissible range."""


class DimensionMismatchError(OrthoCoordsError, ValueError):
    """Vector or matrix arguments do not match the expected dimension."""


class FrameError(OrthoCoordsError, ValueError):
    """A frame fails its orthonormality requirement."""


class OrientationError(OrthoCoordsError, ValueError):
    """A frame has the wrong orientation for an orientation-dependent identity."""


class DegenerateMetricError(OrthoCoordsError, ValueError):
    """A chart scale function is non-positive at the evaluation point."""


class OutsideDomainError(OrthoCoordsError, ValueError):
    """A point lies outside the declared chart domain."""


class GridTooCoarseError(OrthoCoordsError, ValueError):
    """A grid has too few points per axis for central differences."""


class PreconditionViolatedError(OrthoCoordsError, ValueError):
    """An input does not satisfy the documented precondition of a certificate."""


class ConstructionFailedError(OrthoCoordsError, RuntimeError):
    """A deterministic construction did not reach its required accuracy."""


class DegeneratePairError(OrthoCoordsError, ValueError):
    """The chosen frame pair pairs to zero under every symplectic form."""


class SpaceSpecError(OrthoCoordsError, ValueError):
    """A model-space or chart spec string does not parse."""

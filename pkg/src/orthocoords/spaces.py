"""Model spaces with known curvature: flat space, round spheres, CP^m, HP^q."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidDimensionError, SpaceSpecError

_FAMILIES = ("flat", "sphere", "cp", "hp")


@dataclass(frozen=True)
class ModelSpace:
    """One of the built-in homogeneous spaces.

    ``family`` is one of ``flat``, ``sphere``, ``cp``, ``hp``; ``index`` is
    the dimension for flat/sphere, the complex dimension m for cp, and the
    quaternionic dimension q for hp.
    """

    family: str
    index: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise SpaceSpecError(f"unknown space family {self.family!r}")
        if self.family in ("flat", "sphere") and self.index < 2:
            raise InvalidDimensionError(f"{self.family} needs dimension >= 2, got {self.index}")
        if self.family in ("cp", "hp") and self.index < 1:
            raise InvalidDimensionError(f"{self.family} index must be >= 1, got {self.index}")

    @property
    def dimension(self) -> int:
        """Real dimension of the tangent space."""
        if self.family in ("flat", "sphere"):
            return self.index
        if self.family == "cp":
            return 2 * self.index
        return 4 * self.index

    @property
    def label(self) -> str:
        return f"{self.family}:{self.index}"


def parse_space(text: str) -> ModelSpace:
    """Parse a ``family:index`` spec string such as ``cp:2`` or ``flat:5``."""
    parts = text.split(":")
    if len(parts) != 2 or parts[0] not in _FAMILIES:
        raise SpaceSpecError(f"cannot parse space spec {text!r}; expected e.g. 'cp:2'")
    try:
        index = int(parts[1])
    except ValueError:
        raise SpaceSpecError(f"space index in {text!r} is not an integer") from None
    return ModelSpace(parts[0], index)

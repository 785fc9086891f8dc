"""Maxwell field in Duffin-Kemmer tetrad form on the static spherical universe S3."""

from .modes import (ModeKind, ModeSpec, RadialSolution, build_mode, electric_mode,
                    magnetic_mode, spectrum)

__version__ = "0.1.0"

__all__ = ["ModeKind", "ModeSpec", "RadialSolution", "build_mode", "electric_mode",
           "magnetic_mode", "spectrum"]

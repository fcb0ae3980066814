"""Plane-wave dispersion checks."""

from .spectrum import (
    DispersionPoint,
    DispersionRelation,
    DispersionReport,
    DispersionResult,
    Momentum,
    check_dispersion,
    plane_wave_spectrum,
    residual_of_postulate,
)

__all__ = [
    "DispersionPoint",
    "DispersionRelation",
    "DispersionReport",
    "DispersionResult",
    "Momentum",
    "check_dispersion",
    "plane_wave_spectrum",
    "residual_of_postulate",
]

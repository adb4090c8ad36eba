"""Green's functions of the wave equation in the N-dimensional Maxwell fish-eye medium."""

from .errors import FisheyeError, ResonantDegree
from .greens import (
    GreenValue,
    Representation,
    asymptotic_constant,
    green,
    green_central,
    green_generalized,
    singular_coefficient,
)
from .medium import Degree, Medium, chi, image_point, nu_from_k, resonant_wavenumbers

__version__ = "0.1.0"

__all__ = [
    "Medium",
    "Degree",
    "chi",
    "image_point",
    "nu_from_k",
    "resonant_wavenumbers",
    "green",
    "green_central",
    "green_generalized",
    "asymptotic_constant",
    "singular_coefficient",
    "GreenValue",
    "Representation",
    "FisheyeError",
    "ResonantDegree",
]

"""Fundamental parallelepipeds of integer lattices."""

from .parallelepiped import (
    PiSet,
    decompose,
    in_parallelepiped,
    pi_points,
    pi_points_box_oracle,
    saturation_basis,
)

__all__ = [
    "PiSet",
    "decompose",
    "in_parallelepiped",
    "pi_points",
    "pi_points_box_oracle",
    "saturation_basis",
]

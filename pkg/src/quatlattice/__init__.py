"""Exact arithmetic for quaternionic lattices acting on products of trees."""

from .quat import GroupElement, Quaternion
from .gensets import GeneratorSet, generator_set
from .square_complex import Presentation, build_squares
from .words import Word

__all__ = [
    "GroupElement",
    "Quaternion",
    "GeneratorSet",
    "generator_set",
    "Presentation",
    "build_squares",
    "Word",
]
__version__ = "0.1.0"

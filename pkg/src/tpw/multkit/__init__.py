"""Multipliers, dimensional splitness, boundaries, and the property classifier."""

from .classify import PROPERTIES, Classifier, classify
from .multiplier import (ExistsImpl, Multiplier, SliceObj, MULTIPLIER_SPECS,
                         affine_cube_multiplier, cartesian_cube_multiplier,
                         cchm_multiplier, clocks_multiplier, cube_bot_multiplier,
                         depth_cube_multiplier, finord_multiplier,
                         identity_multiplier, make_multiplier,
                         simplex_multiplier, twisted_multiplier)

# enumeration bounds used for the golden table; CCHM is capped at
# dimension 2 (larger hom-sets are not enumerable) and the exotic
# presentations use their natural size measures
CLASSIFY_BOUNDS = {
    "cartesian-cube(2)": 3,
    "affine-cube(2)": 3,
    "cchm": 2,
    "depth-cube(1)": 2,
    "clocks(2)": 2,
    "twisted-cube": 4,
    "finord(4)": 4,
    "simplex": 4,
    "cube-bot": 3,
}


def default_bound(spec: str) -> int:
    return CLASSIFY_BOUNDS.get(spec, 2)


__all__ = [
    "Multiplier", "ExistsImpl", "SliceObj", "Classifier", "classify",
    "PROPERTIES", "MULTIPLIER_SPECS", "CLASSIFY_BOUNDS", "default_bound",
    "make_multiplier", "identity_multiplier",
    "cartesian_cube_multiplier", "affine_cube_multiplier", "cchm_multiplier",
    "depth_cube_multiplier", "clocks_multiplier", "twisted_multiplier",
    "finord_multiplier", "simplex_multiplier", "cube_bot_multiplier",
]

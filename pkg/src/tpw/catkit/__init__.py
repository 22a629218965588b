"""Finitely presented base categories in canonical normal form."""

from __future__ import annotations

import re

from .cchm import CCHMCube
from .core import BaseCategory, MorNF, ObjId, UsageError
from .cubes import AffineCube, CartesianCube, Clocks, CubeBot, DepthCube
from .orders import FinOrd, Simplex, TwistedCube

_SPEC_RE = re.compile(r"^\s*([a-z-]+)\s*(?:\(\s*([0-9,\s]*)\s*\))?\s*$")


def make_category(spec: str) -> BaseCategory:
    """Build a presentation from a name like 'cartesian-cube(2)' or 'cchm'."""
    m = _SPEC_RE.match(spec)
    if not m:
        raise UsageError(f"cannot parse category spec {spec!r}")
    name, args_s = m.group(1), m.group(2)
    args = [int(a) for a in args_s.split(",")] if args_s else []

    def arg(i, default=None):
        if i < len(args):
            return args[i]
        if default is None:
            raise UsageError(f"category {name!r} needs parameter #{i + 1}")
        return default

    if name == "cartesian-cube":
        return CartesianCube(arg(0, 2))
    if name == "affine-cube":
        return AffineCube(arg(0, 2))
    if name == "cchm":
        return CCHMCube()
    if name == "depth-cube":
        return DepthCube(arg(0, 1))
    if name == "clocks":
        return Clocks(arg(0, 2))
    if name == "twisted-cube":
        return TwistedCube()
    if name == "finord":
        return FinOrd(arg(0, 4))
    if name == "simplex":
        return Simplex()
    if name == "cube-bot":
        return CubeBot()
    raise UsageError(f"unknown category {name!r}")


CATEGORY_NAMES = ("cartesian-cube", "affine-cube", "cchm", "depth-cube",
                  "clocks", "twisted-cube", "finord", "simplex", "cube-bot")

__all__ = [
    "BaseCategory", "ObjId", "MorNF", "UsageError",
    "CartesianCube", "AffineCube", "CCHMCube", "DepthCube", "Clocks",
    "CubeBot", "FinOrd", "Simplex", "TwistedCube",
    "make_category", "CATEGORY_NAMES",
]

"""Exact cevian constructions and the elliptic family E_a.

Rational inputs may be ints, strings such as "-2/5", or fractions.Fraction;
exact outputs are canonical fraction strings.
"""

import json

from ._core import (
    CeviaError,
    a_of_point,
    complement,
    disc_d,
    flags,
    isotomic,
    j_invariant,
    normalize,
    plot,
    weierstrass_image,
)
from . import _core

__all__ = [
    "CeviaError",
    "a_of_point",
    "complement",
    "construct",
    "curve_info",
    "disc_d",
    "flags",
    "group_table",
    "isotomic",
    "j_invariant",
    "j_invert",
    "normalize",
    "plot",
    "verify",
    "weierstrass_image",
]


def construct(x, y, z):
    """Every named point and ratio built from P = (x, y, z)."""
    return json.loads(_core.construct_json(x, y, z))


def curve_info(a):
    return json.loads(_core.curve_info_json(a))


def group_table(a):
    return json.loads(_core.group_table_json(a))


def j_invert(j0, precision="1/10000000000"):
    return json.loads(_core.j_invert_json(j0, precision))


def verify(samples=10, seed=1):
    return json.loads(_core.verify_json(samples, seed))

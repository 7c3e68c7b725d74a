"""Domino tableaux of types B and C.

Thin wrapper over the C++ core; report-style results come back as dicts.
"""

import json

from ._core import (
    DominoTableau,
    TableauPair,
    apply_operators,
    enumerate_tableaux,
    extract,
    insert,
    is_special,
    kl_polynomial,
    orbit,
    tilable_shapes,
    two_quotient,
)
from . import _core


def orbit_check(kind="C", max_rank=4, with_s_family=True):
    return json.loads(_core._orbit_check(kind, max_rank, with_s_family))


def character_table(n):
    return json.loads(_core._character_table(n))


def verify_isotypic(n, kind="C"):
    return json.loads(_core._verify_isotypic(n, kind))


def c6_check():
    return json.loads(_core._c6_check())


__all__ = [
    "DominoTableau",
    "TableauPair",
    "apply_operators",
    "c6_check",
    "character_table",
    "enumerate_tableaux",
    "extract",
    "insert",
    "is_special",
    "kl_polynomial",
    "orbit",
    "orbit_check",
    "tilable_shapes",
    "two_quotient",
    "verify_isotypic",
]

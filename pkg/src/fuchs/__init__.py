"""Unit groups of rings: decision procedures, witnesses, verification."""

from .classify import (
    GroupDescriptor,
    GroupKind,
    RealizabilityVerdict,
    cyclic,
    decide,
    quasi_cyclic,
    realizable_cyclic,
    realizable_with_char,
    torsion_free,
    witness,
)
from .errors import FuchsError, NoWitnessError, SizeLimitError
from .finring import TableRing, mk_finite_field, mk_poly_quotient, mk_product, mk_zn
from .parsing import parse_group, parse_ring
from .unitgroup import AbelianGroupStructure, group_structure, unit_count, units

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupStructure",
    "FuchsError",
    "GroupDescriptor",
    "GroupKind",
    "NoWitnessError",
    "RealizabilityVerdict",
    "SizeLimitError",
    "TableRing",
    "cyclic",
    "decide",
    "group_structure",
    "mk_finite_field",
    "mk_poly_quotient",
    "mk_product",
    "mk_zn",
    "parse_group",
    "parse_ring",
    "quasi_cyclic",
    "realizable_cyclic",
    "realizable_with_char",
    "torsion_free",
    "unit_count",
    "units",
    "witness",
]

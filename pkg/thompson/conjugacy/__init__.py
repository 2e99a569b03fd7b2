"""Conjugacy problem: decomposition, periodic and regular infinite parts, and the full test."""

from .decomposition import Decomposition, decompose, lift_conjugator, rebase_to_standard_rank, restrict, standard_rank
from .periodic import Orbit, conjugate_periodic, cycle_type, orbits_of_periodic
from .regular_infinite import (
    Link,
    characteristic_links,
    class_shift,
    conjugate_regular_infinite,
    equivalence_classes,
)
from .solver import conjugate

__all__ = [
    "Decomposition",
    "Link",
    "Orbit",
    "characteristic_links",
    "class_shift",
    "conjugate",
    "conjugate_periodic",
    "conjugate_regular_infinite",
    "cycle_type",
    "decompose",
    "equivalence_classes",
    "lift_conjugator",
    "orbits_of_periodic",
    "rebase_to_standard_rank",
    "restrict",
    "standard_rank",
]

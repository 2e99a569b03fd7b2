"""Automorphisms of V_{n,r} as canonical symbols."""

from .file_format import (
    dump_automorphism,
    dumps_automorphism,
    example_names,
    load_automorphism,
    load_example,
    loads_automorphism,
)
from .symbol import (
    Automorphism,
    apply,
    apply_power,
    compose,
    conjugate_by,
    free_product,
    from_map,
    identity,
    invert,
    minimal_expansion_for,
    power,
)
from .trees import forest_leaves, from_tree_pair

__all__ = [
    "Automorphism",
    "apply",
    "apply_power",
    "compose",
    "conjugate_by",
    "dump_automorphism",
    "dumps_automorphism",
    "example_names",
    "forest_leaves",
    "free_product",
    "from_map",
    "from_tree_pair",
    "identity",
    "invert",
    "load_automorphism",
    "load_example",
    "loads_automorphism",
    "minimal_expansion_for",
    "power",
]

"""Word, conjugacy and power conjugacy problems for the Higman-Thompson groups G_{n,r}."""

from thompson.algebra import ABasis, Signature, SimpleWord, Word, format_word, make_signature, parse_word
from thompson.automorphism import Automorphism, from_map, from_tree_pair, load_automorphism, load_example
from thompson.conjugacy import conjugate
from thompson.exceptions import ThompsonError
from thompson.orbits import orbit_test, quasi_normal_basis
from thompson.power_conjugacy import power_conjugate

__all__ = [
    "ABasis",
    "Automorphism",
    "Signature",
    "SimpleWord",
    "ThompsonError",
    "Word",
    "conjugate",
    "format_word",
    "from_map",
    "from_tree_pair",
    "load_automorphism",
    "load_example",
    "make_signature",
    "orbit_test",
    "parse_word",
    "power_conjugate",
    "quasi_normal_basis",
]

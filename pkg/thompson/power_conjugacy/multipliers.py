"""How multiplier sets change under powers."""

import math

from thompson.algebra.paths import path_power, primitive_root
from thompson.orbits.qnf import multiplier_set
from thompson.orbits.types import Characteristic

MultiplierSet = frozenset[Characteristic]

__all__ = ["MultiplierSet", "multiplier_set", "power_multiplier_set", "primitive_root"]


def power_multiplier_set(multipliers: MultiplierSet, a: int) -> MultiplierSet:
    """The multiplier set of psi^a, given that of psi.

    (m, Gamma) becomes (m/d, Gamma^q) with d = gcd(m, a) and |a| = qd; for
    negative a the sign of the power flips.

    Raises:
        ValueError: If a is zero.
    """
    if a == 0:
        raise ValueError("psi^0 is the identity and has no multipliers")
    sign = 1 if a > 0 else -1
    result = set()
    for power, multiplier in multipliers:
        d = math.gcd(power, a)
        result.add(Characteristic(sign * power // d, path_power(multiplier, abs(a) // d)))
    return frozenset(result)

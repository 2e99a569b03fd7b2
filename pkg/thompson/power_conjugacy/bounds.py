"""Upper bounds on the smallest powers a, b with psi^a conjugate to phi^b."""

import logging
import math
from collections import defaultdict

from thompson.algebra.paths import Path, primitive_root
from thompson.orbits.types import Characteristic

from .multipliers import MultiplierSet

logger = logging.getLogger(__name__)


def partition_by_root(multipliers: MultiplierSet) -> dict[Path, list[Characteristic]]:
    """Group characteristics whose multipliers share a primitive root."""
    parts: dict[Path, list[Characteristic]] = defaultdict(list)
    for characteristic in sorted(multipliers):
        root, _ = primitive_root(characteristic.multiplier)
        parts[root].append(characteristic)
    return dict(parts)


def _exponent(characteristic: Characteristic) -> int:
    return primitive_root(characteristic.multiplier)[1]


def bounds(psi_multipliers: MultiplierSet, phi_multipliers: MultiplierSet) -> tuple[int, int]:
    """(a_hat, b_hat) for regular infinite psi and phi; (0, 0) when no power can match the roots.

    With the multiplier sets split into parts P_i, Q_i of common root,
    a_hat = prod (prod_P |m|)^|Q| (prod_Q m(Delta))^|P| and b_hat is the same
    with the roles of psi and phi exchanged.
    """
    left, right = partition_by_root(psi_multipliers), partition_by_root(phi_multipliers)
    if left.keys() != right.keys():
        logger.debug(f"multiplier roots differ: {sorted(left)} vs {sorted(right)}")
        return 0, 0

    a_hat = b_hat = 1
    for root in left:
        p, q = left[root], right[root]
        a_hat *= math.prod(abs(c.power) for c in p) ** len(q) * math.prod(_exponent(c) for c in q) ** len(p)
        b_hat *= math.prod(abs(c.power) for c in q) ** len(p) * math.prod(_exponent(c) for c in p) ** len(q)
    return a_hat, b_hat

"""Power conjugacy: multiplier sets of powers, bounds and the solvers."""

from .bounds import bounds, partition_by_root
from .multipliers import MultiplierSet, multiplier_set, power_multiplier_set, primitive_root
from .solver import power_conjugate, power_conjugate_periodic, power_conjugate_regular_infinite, sweep

__all__ = [
    "MultiplierSet",
    "bounds",
    "multiplier_set",
    "partition_by_root",
    "power_conjugate",
    "power_conjugate_periodic",
    "power_conjugate_regular_infinite",
    "power_multiplier_set",
    "primitive_root",
    "sweep",
]

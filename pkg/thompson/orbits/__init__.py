"""Semi-normal forms, X-components and the orbit-sharing test."""

from .components import Normalized, component_test, component_type, normalize
from .forms import (
    QnfData,
    characteristic_of,
    initial_basis,
    is_semi_normal,
    semi_normal_basis,
)
from .orbit_test import orbit_test
from .qnf import find_ponds, is_periodic, is_regular_infinite, multiplier_set, order_of, quasi_normal_basis
from .scanning import ComponentScan, DirectionScan, ScanState, scan_component
from .types import Characteristic, ComponentType, LeafType, Pond, Witness

__all__ = [
    "Characteristic",
    "ComponentScan",
    "ComponentType",
    "DirectionScan",
    "LeafType",
    "Normalized",
    "Pond",
    "QnfData",
    "ScanState",
    "Witness",
    "characteristic_of",
    "component_test",
    "component_type",
    "find_ponds",
    "initial_basis",
    "is_periodic",
    "is_regular_infinite",
    "is_semi_normal",
    "multiplier_set",
    "normalize",
    "orbit_test",
    "order_of",
    "quasi_normal_basis",
    "scan_component",
    "semi_normal_basis",
]

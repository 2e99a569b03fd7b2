"""Value types shared by the orbit machinery."""

from enum import StrEnum
from typing import NamedTuple

from thompson.algebra.paths import Path, format_path
from thompson.algebra.words import SimpleWord


class LeafType(StrEnum):
    """Type of a basis element in semi-normal form."""

    PERIODIC = "A"
    CHARACTERISTIC = "B"
    TRANSIENT = "C"


class ComponentType(StrEnum):
    """The five kinds of X-component."""

    COMPLETE_FINITE = "complete-finite"
    COMPLETE_INFINITE = "complete-infinite"
    RIGHT_SEMI_INFINITE = "right-semi-infinite"
    LEFT_SEMI_INFINITE = "left-semi-infinite"
    INCOMPLETE_FINITE = "incomplete-finite"


class Characteristic(NamedTuple):
    """(m, Gamma) with u psi^m = u Gamma and |m| minimal."""

    power: int
    multiplier: Path

    def __str__(self) -> str:
        return f"({self.power}, {format_path(self.multiplier)})"


class Witness(NamedTuple):
    """x psi^power = leaf path, with leaf of type B; stored for every type C element."""

    leaf: SimpleWord
    power: int
    path: Path


class Pond(NamedTuple):
    """terminal psi^width = initial, with every element strictly between outside X<A>."""

    terminal: SimpleWord
    width: int
    initial: SimpleWord

    def __str__(self) -> str:
        return f"pond l={self.terminal} k={self.width} r={self.initial}"

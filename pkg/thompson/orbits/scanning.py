"""Forward and backward enumeration of an X-component.

Starting from u in X<A>, the scan applies psi (or its inverse) until the orbit
returns to u, leaves X<A>, or reaches an element whose X-prefix already
occurred; the last case is kept as the final listed element.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum

from thompson.algebra.bases import ABasis
from thompson.algebra.words import SimpleWord, Word
from thompson.automorphism.symbol import Automorphism, apply
from thompson.config import search_limits
from thompson.exceptions import NotABasisError, SearchLimitExceeded
from thompson.orbits.types import ComponentType
from thompson.utils.logging_utils import log_search_progress

logger = logging.getLogger(__name__)

PROGRESS_INTERVAL = 10_000


class ScanState(StrEnum):
    """Why a one-directional scan stopped."""

    CYCLE = "cycle"
    LEAVES = "1"
    REPEATS = "2"


@dataclass(frozen=True, slots=True)
class DirectionScan:
    state: ScanState
    elements: tuple[SimpleWord, ...]


@dataclass(frozen=True, slots=True)
class ComponentScan:
    """Both scans of one element; forward holds u psi^1, u psi^2, ... and backward u psi^-1, ..."""

    start: SimpleWord
    forward: DirectionScan
    backward: DirectionScan

    @property
    def is_cycle(self) -> bool:
        return self.forward.state is ScanState.CYCLE

    @property
    def period(self) -> int:
        """Orbit length of a cycle."""
        if not self.is_cycle:
            raise ValueError(f"{self.start} is not in a finite orbit")
        return len(self.forward.elements) + 1

    @property
    def states(self) -> tuple[ScanState, ScanState]:
        return self.forward.state, self.backward.state

    def raw_type(self) -> ComponentType:
        """Component type read off the halting states alone.

        Exact for the complete-finite and incomplete-finite cases; use
        orbit_test.component_type for elements below semi-infinite components.
        """
        if self.is_cycle:
            return ComponentType.COMPLETE_FINITE
        match self.states:
            case (ScanState.LEAVES, ScanState.LEAVES):
                return ComponentType.INCOMPLETE_FINITE
            case (ScanState.REPEATS, ScanState.LEAVES):
                return ComponentType.RIGHT_SEMI_INFINITE
            case (ScanState.LEAVES, ScanState.REPEATS):
                return ComponentType.LEFT_SEMI_INFINITE
            case _:
                return ComponentType.COMPLETE_INFINITE

    def indexed(self) -> Iterator[tuple[int, SimpleWord]]:
        """(i, u psi^i) for every listed element, the start included."""
        yield 0, self.start
        for i, element in enumerate(self.forward.elements, start=1):
            yield i, element
        for i, element in enumerate(self.backward.elements, start=1):
            yield -i, element

    def find(self, target: Word) -> int | None:
        """Shift i with start psi^i = target among the listed elements."""
        for i, element in self.indexed():
            if element == target:
                return i
        return None


def scan_direction(step: Automorphism, basis: ABasis, start: SimpleWord, limit: int | None = None) -> DirectionScan:
    """Iterate step from start until the orbit cycles, leaves basis<A>, or repeats an X-prefix.

    Raises:
        NotABasisError: If start is not in basis<A>.
        SearchLimitExceeded: If more than limit steps are needed.
    """
    first = basis.split(start)
    if first is None:
        raise NotABasisError(f"{start} is not below {basis}")
    limit = limit or search_limits().max_steps

    seen = {first[0]}
    elements: list[SimpleWord] = []
    current: Word = start
    for steps in range(1, limit + 1):
        if steps % PROGRESS_INTERVAL == 0:
            log_search_progress(logger, "scan", steps, limit)
        following = apply(step, current)
        if following == start:
            return DirectionScan(ScanState.CYCLE, tuple(elements))
        split = basis.split(following)
        if split is None:
            return DirectionScan(ScanState.LEAVES, tuple(elements))
        assert isinstance(following, SimpleWord)
        elements.append(following)
        if split[0] in seen:
            return DirectionScan(ScanState.REPEATS, tuple(elements))
        seen.add(split[0])
        current = following
    raise SearchLimitExceeded(f"orbit scan of {start} did not halt", procedure="scan", steps=limit)


def scan_component(psi: Automorphism, basis: ABasis, start: SimpleWord, limit: int | None = None) -> ComponentScan:
    """Scan the X-component of start in both directions."""
    forward = scan_direction(psi, basis, start, limit)
    if forward.state is ScanState.CYCLE:
        return ComponentScan(start, forward, DirectionScan(ScanState.CYCLE, ()))
    backward = scan_direction(psi.inverse, basis, start, limit)
    return ComponentScan(start, forward, backward)

"""The quasi-normal form of an automorphism, with its ponds, order and multipliers."""

import functools
import logging
import math
from dataclasses import replace

from thompson.algebra.paths import Path, paths_of_length
from thompson.algebra.words import SimpleWord, descend
from thompson.automorphism.symbol import Automorphism, apply_power
from thompson.config import search_limits
from thompson.exceptions import SearchLimitExceeded
from thompson.orbits.components import component_test, component_type
from thompson.orbits.forms import (
    QnfData,
    characteristic_of,
    contract_to_quasi_normal,
    semi_normal_basis,
    typed_basis,
)
from thompson.orbits.types import Characteristic, ComponentType, LeafType, Pond
from thompson.utils.logging_utils import log_operation

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=256)
@log_operation("quasi_normal_basis")
def quasi_normal_basis(psi: Automorphism) -> QnfData:
    """X_psi with leaf types, characteristics, endpoints and ponds."""
    basis = contract_to_quasi_normal(psi, semi_normal_basis(psi))
    data = typed_basis(psi, basis)
    data = replace(data, ponds=find_ponds(psi, data))
    logger.debug(f"quasi-normal basis of {psi.sig}: {data.basis} ({len(data.ponds)} ponds)")
    return data


def _complete_infinite_path(psi: Automorphism, qnf: QnfData, word: SimpleWord, max_length: int) -> Path:
    """First Gamma, by length then forest order, with word Gamma in a complete infinite X-component."""
    for length in range(max_length + 1):
        for path in paths_of_length(psi.sig.n, length):
            candidate = descend(word, path)
            assert isinstance(candidate, SimpleWord)
            if component_type(psi, qnf, candidate) is ComponentType.COMPLETE_INFINITE:
                return path
    raise SearchLimitExceeded(
        f"no descendant of {word} of length <= {max_length} lies in a complete infinite component",
        procedure="pond-search",
        steps=max_length,
    )


def find_ponds(psi: Automorphism, qnf: QnfData, max_length: int | None = None) -> tuple[Pond, ...]:
    """All triples (l, k, r) with l psi^k = r, l terminal and r initial, neither characteristic."""
    max_length = max_length or search_limits().pond_path_length
    terminals = sorted(t for t in qnf.terminals if characteristic_of(psi, qnf, t) is None)
    initials = sorted(i for i in qnf.initials if characteristic_of(psi, qnf, i) is None)
    if not terminals or not initials:
        return ()

    ponds: list[Pond] = []
    for terminal in terminals:
        path = _complete_infinite_path(psi, qnf, terminal, max_length)
        sample = descend(terminal, path)
        assert isinstance(sample, SimpleWord)
        for initial in initials:
            target = descend(initial, path)
            assert isinstance(target, SimpleWord)
            answer = component_test(psi, qnf, sample, target)
            if not answer.related or answer.shift is None or answer.shift <= 0:
                continue
            if apply_power(psi, terminal, answer.shift) != initial:
                continue
            if answer.shift < 2:
                logger.warning(f"pond of width {answer.shift} between {terminal} and {initial}")
            ponds.append(Pond(terminal, answer.shift, initial))
    return tuple(ponds)


def order_of(psi: Automorphism) -> int | None:
    """Order of psi; None stands for infinite order."""
    qnf = quasi_normal_basis(psi)
    if any(kind is LeafType.CHARACTERISTIC for kind in qnf.types.values()):
        return None
    return math.lcm(*qnf.periods.values()) if qnf.periods else 1


def is_periodic(psi: Automorphism) -> bool:
    return quasi_normal_basis(psi).is_periodic


def is_regular_infinite(psi: Automorphism) -> bool:
    return quasi_normal_basis(psi).is_regular_infinite


def multiplier_set(psi: Automorphism) -> frozenset[Characteristic]:
    """Characteristics of the semi-infinite X-components of psi."""
    return quasi_normal_basis(psi).multipliers

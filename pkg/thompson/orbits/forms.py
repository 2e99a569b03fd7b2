"""Semi-normal and quasi-normal bases, leaf types and characteristics."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field

from thompson.algebra.bases import (
    ABasis,
    contractible_parents,
    simple_contraction,
    simple_expansion,
)
from thompson.algebra.words import SimpleWord, Word, is_initial_segment
from thompson.automorphism.symbol import Automorphism, apply, minimal_expansion_for
from thompson.exceptions import ThompsonError
from thompson.orbits.scanning import ComponentScan, ScanState, scan_component
from thompson.orbits.types import Characteristic, LeafType, Pond, Witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QnfData:
    """Everything the orbit and conjugacy algorithms read off the quasi-normal basis X_psi."""

    basis: ABasis
    types: Mapping[SimpleWord, LeafType]
    characteristics: Mapping[SimpleWord, Characteristic]
    witnesses: Mapping[SimpleWord, Witness]
    periods: Mapping[SimpleWord, int]
    terminals: frozenset[SimpleWord]
    initials: frozenset[SimpleWord]
    multipliers: frozenset[Characteristic]
    ponds: tuple[Pond, ...] = field(default=())

    def leaves_of_type(self, kind: LeafType) -> list[SimpleWord]:
        return [leaf for leaf in self.basis.leaves if self.types[leaf] is kind]

    @property
    def is_periodic(self) -> bool:
        return all(kind is LeafType.PERIODIC for kind in self.types.values())

    @property
    def is_regular_infinite(self) -> bool:
        return all(kind is not LeafType.PERIODIC for kind in self.types.values())


def _range_basis(psi: Automorphism) -> ABasis:
    return ABasis._trusted(psi.sig, psi.range_leaves)


def initial_basis(psi: Automorphism) -> ABasis:
    """Smallest expansion of x_1..x_r lying inside Y<A> union Z<A>."""
    domain, range_ = psi.domain, _range_basis(psi)
    leaves: list[SimpleWord] = []
    pending = [SimpleWord(g) for g in range(1, psi.sig.r + 1)]
    while pending:
        node = pending.pop()
        if domain.generates(node) or range_.generates(node):
            leaves.append(node)
        else:
            pending.extend(node.child(i) for i in psi.sig.letters)
    return ABasis._trusted(psi.sig, leaves)


def _is_incomplete(scan: ComponentScan) -> bool:
    return scan.states == (ScanState.LEAVES, ScanState.LEAVES)


def is_semi_normal(psi: Automorphism, basis: ABasis) -> bool:
    """True iff no element of basis lies in an incomplete finite X-component."""
    return not any(_is_incomplete(scan_component(psi, basis, leaf)) for leaf in basis.leaves)


def semi_normal_basis(psi: Automorphism) -> ABasis:
    """Expand the initial basis at incomplete components until psi is in semi-normal form."""
    basis = initial_basis(psi)
    while True:
        incomplete = next(
            (leaf for leaf in basis.leaves if _is_incomplete(scan_component(psi, basis, leaf))),
            None,
        )
        if incomplete is None:
            return basis
        logger.debug(f"expanding {incomplete}: incomplete finite component")
        basis = simple_expansion(basis, incomplete)


def contract_to_quasi_normal(psi: Automorphism, basis: ABasis) -> ABasis:
    """Contract sibling leaves while psi stays semi-normal."""
    changed = True
    while changed:
        changed = False
        for parent in contractible_parents(basis):
            candidate = simple_contraction(basis, parent)
            if is_semi_normal(psi, candidate):
                basis = candidate
                changed = True
                break
    return basis


def search_characteristic(psi: Automorphism, word: Word, bound: int) -> Characteristic | None:
    """Smallest |j| <= bound with word psi^j = word Gamma, Gamma non-empty; +j is tried before -j."""
    forward = backward = word
    for j in range(1, bound + 1):
        forward = apply(psi, forward)
        path = is_initial_segment(word, forward)
        if path:
            return Characteristic(j, path)
        backward = apply(psi.inverse, backward)
        path = is_initial_segment(word, backward)
        if path:
            return Characteristic(-j, path)
    return None


def characteristic_of(psi: Automorphism, qnf: QnfData, word: Word) -> Characteristic | None:
    """Characteristic of word, or None if word is not a characteristic element.

    Every characteristic power is bounded by |X_psi|.
    """
    return search_characteristic(psi, word, len(qnf.basis))


def _witness(scan: ComponentScan, basis: ABasis, types: Mapping[SimpleWord, LeafType]) -> Witness:
    for power, element in scan.indexed():
        if power == 0:
            continue
        split = basis.split(element)
        if split is not None and types.get(split[0]) is LeafType.CHARACTERISTIC:
            return Witness(split[0], power, split[1])
    raise ThompsonError(f"no characteristic leaf in the component of {scan.start}")


def _endpoints(psi: Automorphism, basis: ABasis) -> frozenset[SimpleWord]:
    """Elements of X<A> outside Y<A>, where Y is the minimal expansion of X with Y psi inside X<A>."""
    expansion = minimal_expansion_for([psi], basis)
    return frozenset(node for node in expansion.internal_nodes() if basis.generates(node))


def typed_basis(psi: Automorphism, basis: ABasis) -> QnfData:
    """Classify the leaves of a semi-normal basis; ponds are filled in separately."""
    scans = {leaf: scan_component(psi, basis, leaf) for leaf in basis.leaves}
    types: dict[SimpleWord, LeafType] = {}
    characteristics: dict[SimpleWord, Characteristic] = {}
    periods: dict[SimpleWord, int] = {}
    for leaf, scan in scans.items():
        if scan.is_cycle:
            types[leaf] = LeafType.PERIODIC
            periods[leaf] = scan.period
            continue
        characteristic = search_characteristic(psi, leaf, len(basis))
        if characteristic is None:
            types[leaf] = LeafType.TRANSIENT
        else:
            types[leaf] = LeafType.CHARACTERISTIC
            characteristics[leaf] = characteristic

    witnesses = {
        leaf: _witness(scans[leaf], basis, types) for leaf, kind in types.items() if kind is LeafType.TRANSIENT
    }

    terminals = _endpoints(psi, basis)
    initials = _endpoints(psi.inverse, basis)
    multipliers = frozenset(
        characteristic
        for endpoint in terminals | initials
        if (characteristic := search_characteristic(psi, endpoint, len(basis))) is not None
    )
    return QnfData(
        basis=basis,
        types=types,
        characteristics=characteristics,
        witnesses=witnesses,
        periods=periods,
        terminals=terminals,
        initials=initials,
        multipliers=multipliers,
    )

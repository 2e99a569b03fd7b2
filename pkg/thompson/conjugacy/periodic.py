"""Conjugacy of periodic automorphisms by matching orbits of equal size."""

import logging
from collections import Counter, defaultdict

from thompson.algebra.bases import ABasis, expand_leftmost, standard_basis
from thompson.algebra.paths import Path
from thompson.algebra.words import Signature, SimpleWord
from thompson.automorphism.symbol import Automorphism, apply, conjugate_by, from_map
from thompson.exceptions import NotPeriodicError, SignatureError
from thompson.models import ConjugacyCertificate, CycleType
from thompson.orbits.qnf import quasi_normal_basis
from thompson.utils.logging_utils import log_decision, log_operation

logger = logging.getLogger(__name__)

Orbit = tuple[SimpleWord, ...]


def _require_periodic(psi: Automorphism) -> None:
    if not quasi_normal_basis(psi).is_periodic:
        raise NotPeriodicError("automorphism has infinite order")


def orbits_of_periodic(psi: Automorphism, basis: ABasis | None = None) -> list[Orbit]:
    """Orbits of psi on basis (default X_psi), each starting at its least element, sorted by that element."""
    _require_periodic(psi)
    basis = basis or quasi_normal_basis(psi).basis
    seen: set[SimpleWord] = set()
    orbits: list[Orbit] = []
    for leaf in basis.leaves:
        if leaf in seen:
            continue
        orbit = [leaf]
        current = apply(psi, leaf)
        while current != leaf:
            assert isinstance(current, SimpleWord)
            orbit.append(current)
            current = apply(psi, current)
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return orbits


def cycle_type(psi: Automorphism) -> CycleType:
    """Orbit-size census of psi on X_psi.

    Raises:
        NotPeriodicError: If psi has infinite order.
    """
    return CycleType(entries=dict(Counter(len(orbit) for orbit in orbits_of_periodic(psi))))


def _expansion_paths(n: int, times: int) -> list[Path]:
    return [leaf.path for leaf in expand_leftmost(standard_basis(Signature(n=n, r=1)), times)]


def _expand_orbit(orbit: Orbit, paths: list[Path]) -> list[Orbit]:
    return [tuple(SimpleWord(w.generator, w.path + path) for w in orbit) for path in paths]


def _equalize(n: int, left: list[Orbit], right: list[Orbit]) -> tuple[list[Orbit], list[Orbit]]:
    """Expand one orbit per size on the side with fewer orbits of that size until the counts agree."""
    left_by_size: dict[int, list[Orbit]] = defaultdict(list)
    right_by_size: dict[int, list[Orbit]] = defaultdict(list)
    for orbit in left:
        left_by_size[len(orbit)].append(orbit)
    for orbit in right:
        right_by_size[len(orbit)].append(orbit)

    for size in sorted(left_by_size):
        smaller, larger = left_by_size[size], right_by_size[size]
        if len(smaller) > len(larger):
            smaller, larger = larger, smaller
        difference = len(larger) - len(smaller)
        if difference:
            first = smaller.pop(0)
            smaller[:0] = _expand_orbit(first, _expansion_paths(n, difference // (n - 1)))

    def flatten(by_size: dict[int, list[Orbit]]) -> list[Orbit]:
        return [orbit for size in sorted(by_size) for orbit in by_size[size]]

    return flatten(left_by_size), flatten(right_by_size)


@log_operation("conjugate_periodic")
def conjugate_periodic(psi: Automorphism, phi: Automorphism) -> ConjugacyCertificate:
    """Decide conjugacy of two periodic automorphisms and build rho with rho^-1 psi rho = phi.

    Raises:
        NotPeriodicError: If either input has infinite order.
        SignatureError: If the inputs act on different algebras.
    """
    if psi.sig != phi.sig:
        raise SignatureError(f"cannot compare {psi.sig} with {phi.sig}")
    n = psi.sig.n
    psi_type, phi_type = cycle_type(psi), cycle_type(phi)
    if psi_type.sizes != phi_type.sizes:
        log_decision(logger, "conjugate_periodic", "not-conjugate", gate="cycle type")
        return ConjugacyCertificate.refuted("cycle type")
    if any((psi_type.entries[d] - phi_type.entries[d]) % (n - 1) for d in psi_type.sizes):
        log_decision(logger, "conjugate_periodic", "not-conjugate", gate="multiplicity congruence")
        return ConjugacyCertificate.refuted("multiplicity congruence")

    left, right = _equalize(n, orbits_of_periodic(psi), orbits_of_periodic(phi))
    pairs = [
        (source, target)
        for left_orbit, right_orbit in zip(left, right, strict=True)
        for source, target in zip(left_orbit, right_orbit, strict=True)
    ]
    rho = from_map(psi.sig, pairs)
    if conjugate_by(psi, rho) != phi:
        raise AssertionError("orbit matching did not conjugate psi to phi")
    log_decision(logger, "conjugate_periodic", "conjugate", orbits=len(left))
    return ConjugacyCertificate.witnessed(rho)

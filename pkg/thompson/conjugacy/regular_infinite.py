"""Conjugacy of regular infinite automorphisms.

A conjugator is pinned down, class by class, by the image of one type B
leaf; that image can be taken to be an endpoint of a semi-infinite component
of phi with the same characteristic.  Images of the other type B leaves follow
along links u Gamma psi^k = x Delta found in the component scans, and type C
leaves follow their witnesses.
"""

import functools
import itertools
import logging
from collections import deque
from collections.abc import Iterator
from typing import NamedTuple

from thompson.algebra.bases import is_basis
from thompson.algebra.paths import Path
from thompson.algebra.words import SimpleWord, Word, descend
from thompson.automorphism.symbol import Automorphism, apply, apply_power, conjugate_by, from_map, minimal_expansion_for
from thompson.config import search_limits
from thompson.exceptions import NotRegularInfiniteError, SearchLimitExceeded, SignatureError, ThompsonError
from thompson.models import ConjugacyCertificate
from thompson.orbits.forms import QnfData, characteristic_of
from thompson.orbits.orbit_test import orbit_test
from thompson.orbits.qnf import quasi_normal_basis
from thompson.orbits.scanning import ComponentScan, scan_component
from thompson.orbits.types import Characteristic, LeafType
from thompson.utils.logging_utils import log_decision, log_operation, log_search_progress
from thompson.utils.union_find import UnionFind

logger = logging.getLogger(__name__)

Images = dict[SimpleWord, Word]


class Link(NamedTuple):
    """source source_path psi^power = target target_path."""

    source: SimpleWord
    source_path: Path
    power: int
    target: SimpleWord
    target_path: Path


def _require_regular_infinite(psi: Automorphism) -> QnfData:
    qnf = quasi_normal_basis(psi)
    if not qnf.is_regular_infinite:
        raise NotRegularInfiniteError("automorphism has periodic points")
    return qnf


def _component_scans(psi: Automorphism, qnf: QnfData) -> list[ComponentScan]:
    """Scans of every v in X, Y and Z, where Y is the minimal expansion of X for psi and Z = Y psi."""
    basis = qnf.basis
    roots = set(basis.leaves)
    roots.update(minimal_expansion_for([psi], basis).leaves)
    roots.update(minimal_expansion_for([psi.inverse], basis).leaves)
    return [scan_component(psi, basis, root) for root in sorted(roots)]


def equivalence_classes(psi: Automorphism, qnf: QnfData | None = None) -> list[frozenset[SimpleWord]]:
    """Classes of the relation x ~ x' whenever x Gamma and x' Delta share a psi-orbit, sorted by least element.

    Raises:
        NotRegularInfiniteError: If psi has periodic points.
    """
    qnf = qnf or _require_regular_infinite(psi)
    basis = qnf.basis
    classes = UnionFind(basis.leaves)
    for scan in _component_scans(psi, qnf):
        leaves = [basis.split(element)[0] for _, element in scan.indexed()]  # type: ignore[index]
        for leaf in leaves[1:]:
            classes.union(leaves[0], leaf)
    for pond in qnf.ponds:
        classes.union(basis.split(pond.terminal)[0], basis.split(pond.initial)[0])  # type: ignore[index]
    return sorted((frozenset(group) for group in classes.classes()), key=min)


def class_shift(psi: Automorphism, qnf: QnfData, members: frozenset[SimpleWord]) -> Automorphism:
    """theta: psi on the subalgebra generated by one class, the identity on the others."""
    return from_map(psi.sig, [(x, apply(psi, x) if x in members else x) for x in qnf.basis.leaves])


def _reroute(qnf: QnfData, link: Link) -> Link:
    """Replace type C ends of a link by the type B leaves of their witnesses."""
    if qnf.types[link.target] is LeafType.TRANSIENT:
        w = qnf.witnesses[link.target]
        link = Link(link.source, link.source_path, link.power + w.power, w.leaf, w.path + link.target_path)
    if qnf.types[link.source] is LeafType.TRANSIENT:
        w = qnf.witnesses[link.source]
        link = Link(w.leaf, w.path + link.source_path, link.power - w.power, link.target, link.target_path)
    return link


def characteristic_links(psi: Automorphism, qnf: QnfData) -> dict[tuple[SimpleWord, SimpleWord], Link]:
    """One link for each ordered pair of distinct type B leaves that the scans connect."""
    basis = qnf.basis
    raw: list[Link] = []
    for scan in _component_scans(psi, qnf):
        elements = list(scan.indexed())
        for (i, first), (j, second) in itertools.permutations(elements, 2):
            source, source_path = basis.split(first)  # type: ignore[misc]
            target, target_path = basis.split(second)  # type: ignore[misc]
            raw.append(Link(source, source_path, j - i, target, target_path))
    for pond in qnf.ponds:
        terminal, terminal_path = basis.split(pond.terminal)  # type: ignore[misc]
        initial, initial_path = basis.split(pond.initial)  # type: ignore[misc]
        raw.append(Link(terminal, terminal_path, pond.width, initial, initial_path))
        raw.append(Link(initial, initial_path, -pond.width, terminal, terminal_path))

    links: dict[tuple[SimpleWord, SimpleWord], Link] = {}
    for link in map(functools.partial(_reroute, qnf), raw):
        if link.source != link.target:
            links.setdefault((link.source, link.target), link)
    return links


def _spanning_order(
    representative: SimpleWord, members: list[SimpleWord], links: dict[tuple[SimpleWord, SimpleWord], Link]
) -> tuple[list[SimpleWord], dict[SimpleWord, Link]]:
    """Breadth-first order of the type B leaves of a class, with the link reaching each one."""
    order = [representative]
    reached_by: dict[SimpleWord, Link] = {}
    queue = deque([representative])
    while queue:
        source = queue.popleft()
        for target in members:
            link = links.get((source, target))
            if link is not None and target not in reached_by and target != representative:
                reached_by[target] = link
                order.append(target)
                queue.append(target)
    if len(order) != len(members):
        raise ThompsonError(f"characteristic leaves of the class of {representative} are not linked")
    return order, reached_by


def _endpoints_by_characteristic(phi: Automorphism, qnf: QnfData) -> dict[Characteristic, list[SimpleWord]]:
    grouped: dict[Characteristic, list[SimpleWord]] = {}
    for endpoint in sorted(qnf.terminals | qnf.initials):
        characteristic = characteristic_of(phi, qnf, endpoint)
        if characteristic is not None:
            grouped.setdefault(characteristic, []).append(endpoint)
    return grouped


def _class_images(
    psi: Automorphism,
    phi: Automorphism,
    qnf: QnfData,
    members: frozenset[SimpleWord],
    links: dict[tuple[SimpleWord, SimpleWord], Link],
    endpoints: dict[Characteristic, list[SimpleWord]],
) -> Iterator[Images]:
    """Every assignment of images to one class that the orbit equations allow."""
    characteristic_leaves = [x for x in sorted(members) if qnf.types[x] is LeafType.CHARACTERISTIC]
    transient_leaves = [x for x in sorted(members) if qnf.types[x] is LeafType.TRANSIENT]
    representative = characteristic_leaves[0]
    order, reached_by = _spanning_order(representative, characteristic_leaves, links)

    def extend(index: int, images: Images) -> Iterator[Images]:
        if index == len(order):
            for x in transient_leaves:
                w = qnf.witnesses[x]
                images[x] = apply_power(phi, descend(images[w.leaf], w.path), -w.power)
            yield images
            return
        x = order[index]
        link = reached_by[x]
        target = descend(images[link.source], link.source_path)
        for endpoint in endpoints.get(qnf.characteristics[x], []):
            answer = orbit_test(phi, descend(endpoint, link.target_path), target)
            if answer.related and answer.shift is not None:
                image = apply_power(phi, endpoint, answer.shift + link.power)
                yield from extend(index + 1, {**images, x: image})

    for seed in endpoints.get(qnf.characteristics[representative], []):
        yield from extend(1, {representative: seed})


@log_operation("conjugate_regular_infinite")
def conjugate_regular_infinite(psi: Automorphism, phi: Automorphism) -> ConjugacyCertificate:
    """Decide conjugacy of two regular infinite automorphisms and build rho with rho^-1 psi rho = phi.

    Raises:
        NotRegularInfiniteError: If either input has periodic points.
        SignatureError: If the inputs act on different algebras.
        SearchLimitExceeded: If more candidate conjugators than the step cap would be tried.
    """
    if psi.sig != phi.sig:
        raise SignatureError(f"cannot compare {psi.sig} with {phi.sig}")
    qnf_psi = _require_regular_infinite(psi)
    qnf_phi = _require_regular_infinite(phi)
    if qnf_psi.multipliers != qnf_phi.multipliers:
        log_decision(logger, "conjugate_regular_infinite", "not-conjugate", gate="multiplier set")
        return ConjugacyCertificate.refuted("multiplier set")

    classes = equivalence_classes(psi, qnf_psi)
    links = characteristic_links(psi, qnf_psi)
    endpoints = _endpoints_by_characteristic(phi, qnf_phi)
    per_class = [list(_class_images(psi, phi, qnf_psi, members, links, endpoints)) for members in classes]

    limit = search_limits().max_steps
    for steps, choice in enumerate(itertools.product(*per_class), start=1):
        if steps > limit:
            raise SearchLimitExceeded("too many candidate conjugators", procedure="conjugate", steps=limit)
        if steps % 1000 == 0:
            log_search_progress(logger, "conjugate", steps, limit)
        images: Images = {}
        for assignment in choice:
            images.update(assignment)
        pairs = [(x, images[x]) for x in qnf_psi.basis.leaves]
        if not is_basis(psi.sig, images.values()):
            continue
        rho = from_map(psi.sig, pairs)
        if conjugate_by(psi, rho) == phi:
            log_decision(logger, "conjugate_regular_infinite", "conjugate", classes=len(classes), candidates=steps)
            return ConjugacyCertificate.witnessed(rho)

    log_decision(logger, "conjugate_regular_infinite", "not-conjugate", gate="exhausted search")
    return ConjugacyCertificate.refuted("exhausted search")
